#include "affhecke/kl_table.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace affhecke {

const LaurentInt* KLRow::find(ElemId y) const {
  auto it = std::lower_bound(lower.begin(), lower.end(), y);
  if (it == lower.end() || *it != y) return nullptr;
  return &P[static_cast<std::size_t>(it - lower.begin())];
}

KLTable::KLTable(int n) : reg_(n) {}

KLTable::~KLTable() {
  for (auto& seg : rows_) delete[] seg.load();
}

const KLRow* KLTable::lookup(ElemId w) const {
  const std::size_t seg = w >> kSegBits;
  if (seg >= kMaxSegs) return nullptr;
  auto* arr = rows_[seg].load(std::memory_order_acquire);
  if (arr == nullptr) return nullptr;
  return arr[w & (kSegSize - 1)].load(std::memory_order_acquire);
}

bool KLTable::has_row(ElemId w) const { return lookup(w) != nullptr; }

void KLTable::publish(std::unique_ptr<KLRow> r) {
  const ElemId w = r->w;
  const std::size_t seg = w >> kSegBits;
  if (seg >= kMaxSegs) throw Error("KL table capacity exhausted");
  auto* arr = rows_[seg].load(std::memory_order_relaxed);
  if (arr == nullptr) {
    arr = new std::atomic<const KLRow*>[kSegSize];
    for (std::size_t i = 0; i < kSegSize; ++i) arr[i].store(nullptr, std::memory_order_relaxed);
    rows_[seg].store(arr, std::memory_order_release);
  }
  arr[w & (kSegSize - 1)].store(r.get(), std::memory_order_release);
  owned_.push_back(std::move(r));
  count_.fetch_add(1, std::memory_order_relaxed);
}

const KLRow& KLTable::ensure_locked(ElemId w) {
  if (const KLRow* r = lookup(w)) return *r;
  auto r = std::make_unique<KLRow>(compute_kl_row(reg_, w, [this](ElemId x) -> const KLRow& { return ensure_locked(x); }));
  const KLRow& ref = *r;
  publish(std::move(r));
  return ref;
}

const KLRow& KLTable::row(ElemId w) {
  if (const KLRow* r = lookup(w)) return *r;
  if (reg_.omega_power(w) != 0) throw Error("KL rows are stored for W_a only");
  std::lock_guard lock(fill_mu_);
  return ensure_locked(w);
}

LaurentInt KLTable::P(ElemId y, ElemId w) {
  const int m = reg_.omega_power(w);
  if (reg_.omega_power(y) != m) return LaurentInt();
  if (m != 0) {
    y = reg_.omega_left(y, -m);
    w = reg_.omega_left(w, -m);
  }
  if (reg_.length(y) > reg_.length(w)) return LaurentInt();
  const LaurentInt* p = row(w).find(y);
  return p ? *p : LaurentInt();
}

Integer KLTable::mu(ElemId y, ElemId w) {
  const int d = reg_.length(w) - reg_.length(y);
  if (d <= 0 || d % 2 == 0) return 0;
  return P(y, w).coeff(d - 1);
}

bool KLTable::bruhat_leq(ElemId y, ElemId w) {
  const int m = reg_.omega_power(w);
  if (reg_.omega_power(y) != m) return false;
  if (reg_.length(y) > reg_.length(w)) return false;
  return row(reg_.omega_left(w, -m)).contains(reg_.omega_left(y, -m));
}

std::vector<std::pair<ElemId, Integer>> KLTable::mu_list(ElemId w) {
  const int m = reg_.omega_power(w);
  if (m == 0) return row(w).mu;
  std::vector<std::pair<ElemId, Integer>> out;
  for (const auto& [z, c] : row(reg_.omega_left(w, -m)).mu) out.emplace_back(reg_.omega_left(z, m), c);
  return out;
}

void KLTable::fill(const std::vector<AffPerm>& closed_set, ExecMode mode) {
  std::map<int, std::vector<ElemId>> levels;
  for (const auto& w : closed_set) {
    if (w.omega_power() != 0) throw Error("fill expects elements of W_a");
    levels[w.length()].push_back(reg_.intern(w));
  }
  for (auto& [len, ids] : levels) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::remove_if(ids.begin(), ids.end(), [this](ElemId w) { return has_row(w); }), ids.end());
    std::vector<std::unique_ptr<KLRow>> out(ids.size());
    std::vector<std::string> errors(ids.size());
    parallel_for(mode, static_cast<std::ptrdiff_t>(ids.size()), [&](std::ptrdiff_t i) {
      try {
        out[static_cast<std::size_t>(i)] = std::make_unique<KLRow>(
            compute_kl_row(reg_, ids[static_cast<std::size_t>(i)], [this](ElemId x) -> const KLRow& { return row(x); }));
      } catch (const std::exception& e) {
        errors[static_cast<std::size_t>(i)] = e.what();
      }
    });
    for (const auto& e : errors)
      if (!e.empty()) throw Error(e);
    std::lock_guard lock(fill_mu_);
    for (auto& r : out)
      if (!has_row(r->w)) publish(std::move(r));
  }
}

std::size_t KLTable::row_count() const { return count_.load(std::memory_order_relaxed); }

std::vector<ElemId> KLTable::computed_rows() const {
  std::vector<ElemId> ids;
  {
    std::lock_guard lock(fill_mu_);
    for (const auto& r : owned_) ids.push_back(r->w);
  }
  std::sort(ids.begin(), ids.end(), [this](ElemId a, ElemId b) { return CanonicalLess{}(reg_.elem(a), reg_.elem(b)); });
  return ids;
}

void KLTable::save(std::ostream& os) const {
  os << "klv1 n=" << rank() << '\n';
  save_rows(os, {});
}

void KLTable::save_rows(std::ostream& os, const std::set<ElemId>& skip) const {
  for (ElemId w : computed_rows()) {
    if (skip.count(w)) continue;
    const KLRow& r = *lookup(w);
    std::vector<std::size_t> order(r.lower.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return CanonicalLess{}(reg_.elem(r.lower[a]), reg_.elem(r.lower[b])); });
    const std::string ws = reg_.elem(w).window_str();
    for (std::size_t i : order)
      os << "y=" << reg_.elem(r.lower[i]).window_str() << "; w=" << ws << "; P=" << r.P[i].str() << '\n';
  }
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::set<ElemId> KLTable::load(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error("line 1: empty table file");
  line = trim(line);
  const std::string expected = "klv1 n=" + std::to_string(rank());
  if (line.rfind("klv", 0) != 0 || line.rfind("klv1 ", 0) != 0) throw Error("line 1: unsupported table version '" + line + "'");
  if (line != expected) throw Error("line 1: table header '" + line + "' does not match '" + expected + "'");

  std::map<ElemId, std::vector<std::pair<ElemId, LaurentInt>>> rows;
  std::vector<ElemId> order;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& what) { throw Error("line " + std::to_string(lineno) + ": " + what); };
    const auto p1 = line.find("; w=");
    const auto p2 = line.find("; P=");
    if (line.rfind("y=", 0) != 0 || p1 == std::string::npos || p2 == std::string::npos || p2 < p1) fail("malformed entry");
    AffPerm y, w;
    LaurentInt P;
    try {
      y = AffPerm::parse(rank(), line.substr(2, p1 - 2));
      w = AffPerm::parse(rank(), line.substr(p1 + 4, p2 - p1 - 4));
      P = LaurentInt::parse(line.substr(p2 + 4));
    } catch (const std::exception& e) {
      fail(e.what());
    }
    if (w.omega_power() != 0 || y.omega_power() != 0) fail("entry outside W_a");
    if (P.is_zero()) fail("zero polynomial stored");
    const ElemId wi = reg_.intern(w);
    auto [it, fresh] = rows.try_emplace(wi);
    if (fresh) order.push_back(wi);
    it->second.emplace_back(reg_.intern(y), std::move(P));
  }

  std::set<ElemId> seen;
  std::lock_guard lock(fill_mu_);
  for (ElemId w : order) {
    auto& entries = rows[w];
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    auto r = std::make_unique<KLRow>();
    r->w = w;
    for (auto& [y, P] : entries) {
      if (!r->lower.empty() && r->lower.back() == y) throw Error("duplicate entry for w=" + reg_.elem(w).window_str());
      r->lower.push_back(y);
      r->P.push_back(std::move(P));
    }
    const LaurentInt* top = r->find(w);
    if (top == nullptr || *top != LaurentInt(1)) throw Error("row w=" + reg_.elem(w).window_str() + " lacks P(w,w)=1");
    const int lw = reg_.length(w);
    for (std::size_t i = 0; i < r->lower.size(); ++i) {
      const int d = lw - reg_.length(r->lower[i]);
      if (d % 2 == 1) {
        Integer m = r->P[i].coeff(d - 1);
        if (m != 0) r->mu.emplace_back(r->lower[i], std::move(m));
      }
    }
    seen.insert(w);
    if (const KLRow* old = lookup(w)) {
      if (old->lower != r->lower || old->P != r->P) throw Error("row w=" + reg_.elem(w).window_str() + " conflicts with computed values");
      continue;
    }
    publish(std::move(r));
  }
  return seen;
}

}  // namespace affhecke
