#include "affhecke/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace affhecke {

void svec_add_scaled(SVec& x, const SVec& y, const LaurentInt& c) {
  if (c.is_zero()) return;
  for (const auto& [k, a] : y) {
    auto [it, fresh] = x.try_emplace(k, a * c);
    if (!fresh) {
      it->second += a * c;
      if (it->second.is_zero()) x.erase(it);
    }
  }
}

namespace {

void combo_add_scaled(Combo& x, const Combo& y, const LaurentInt& c) { svec_add_scaled(x, y, c); }

LaurentInt unit_inverse(const LaurentInt& u) {
  const auto [deg, c] = u.leading();
  return LaurentInt::monomial(c, -deg);  // c = +-1
}

}  // namespace

void UnitEchelon::add_generator(int index, SVec vec) { add(std::move(vec), Combo{{index, LaurentInt(1)}}); }

void UnitEchelon::add(SVec vec, Combo combo) {
  reduce_in_place(vec, combo);
  if (vec.empty()) return;
  if (!try_pivot(vec, combo)) stuck_.emplace_back(std::move(vec), std::move(combo));
}

// Row k has zeros at the pivots of rows 0..k-1, so eliminating in increasing
// row order never reintroduces a cleared pivot.
void UnitEchelon::reduce_in_place(SVec& vec, Combo& combo) const {
  int last = -1;
  while (true) {
    int best = -1;
    for (const auto& [k, c] : vec) {
      auto it = pivot_row_.find(k);
      if (it != pivot_row_.end() && it->second > last && (best < 0 || it->second < best)) best = it->second;
    }
    if (best < 0) return;
    const Row& r = rows_[static_cast<std::size_t>(best)];
    const LaurentInt factor = vec.at(r.pivot) * r.inverse;
    svec_add_scaled(vec, r.vec, -factor);
    combo_add_scaled(combo, r.combo, -factor);
    last = best;
  }
}

bool UnitEchelon::try_pivot(SVec& vec, Combo& combo) {
  for (const auto& [k, c] : vec) {
    if (!c.is_unit()) continue;
    Row r{k, unit_inverse(c), std::move(vec), std::move(combo)};
    pivot_row_.emplace(k, static_cast<int>(rows_.size()));
    rows_.push_back(std::move(r));
    return true;
  }
  return false;
}

void UnitEchelon::settle() {
  bool progress = true;
  while (progress && !stuck_.empty()) {
    progress = false;
    auto pending = std::move(stuck_);
    stuck_.clear();
    for (auto& [vec, combo] : pending) {
      reduce_in_place(vec, combo);
      if (vec.empty()) continue;
      if (try_pivot(vec, combo)) {
        progress = true;
      } else {
        stuck_.emplace_back(std::move(vec), std::move(combo));
      }
    }
  }
}

UnitEchelon::Reduction UnitEchelon::reduce(SVec target) const {
  Reduction r{std::move(target), {}};
  reduce_in_place(r.residual, r.combo);
  return r;
}

std::vector<int> UnitEchelon::pivot_columns() const {
  std::vector<int> out;
  for (const auto& r : rows_) out.push_back(r.pivot);
  return out;
}

std::optional<RationalSolution> rational_solve(const std::vector<SVec>& cols, const SVec& rhs, std::size_t* rank_out) {
  std::set<int> keys;
  for (const auto& c : cols)
    for (const auto& [k, a] : c) keys.insert(k);
  for (const auto& [k, a] : rhs) keys.insert(k);
  std::map<int, std::size_t> row_of;
  for (int k : keys) row_of.emplace(k, row_of.size());
  const std::size_t m = keys.size();
  const std::size_t ncol = cols.size();
  std::vector<std::vector<LaurentInt>> M(m, std::vector<LaurentInt>(ncol + 1));
  for (std::size_t j = 0; j < ncol; ++j)
    for (const auto& [k, a] : cols[j]) M[row_of[k]][j] = a;
  for (const auto& [k, a] : rhs) M[row_of[k]][ncol] = a;

  LaurentInt prev(1);
  std::size_t r = 0;
  std::vector<std::size_t> pivcol;
  for (std::size_t c = 0; c < ncol && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(M[p], M[r]);
    const LaurentInt piv = M[r][c];
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      const LaurentInt f = M[i][c];
      for (std::size_t j = 0; j <= ncol; ++j) {
        if (j == c) continue;
        LaurentInt num = piv * M[i][j];
        if (!f.is_zero() && !M[r][j].is_zero()) num -= f * M[r][j];
        if (num.is_zero()) {
          M[i][j] = LaurentInt();
          continue;
        }
        LaurentInt q;
        if (!try_divide(num, prev, q)) throw Error("inexact division in fraction-free elimination");
        M[i][j] = std::move(q);
      }
      M[i][c] = LaurentInt();
    }
    prev = piv;
    pivcol.push_back(c);
    ++r;
  }
  if (rank_out) *rank_out = r;
  for (std::size_t i = r; i < m; ++i)
    if (!M[i][ncol].is_zero()) return std::nullopt;
  RationalSolution sol;
  sol.numerators.assign(ncol, LaurentInt());
  sol.denominator = prev;
  sol.rank = r;
  for (std::size_t i = 0; i < r; ++i) sol.numerators[pivcol[i]] = M[i][ncol];
  return sol;
}

bool f2_in_span(const std::vector<SVec>& rows, const SVec& target) {
  auto parity = [](const LaurentInt& a) {
    Integer s = 0;
    a.for_each_term([&](int, const Integer& c) { s += c; });
    return (s & 1) != 0;
  };
  std::set<int> keys;
  for (const auto& r : rows)
    for (const auto& [k, a] : r) keys.insert(k);
  for (const auto& [k, a] : target) keys.insert(k);
  std::map<int, std::size_t> bit;
  for (int k : keys) bit.emplace(k, bit.size());
  const std::size_t words = (keys.size() + 63) / 64;
  using Bits = std::vector<std::uint64_t>;
  auto pack = [&](const SVec& v) {
    Bits b(words, 0);
    for (const auto& [k, a] : v)
      if (parity(a)) b[bit[k] / 64] |= std::uint64_t{1} << (bit[k] % 64);
    return b;
  };
  auto lowest = [&](const Bits& b) -> long {
    for (std::size_t w = 0; w < words; ++w)
      if (b[w]) return static_cast<long>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(b[w])));
    return -1;
  };
  std::map<long, Bits> basis;  // pivot bit -> row
  auto reduce = [&](Bits b) {
    for (long p = lowest(b); p >= 0;) {
      auto it = basis.find(p);
      if (it == basis.end()) return std::make_pair(b, p);
      for (std::size_t w = 0; w < words; ++w) b[w] ^= it->second[w];
      p = lowest(b);
    }
    return std::make_pair(b, -1L);
  };
  for (const auto& r : rows) {
    auto [b, p] = reduce(pack(r));
    if (p >= 0) basis.emplace(p, std::move(b));
  }
  return reduce(pack(target)).second < 0;
}

namespace {

Integer content(const LaurentInt& a) {
  Integer g = 0;
  a.for_each_term([&](int, const Integer& c) { g = boost::multiprecision::gcd(g, c); });
  return g;
}

LaurentInt primitive(const LaurentInt& a) {
  if (a.is_zero()) return a;
  Integer g = content(a);
  if (a.leading().second < 0) g = -g;
  LaurentInt out;
  a.for_each_term([&](int e, const Integer& c) { out += LaurentInt::monomial(c / g, e - a.low_degree()); });
  return out;
}

}  // namespace

LaurentInt laurent_gcd(const LaurentInt& a, const LaurentInt& b) {
  if (a.is_zero()) return primitive(b) * LaurentInt(content(b));
  if (b.is_zero()) return primitive(a) * LaurentInt(content(a));
  const Integer c = boost::multiprecision::gcd(content(a), content(b));
  LaurentInt x = primitive(a), y = primitive(b);
  if (x.high_degree() < y.high_degree()) std::swap(x, y);
  while (!y.is_zero()) {
    // pseudo-remainder of x by y, then primitive part
    while (!x.is_zero() && x.high_degree() >= y.high_degree()) {
      const auto [dx, cx] = x.leading();
      const auto [dy, cy] = y.leading();
      x = x * LaurentInt(cy) - LaurentInt::monomial(cx, dx - dy) * y;
    }
    x = primitive(x);
    std::swap(x, y);
  }
  return x * LaurentInt(c);
}

}  // namespace affhecke
