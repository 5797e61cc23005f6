#include "affhecke/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "affhecke/hecke.hpp"

namespace affhecke::oracle {

std::unordered_map<AffPerm, int, AffPermHash> bfs_lengths(int n, int radius, GenMask gens) {
  std::unordered_map<AffPerm, int, AffPermHash> dist;
  std::deque<AffPerm> queue;
  dist.emplace(AffPerm::identity(n), 0);
  queue.push_back(AffPerm::identity(n));
  while (!queue.empty()) {
    const AffPerm x = queue.front();
    queue.pop_front();
    const int d = dist.at(x);
    if (d == radius) continue;
    for (int k = 0; k < n; ++k) {
      if (!has_gen(gens, k)) continue;
      AffPerm y = x.right_mul_gen(k);
      if (dist.emplace(y, d + 1).second) queue.push_back(y);
    }
  }
  return dist;
}

std::vector<AffPerm> lower_interval(const AffPerm& w) {
  const CanonicalWord cw = canonical_word(w);
  std::set<AffPerm> subs{AffPerm::omega(w.rank(), cw.omega_power)};
  for (int k : cw.word) {
    std::vector<AffPerm> next;
    for (const auto& x : subs) next.push_back(x.right_mul_gen(k));
    subs.insert(next.begin(), next.end());
  }
  std::vector<AffPerm> out(subs.begin(), subs.end());
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

bool subword_leq(const AffPerm& y, const AffPerm& w) {
  if (y.omega_power() != w.omega_power() || y.length() > w.length()) return false;
  const auto lower = lower_interval(w);
  return std::find(lower.begin(), lower.end(), y) != lower.end();
}

namespace {

// Row echelon form over Q, fed one equation at a time.
class RationalSystem {
 public:
  explicit RationalSystem(std::size_t unknowns) : m_(unknowns) {}

  /// row . x = rhs; returns false on inconsistency.
  bool add(std::vector<Rational> row, Rational rhs) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (row[p] == 0) continue;
      const Rational f = row[p] / rows_[r][p];
      for (std::size_t j = p; j < m_; ++j) row[j] -= f * rows_[r][j];
      rhs -= f * rhs_[r];
    }
    std::size_t p = 0;
    while (p < m_ && row[p] == 0) ++p;
    if (p == m_) return rhs == 0;
    // keep rows sorted by pivot so reduction stays forward-only
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(row));
    rhs_.insert(rhs_.begin() + static_cast<std::ptrdiff_t>(at), std::move(rhs));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), p);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  std::vector<Rational> solve() const {
    std::vector<Rational> x(m_);
    for (std::size_t r = rows_.size(); r-- > 0;) {
      const std::size_t p = pivots_[r];
      Rational s = rhs_[r];
      for (std::size_t j = p + 1; j < m_; ++j) s -= rows_[r][j] * x[j];
      x[p] = s / rows_[r][p];
    }
    return x;
  }

 private:
  std::size_t m_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

std::optional<std::map<AffPerm, LaurentInt>> kl_by_bar_invariance(const AffPerm& w) {
  const int lw = w.length();
  const auto lower = lower_interval(w);

  // unknown p_{y,k}: coefficient of q^k in P_{y,w}, y < w
  std::map<AffPerm, std::pair<std::size_t, int>> slot;  // y -> (first unknown, count)
  std::size_t m = 0;
  for (const auto& y : lower) {
    if (y == w) continue;
    const int d = (lw - y.length() - 1) / 2;
    slot[y] = {m, d + 1};
    m += static_cast<std::size_t>(d + 1);
  }

  std::map<AffPerm, HeckeElt> bars;
  for (const auto& y : lower) bars.emplace(y, bar_elt(HeckeElt::T(y)));

  // v^{lw} sum_y bar(P_y) bar(T_y) = v^{-lw} sum_y P_y T_y, coefficientwise.
  std::map<std::pair<AffPerm, int>, std::pair<std::vector<Rational>, Rational>> eqs;
  auto eq = [&](const AffPerm& z, int e) -> auto& {
    auto [it, fresh] = eqs.try_emplace({z, e});
    if (fresh) it->second.first.assign(m, Rational(0));
    return it->second;
  };
  for (const auto& y : lower) {
    for (const auto& [z, r] : bars.at(y).terms()) {
      r.for_each_term([&](int e, const Integer& c) {
        if (y == w) {
          eq(z, e + lw).second -= Rational(c);
        } else {
          const auto [first, count] = slot.at(y);
          for (int k = 0; k < count; ++k) eq(z, e + lw - 2 * k).first[first + static_cast<std::size_t>(k)] += Rational(c);
        }
      });
    }
  }
  for (const auto& z : lower) {
    if (z == w) {
      eq(z, -lw).second += 1;
      continue;
    }
    const auto [first, count] = slot.at(z);
    for (int k = 0; k < count; ++k) eq(z, 2 * k - lw).first[first + static_cast<std::size_t>(k)] -= 1;
  }

  RationalSystem sys(m);
  for (auto& [key, e] : eqs)
    if (!sys.add(std::move(e.first), std::move(e.second))) return std::nullopt;
  if (sys.rank() != m) return std::nullopt;
  const auto x = sys.solve();

  std::map<AffPerm, LaurentInt> out;
  out.emplace(w, LaurentInt(1));
  for (const auto& [y, s] : slot) {
    LaurentInt p;
    for (int k = 0; k < s.second; ++k) {
      const Rational& c = x[s.first + static_cast<std::size_t>(k)];
      if (denominator(c) != 1) return std::nullopt;
      p += LaurentInt::monomial(numerator(c), 2 * k);
    }
    out.emplace(y, std::move(p));
  }
  return out;
}

Partition greene_shape(const std::vector<int>& perm) {
  const std::size_t n = perm.size();
  // longest strictly decreasing subsequence of the masked entries
  auto lds = [&](unsigned mask) {
    std::vector<int> best(n, 0);
    int top = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((mask >> i) & 1u)) continue;
      best[i] = 1;
      for (std::size_t j = 0; j < i; ++j)
        if (((mask >> j) & 1u) && perm[j] > perm[i]) best[i] = std::max(best[i], best[j] + 1);
      top = std::max(top, best[i]);
    }
    return top;
  };
  // a_k = largest subset coverable by k increasing subsequences, i.e. with
  // no decreasing subsequence longer than k.
  std::vector<int> a(n + 1, 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int d = lds(mask);
    const int size = __builtin_popcount(mask);
    for (std::size_t k = static_cast<std::size_t>(d); k <= n; ++k) a[k] = std::max(a[k], size);
  }
  std::vector<int> parts;
  for (std::size_t k = 1; k <= n; ++k)
    if (a[k] > a[k - 1]) parts.push_back(a[k] - a[k - 1]);
  return Partition(parts);
}

int commutator_nullity(const Partition& jordan_type) {
  const int n = jordan_type.size();
  std::vector<std::vector<int>> e(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  int start = 0;
  for (int b : jordan_type.parts()) {
    for (int i = 0; i + 1 < b; ++i) e[static_cast<std::size_t>(start + i)][static_cast<std::size_t>(start + i + 1)] = 1;
    start += b;
  }
  const std::size_t N = static_cast<std::size_t>(n * n);
  auto at = [n](int i, int j) { return static_cast<std::size_t>(i * n + j); };
  // column (a,b) = image of the matrix unit E_ab
  RationalSystem sys(N);
  std::size_t rank = 0;
  std::vector<std::vector<Rational>> image(N, std::vector<Rational>(N, Rational(0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto& col = image[at(a, b)];
      // E_ab e - e E_ab: row a gets e[b][*], column b gets -e[*][a]
      for (int j = 0; j < n; ++j) col[at(a, j)] += e[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
      for (int i = 0; i < n; ++i) col[at(i, b)] -= e[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
    }
  for (auto& col : image) {
    const std::size_t before = sys.rank();
    sys.add(col, Rational(0));
    rank += sys.rank() - before;
  }
  return static_cast<int>(N - rank);
}

}  // namespace affhecke::oracle
