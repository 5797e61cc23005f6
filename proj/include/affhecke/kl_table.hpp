#pragma once

// Memoized Kazhdan-Lusztig polynomials P_{y,w} and mu(y,w).
//
// Rows are stored for w in W_a (omega component 0) only; the extended group
// is handled by P_{om^m y, om^m w} = P_{y,w} and P = 0 across components.
// A row holds the whole lower Bruhat interval [e, w], so membership in the
// row decides y <= w as a by-product.
//
// Thread-safety: completed rows are immutable and published through atomic
// pointers, so any number of readers may run concurrently with a lazy fill.
// Lazy fills are serialized by an internal mutex. fill() computes a
// downward-closed set level by level, each level in parallel.

#include <atomic>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "affhecke/laurent.hpp"
#include "affhecke/parallel.hpp"
#include "affhecke/registry.hpp"

namespace affhecke {

struct KLRow {
  ElemId w = kNoElem;
  std::vector<ElemId> lower;   // [e, w], sorted by id
  std::vector<LaurentInt> P;   // P[i] = P_{lower[i], w}, a polynomial in v^2
  std::vector<std::pair<ElemId, Integer>> mu;  // z < w with mu(z, w) != 0

  const LaurentInt* find(ElemId y) const;
  bool contains(ElemId y) const { return find(y) != nullptr; }
};

/// Pure row kernel shared by the serial and parallel drivers. Every row it
/// reads must already be available through `lookup`.
template <class Lookup>
KLRow compute_kl_row(ElementRegistry& reg, ElemId w, Lookup&& lookup);

class KLTable {
 public:
  explicit KLTable(int n);
  KLTable(const KLTable&) = delete;
  KLTable& operator=(const KLTable&) = delete;
  ~KLTable();

  int rank() const { return reg_.rank(); }
  ElementRegistry& registry() { return reg_; }
  ElemId id(const AffPerm& w) { return reg_.intern(w); }
  const AffPerm& elem(ElemId id) const { return reg_.elem(id); }

  /// Row of an element of W_a; computed on first use.
  const KLRow& row(ElemId w);
  bool has_row(ElemId w) const;

  LaurentInt P(ElemId y, ElemId w);
  Integer mu(ElemId y, ElemId w);
  LaurentInt P(const AffPerm& y, const AffPerm& w) { return P(id(y), id(w)); }
  Integer mu(const AffPerm& y, const AffPerm& w) { return mu(id(y), id(w)); }
  bool bruhat_leq(ElemId y, ElemId w);

  /// mu-list of an arbitrary extended element: pairs (z, mu(z, w)), z < w.
  std::vector<std::pair<ElemId, Integer>> mu_list(ElemId w);
  const std::vector<std::pair<ElemId, Integer>>& mu_list_base(ElemId w) { return row(w).mu; }

  /// Computes the rows of a downward Bruhat-closed set of W_a elements.
  void fill(const std::vector<AffPerm>& closed_set, ExecMode mode);

  std::size_t row_count() const;
  /// Elements (omega component 0) whose rows are present, canonical order.
  std::vector<ElemId> computed_rows() const;

  // Persistence: "klv1 n=<n>" then "y=<window>; w=<window>; P=<laurent>".
  void save(std::ostream& os) const;
  /// Writes the rows not listed in `skip`, in canonical order.
  void save_rows(std::ostream& os, const std::set<ElemId>& skip) const;
  /// Reads a table file; returns the ids of the rows it contained.
  std::set<ElemId> load(std::istream& is);

 private:
  const KLRow* lookup(ElemId w) const;
  void publish(std::unique_ptr<KLRow> r);
  const KLRow& ensure_locked(ElemId w);

  static constexpr std::size_t kSegBits = 12;
  static constexpr std::size_t kSegSize = std::size_t{1} << kSegBits;
  static constexpr std::size_t kMaxSegs = 4096;

  ElementRegistry reg_;
  std::array<std::atomic<std::atomic<const KLRow*>*>, kMaxSegs> rows_{};
  mutable std::mutex fill_mu_;
  std::vector<std::unique_ptr<KLRow>> owned_;
  std::atomic<std::size_t> count_{0};
};

/// Row kernel implementation.
template <class Lookup>
KLRow compute_kl_row(ElementRegistry& reg, ElemId w, Lookup&& lookup) {
  KLRow out;
  out.w = w;
  const int lw = reg.length(w);
  if (lw == 0) {
    out.lower = {w};
    out.P = {LaurentInt(1)};
    return out;
  }
  const GenMask ld = reg.left_descents(w);
  int s = 0;
  while (!has_gen(ld, s)) ++s;
  const ElemId v = reg.left_mul(w, s);
  const KLRow& rv = lookup(v);

  std::vector<std::pair<const KLRow*, LaurentInt>> corrections;  // (row z, mu * v^{l(w)-l(z)})
  for (const auto& [z, m] : rv.mu)
    if (reg.is_left_descent(z, s))
      corrections.emplace_back(&lookup(z), LaurentInt::monomial(m, lw - reg.length(z)));

  std::vector<ElemId> lower;
  lower.reserve(rv.lower.size() * 2);
  for (ElemId x : rv.lower) {
    lower.push_back(x);
    lower.push_back(reg.left_mul(x, s));
  }
  std::sort(lower.begin(), lower.end());
  lower.erase(std::unique(lower.begin(), lower.end()), lower.end());

  out.P.resize(lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) {
    const ElemId x = lower[i];
    LaurentInt p;
    const ElemId sx = reg.left_mul(x, s);
    const bool c = reg.is_left_descent(x, s);
    if (const LaurentInt* a = rv.find(sx)) p.add_scaled(*a, 1, c ? 0 : 2);
    if (const LaurentInt* b = rv.find(x)) p.add_scaled(*b, 1, c ? 2 : 0);
    for (const auto& [rz, coef] : corrections)
      if (const LaurentInt* pz = rz->find(x)) p -= coef * *pz;
    out.P[i] = std::move(p);
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    const int d = lw - reg.length(lower[i]);
    if (d % 2 == 1) {
      Integer m = out.P[i].coeff(d - 1);
      if (m != 0) out.mu.emplace_back(lower[i], std::move(m));
    }
  }
  out.lower = std::move(lower);
  return out;
}

}  // namespace affhecke
