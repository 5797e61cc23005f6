#pragma once

// Exact linear algebra over Z[v, v^-1] on sparse vectors with integer
// coordinate labels.
//
// UnitEchelon eliminates with unit pivots (+-v^k) only, so every row it holds
// is a Z[v, v^-1]-combination of the inputs and every reduction is an
// integral statement. Vectors that have no unit entry after reduction are
// parked and revisited when new pivots appear.

#include <map>
#include <optional>
#include <vector>

#include "affhecke/laurent.hpp"

namespace affhecke {

using SVec = std::map<int, LaurentInt>;
using Combo = std::map<int, LaurentInt>;

void svec_add_scaled(SVec& x, const SVec& y, const LaurentInt& c);

class UnitEchelon {
 public:
  /// Adds generator `index` with vector `vec`.
  void add_generator(int index, SVec vec);
  /// Adds an arbitrary vector together with its expression in generators.
  void add(SVec vec, Combo combo);

  /// Revisits parked vectors until no new pivot appears.
  void settle();

  struct Reduction {
    SVec residual;
    Combo combo;  // residual = target + sum combo[i] g_i
  };
  Reduction reduce(SVec target) const;

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::pair<SVec, Combo>>& parked() const { return stuck_; }
  std::vector<int> pivot_columns() const;

 private:
  struct Row {
    int pivot;
    LaurentInt inverse;  // inverse of the unit pivot coefficient
    SVec vec;
    Combo combo;
  };
  void reduce_in_place(SVec& vec, Combo& combo) const;
  bool try_pivot(SVec& vec, Combo& combo);

  std::vector<Row> rows_;
  std::map<int, int> pivot_row_;
  std::vector<std::pair<SVec, Combo>> stuck_;
};

/// Solution of sum_j x_j cols[j] = rhs over Q(v): x_j = numerators[j] / denominator.
struct RationalSolution {
  std::vector<LaurentInt> numerators;
  LaurentInt denominator;
  std::size_t rank = 0;
};

/// Fraction-free Gauss-Jordan elimination. Returns nothing when rhs is not in
/// the Q(v)-span; `rank_out` receives the rank of the columns.
std::optional<RationalSolution> rational_solve(const std::vector<SVec>& cols, const SVec& rhs, std::size_t* rank_out = nullptr);

/// Over F_2 after v -> 1: is target in the span of rows?
bool f2_in_span(const std::vector<SVec>& rows, const SVec& target);

/// gcd in Z[v] up to units, Laurent inputs normalized by powers of v.
LaurentInt laurent_gcd(const LaurentInt& a, const LaurentInt& b);

}  // namespace affhecke
