#pragma once

// Partitions of n, nilpotent orbit closure order and the
// partition <-> parabolic subset <-> two-sided cell dictionary.
//
// A partition rho labels the nilpotent orbit O_rho whose Jordan type is the
// transpose rho*, and the two-sided cell C_rho. With this labelling (n) is
// the zero orbit / lowest cell and (1, ..., 1) the regular orbit / the cell
// of the identity.

#include <string>
#include <vector>

#include "affhecke/affine_weyl.hpp"

namespace affhecke {

class Partition {
 public:
  Partition() = default;
  /// Parts must be positive and weakly decreasing; zeros are dropped.
  explicit Partition(std::vector<int> parts);

  static Partition single_row(int n) { return Partition({n}); }
  static Partition single_column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  /// N_j = #{i : rho_i = j}
  int multiplicity(int j) const;
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::string str() const;  // "(2,1,1)"
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);

Partition transpose(const Partition& rho);

/// Prefix sums of rho never exceed those of xi.
bool dominance_leq(const Partition& rho, const Partition& xi);

/// O_xi is contained in the closure of O_rho.
bool closure_leq(const Partition& xi, const Partition& rho);

/// n^2 - sum rho_i^2
int orbit_dim(const Partition& rho);

/// a-value of the cell C_rho: sum_i N_i(rho) i (i-1) / 2.
int cell_a_value(const Partition& rho);

/// Blocks A_k of T contribute parts k+1; the remaining nodes give parts 1.
Partition partition_of_parabolic(const GenSet& T);

/// Consecutive blocks inside {1, ..., n-1} of sizes rho_i - 1 (parts >= 2,
/// in order), separated by single gaps.
GenSet parabolic_for_partition(const Partition& rho);

/// Cover relations of the closure order: pairs (xi, rho) with O_xi in the
/// closure of O_rho and nothing strictly between.
std::vector<std::pair<Partition, Partition>> closure_covers(int n);

}  // namespace affhecke
