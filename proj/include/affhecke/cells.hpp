#pragma once

// Left, right and two-sided cells on finite Bruhat-closed balls.
//
// Edges of the mu-graph come from exact C'-basis products, so every computed
// relation y <=_L w is true in the whole group. Classes computed on a ball are
// therefore contained in the true cells; they may be finer near the boundary.
// A class is labelled by a partition only through a parabolic anchor w_T it
// contains, which makes every label a certified statement.

#include <optional>
#include <unordered_map>
#include <vector>

#include "affhecke/cprime.hpp"
#include "affhecke/orbits.hpp"

namespace affhecke {

enum class Side { Left, Right };

/// A finite window into the group: all of S_n, or all of W_a up to max_len.
struct Ball {
  int n = 0;
  int max_len = 0;
  bool finite = false;
  std::vector<ElemId> ids;  // canonical order
  std::unordered_map<ElemId, int> index;

  static Ball finite_group(KLTable& table);
  static Ball affine(KLTable& table, int max_len);

  int size() const { return static_cast<int>(ids.size()); }
  int find(ElemId id) const;
  bool contains(ElemId id) const { return find(id) >= 0; }
  GenMask gens() const { return finite ? finite_mask(n) : full_mask(n); }
  /// Elements at least two steps inside the boundary; all of a finite ball.
  bool reliable(int length) const { return finite || length <= max_len - 2; }
};

/// ^*w (left) or w^* (right) for the pair {s_s, s_t}; nothing when w is not in
/// D_L(s,t) (resp. D_R(s,t)). Throws unless s_s s_t has order 3.
std::optional<AffPerm> try_star(const AffPerm& w, int s, int t, Side side);
AffPerm star(const AffPerm& w, int s, int t, Side side);
std::optional<ElemId> try_star(ElementRegistry& reg, ElemId w, int s, int t, Side side);

/// Order-3 pairs {s_k, s_{k+1 mod n}}, k ascending; empty for n = 2.
std::vector<std::pair<int, int>> star_pairs(int n);

struct MuGraph {
  // out[w] lists y != w occurring in C'_s C'_w (left) or C'_w C'_s (right).
  std::vector<std::vector<int>> left;
  std::vector<std::vector<int>> right;
};

MuGraph mu_graph(const Ball& ball, CPrimeAlgebra& alg, ExecMode mode);

struct CellData {
  Ball ball;
  std::vector<std::vector<int>> left_classes, right_classes, two_sided_classes;
  std::vector<int> left_of, right_of, two_sided_of;

  /// Per two-sided class: parabolic members and the partition they certify.
  std::vector<std::vector<int>> anchors;
  std::vector<std::optional<Partition>> labels;
  std::vector<bool> label_conflict;
  /// below[a][b]: class a lies under class b in the computed preorder.
  std::vector<std::vector<bool>> below;

  /// Empirical a-values (-1 when no probe product reached the element) and
  /// certified values where an anchor or the global bound decides them.
  std::vector<int> a_empirical;
  std::vector<std::optional<int>> a_exact;

  std::optional<Partition> label_of(ElemId id, ElementRegistry& reg) const;
  /// Certified a-value of any element whose class is known.
  std::optional<int> a_of(ElemId id, ElementRegistry& reg) const;
  int class_of(ElemId id, ElementRegistry& reg) const;
  std::vector<int> class_with_label(const Partition& rho) const;
};

struct CellOptions {
  bool compute_a = true;
  ExecMode mode = ExecMode::Parallel;
};

CellData cells_in_ball(const Ball& ball, CPrimeAlgebra& alg, const CellOptions& opts = {});

/// RSK insertion shape of a permutation of {1..n}; the cell partition of w is
/// the transpose of this shape.
Partition rsk_shape(const AffPerm& w);
Partition rsk_cell_partition(const AffPerm& w);

/// h_{w,u,z} for all z: the C'-coordinates of C'_w C'_u.
CVec structure_constants(CPrimeAlgebra& alg, ElemId w, ElemId u);

/// Coefficient of v^{a(z)} in h_{w,u,z}; throws when a(z) is not certified.
Integer gamma(CPrimeAlgebra& alg, const CellData& cd, ElemId w, ElemId u, ElemId z);

}  // namespace affhecke
