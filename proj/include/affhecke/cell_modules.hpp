#pragma once

// The cell bimodule H_C = H_{<=C} / H_{<C} in C'-coordinates, constructive
// factorizations C'_x = h C'_w and C'_y = C'_w h' through a parabolic w, the
// generation witness search for the image of a parabolic C'_v, and the
// two-sided ideal membership solver.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "affhecke/cells.hpp"
#include "affhecke/linalg.hpp"

namespace affhecke {

struct CellModuleElt {
  Partition cell;
  CVec coords;  // keys in the cell
};

/// Keeps the coordinates on the cell and drops those on strictly lower cells.
/// Throws "not in the ideal" for support above or beside the cell and "ball
/// too small" for support whose class is not certified. With
/// `known_in_ideal` the caller vouches that `a` lies in H_{<=C}; for the lowest
/// cell that makes every coordinate a cell coordinate.
CellModuleElt project(CPrimeAlgebra& alg, const CVec& a, const Partition& cell, const CellData& cd, bool known_in_ideal = false);
CellModuleElt project(CPrimeAlgebra& alg, const HeckeElt& a, const Partition& cell, const CellData& cd);

/// h * m * h' computed on any lift of m.
CellModuleElt bimodule_mul(CPrimeAlgebra& alg, const CVec& h, const CellModuleElt& m, const CVec& h_right, const CellData& cd);

/// h with C'_x = h C'_w, for w parabolic and R(w) in R(x). Checked by
/// re-multiplication; throws "not in left ideal shape".
CVec express_left(CPrimeAlgebra& alg, ElemId x, ElemId w);
/// h' with C'_y = C'_w h', for L(w) in L(y).
CVec express_right(CPrimeAlgebra& alg, ElemId y, ElemId w);

/// One left star operation {s_s, s_t} in a witness path.
struct StarStep {
  int s = 0;
  int t = 0;
};

struct Key1Witness {
  CVec h;
  CVec h_right;
  ElemId x = kNoElem;
  ElemId y = kNoElem;
  int omega_shift = 0;
  std::vector<StarStep> path;
  std::string route;        // "left", "right" or "star"
  bool gamma_checked = false;  // C'_x C'_y has cell leading coefficients [z == u]
};

/// Searches star-operation paths and omega shifts from u (breadth first, at
/// most `depth` steps) for y = om^m phi_r ... phi_1(u) with L(v) in L(y),
/// builds x = phi_1 ... phi_r(om^-m v), and returns the first candidate with
/// pi(h C'_v h') = pi(C'_u) exactly.
std::optional<Key1Witness> key1_witness(CPrimeAlgebra& alg, ElemId u, ElemId v, const Partition& cell, const CellData& cd, int depth = 12);

/// Result of the finite-group generation check for one parabolic v.
struct SpanCheck {
  std::size_t cell_size = 0;
  std::size_t covered = 0;  // cell coordinates reached by unit pivots
  bool full = false;
};

/// Z[v, v^-1]-span of x pi(C'_v) y, x, y in H(S_n), saturated under C'_s on
/// both sides. `full` certifies that the span is the whole cell module.
SpanCheck finite_generated_span(CPrimeAlgebra& alg, ElemId v, const Partition& cell, const CellData& cd);

struct MembershipEvidence {
  int gen_len = 0;
  std::size_t generators = 0;
  std::size_t unit_rank = 0;
  bool integral = false;
  /// Generator triples (x, v', y) and coefficients of an integral solution.
  std::vector<std::pair<std::array<ElemId, 3>, LaurentInt>> solution;
  bool rational_checked = false;
  bool rational = false;
  std::size_t residual_rank = 0;
  bool mod2_obstruction = false;  // target(v=1) mod 2 outside the span
};

/// Is target (C'-coordinates) in the Z[v, v^-1]-span of C'_x C'_{v'} C'_y with
/// v' an Omega-conjugate of v and l(x), l(y) <= gen_len? Never asserts
/// non-membership in the whole ideal.
MembershipEvidence ideal_membership_evidence(CPrimeAlgebra& alg, const CVec& target, ElemId v, int gen_len, ExecMode mode,
                                             bool rational_check = true);

}  // namespace affhecke
