#pragma once

// Arithmetic in the C'-basis C'_w = v^{-l(w)} sum_{y <= w} P_{y,w} T_y.
//
// Products are computed from the generator rules
//   C'_s C'_y = (v + v^-1) C'_y                              if sy < y,
//             = C'_{sy} + sum_{z < y, sz < z} mu(z,y) C'_z    otherwise,
// their mirror images for right multiplication, and C'_{om^m x} = T_{om^m} C'_x.
// Coordinates are keyed by registry ids of the owning KL table.

#include <unordered_map>
#include <vector>

#include "affhecke/hecke.hpp"
#include "affhecke/kl_table.hpp"

namespace affhecke {

using CVec = std::unordered_map<ElemId, LaurentInt>;

void cvec_add(CVec& x, ElemId w, const LaurentInt& c);
void cvec_add_scaled(CVec& x, const CVec& y, const LaurentInt& c);
CVec cvec_scaled(const CVec& x, const LaurentInt& c);
bool cvec_equal(const CVec& a, const CVec& b);

class CPrimeAlgebra {
 public:
  explicit CPrimeAlgebra(KLTable& table) : t_(table), reg_(table.registry()) {}

  KLTable& table() { return t_; }
  ElementRegistry& registry() { return reg_; }
  int rank() const { return reg_.rank(); }

  static CVec basis(ElemId w) { return CVec{{w, LaurentInt(1)}}; }

  CVec left_gen(int s, const CVec& x);
  CVec right_gen(const CVec& x, int s);
  CVec left_omega(int m, const CVec& x);
  CVec right_omega(const CVec& x, int m);

  /// C'_a * x and x * C'_a.
  CVec left_basis(ElemId a, const CVec& x);
  CVec right_basis(const CVec& x, ElemId a);
  /// C'_a * x for several a, sharing the recursion memo.
  std::vector<CVec> left_basis_many(const std::vector<ElemId>& as, const CVec& x);

  /// (sum a_w C'_w) * b and a * (sum b_w C'_w).
  CVec mul(const CVec& a, const CVec& b);

  HeckeElt c_prime(ElemId w);
  HeckeElt from_cprime(const CVec& x);
  /// Unique C'-coordinates of a T-basis element.
  CVec to_cprime(const HeckeElt& a);

 private:
  using Memo = std::unordered_map<ElemId, CVec>;
  const CVec& left_rec(ElemId a, const CVec& x, Memo& memo);
  const CVec& right_rec(const CVec& x, ElemId a, Memo& memo);

  KLTable& t_;
  ElementRegistry& reg_;
};

}  // namespace affhecke
