#pragma once

// Elements of the Hecke algebra H of the extended affine Weyl group in the
// standard basis {T_w}: (T_s + 1)(T_s - q) = 0, T_x T_y = T_xy when lengths
// add, and T_omega a unit of length zero.

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affhecke/affine_weyl.hpp"
#include "affhecke/laurent.hpp"

namespace affhecke {

class HeckeElt {
 public:
  using Terms = std::unordered_map<AffPerm, LaurentInt, AffPermHash>;

  explicit HeckeElt(int n = 0) : n_(n) {}
  static HeckeElt T(const AffPerm& w, const LaurentInt& c = LaurentInt(1));
  static HeckeElt scalar(int n, const LaurentInt& c) { return T(AffPerm::identity(n), c); }

  int rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  LaurentInt coeff(const AffPerm& w) const;

  void add_term(const AffPerm& w, const LaurentInt& c);
  void add_scaled(const HeckeElt& other, const LaurentInt& c);

  HeckeElt& operator+=(const HeckeElt& other);
  HeckeElt& operator-=(const HeckeElt& other);
  HeckeElt& operator*=(const LaurentInt& c);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(HeckeElt a, const LaurentInt& c) { return a *= c; }
  friend HeckeElt operator*(const LaurentInt& c, HeckeElt a) { return a *= c; }
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// Terms in canonical order (length, then window).
  std::vector<std::pair<AffPerm, LaurentInt>> sorted_terms() const;

  /// "(v^-1)*T[1,2] + (v^-1)*T[2,1]"; "0" for zero.
  std::string str() const;

 private:
  int n_;
  Terms terms_;
};

/// a * T_{s_k}, a * T_{s_k}^{-1}, T_{s_k} * a, T_{s_k}^{-1} * a.
HeckeElt mul_right_gen(const HeckeElt& a, int k);
HeckeElt mul_right_gen_inv(const HeckeElt& a, int k);
HeckeElt mul_left_gen(int k, const HeckeElt& a);
HeckeElt mul_left_gen_inv(int k, const HeckeElt& a);
/// a * T_{omega^m}, T_{omega^m} * a.
HeckeElt mul_right_omega(const HeckeElt& a, int m);
HeckeElt mul_left_omega(int m, const HeckeElt& a);

/// a * T_w and T_w * a by peeling the canonical word of w.
HeckeElt mul_right_T(const HeckeElt& a, const AffPerm& w);
HeckeElt mul_left_T(const AffPerm& w, const HeckeElt& a);
/// a * T_w^{-1} and T_w^{-1} * a.
HeckeElt mul_right_T_inv(const HeckeElt& a, const AffPerm& w);
HeckeElt mul_left_T_inv(const AffPerm& w, const HeckeElt& a);

HeckeElt t_mul(const HeckeElt& a, const HeckeElt& b);
inline HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) { return t_mul(a, b); }

/// Ring involution with v -> v^{-1} and T_w -> T_{w^{-1}}^{-1}.
HeckeElt bar_elt(const HeckeElt& a);

/// Smallest dominant lambda_2 (last entry 0) with lambda + lambda_2 dominant.
Weight theta_shift(const Weight& lambda);

/// theta_lambda from the decomposition lambda = (lambda + lambda_2) - lambda_2.
HeckeElt theta_with(const Weight& lambda, const Weight& lambda_2);
HeckeElt theta(const Weight& lambda);

/// a * theta_mu and theta_mu * a, by generator peeling.
HeckeElt mul_right_theta(const HeckeElt& a, const Weight& mu);
HeckeElt mul_left_theta(const Weight& mu, const HeckeElt& a);

}  // namespace affhecke
