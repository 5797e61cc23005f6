#include "affhecke/cprime.hpp"

#include <algorithm>
#include <map>

namespace affhecke {

void cvec_add(CVec& x, ElemId w, const LaurentInt& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = x.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

void cvec_add_scaled(CVec& x, const CVec& y, const LaurentInt& c) {
  if (c.is_zero()) return;
  for (const auto& [w, a] : y) cvec_add(x, w, a * c);
}

CVec cvec_scaled(const CVec& x, const LaurentInt& c) {
  CVec out;
  cvec_add_scaled(out, x, c);
  return out;
}

bool cvec_equal(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [w, c] : a) {
    auto it = b.find(w);
    if (it == b.end() || it->second != c) return false;
  }
  return true;
}

CVec CPrimeAlgebra::left_gen(int s, const CVec& x) {
  static const LaurentInt vv = LaurentInt::v_plus_vinv();
  CVec out;
  for (const auto& [y, c] : x) {
    if (reg_.is_left_descent(y, s)) {
      cvec_add(out, y, c * vv);
      continue;
    }
    cvec_add(out, reg_.left_mul(y, s), c);
    for (const auto& [z, m] : t_.mu_list(y))
      if (reg_.is_left_descent(z, s)) cvec_add(out, z, c * LaurentInt(m));
  }
  return out;
}

CVec CPrimeAlgebra::right_gen(const CVec& x, int s) {
  static const LaurentInt vv = LaurentInt::v_plus_vinv();
  CVec out;
  for (const auto& [y, c] : x) {
    if (reg_.is_right_descent(y, s)) {
      cvec_add(out, y, c * vv);
      continue;
    }
    cvec_add(out, reg_.right_mul(y, s), c);
    for (const auto& [z, m] : t_.mu_list(y))
      if (reg_.is_right_descent(z, s)) cvec_add(out, z, c * LaurentInt(m));
  }
  return out;
}

CVec CPrimeAlgebra::left_omega(int m, const CVec& x) {
  if (m == 0) return x;
  CVec out;
  for (const auto& [y, c] : x) out.emplace(reg_.omega_left(y, m), c);
  return out;
}

CVec CPrimeAlgebra::right_omega(const CVec& x, int m) {
  if (m == 0) return x;
  CVec out;
  for (const auto& [y, c] : x) out.emplace(reg_.omega_right(y, m), c);
  return out;
}

// C'_a = C'_s C'_{sa} - sum_{z < sa, sz < z} mu(z, sa) C'_z for s in L(a).
const CVec& CPrimeAlgebra::left_rec(ElemId a, const CVec& x, Memo& memo) {
  if (auto it = memo.find(a); it != memo.end()) return it->second;
  CVec r;
  if (reg_.length(a) == 0) {
    r = x;
  } else {
    const GenMask ld = reg_.left_descents(a);
    int s = 0;
    while (!has_gen(ld, s)) ++s;
    const ElemId b = reg_.left_mul(a, s);
    r = left_gen(s, left_rec(b, x, memo));
    for (const auto& [z, m] : t_.mu_list_base(b))
      if (reg_.is_left_descent(z, s)) cvec_add_scaled(r, left_rec(z, x, memo), LaurentInt(-m));
  }
  return memo.emplace(a, std::move(r)).first->second;
}

const CVec& CPrimeAlgebra::right_rec(const CVec& x, ElemId a, Memo& memo) {
  if (auto it = memo.find(a); it != memo.end()) return it->second;
  CVec r;
  if (reg_.length(a) == 0) {
    r = x;
  } else {
    const GenMask rd = reg_.right_descents(a);
    int s = 0;
    while (!has_gen(rd, s)) ++s;
    const ElemId b = reg_.right_mul(a, s);
    r = right_gen(right_rec(x, b, memo), s);
    for (const auto& [z, m] : t_.mu_list_base(b))
      if (reg_.is_right_descent(z, s)) cvec_add_scaled(r, right_rec(x, z, memo), LaurentInt(-m));
  }
  return memo.emplace(a, std::move(r)).first->second;
}

CVec CPrimeAlgebra::left_basis(ElemId a, const CVec& x) {
  const int m = reg_.omega_power(a);
  Memo memo;
  return left_omega(m, left_rec(reg_.omega_left(a, -m), x, memo));
}

// C'_{a' om^m} = C'_{a'} T_{om^m}
CVec CPrimeAlgebra::right_basis(const CVec& x, ElemId a) {
  const int m = reg_.omega_power(a);
  Memo memo;
  return right_omega(right_rec(x, reg_.omega_right(a, -m), memo), m);
}

std::vector<CVec> CPrimeAlgebra::left_basis_many(const std::vector<ElemId>& as, const CVec& x) {
  std::map<int, Memo> memos;
  std::vector<CVec> out;
  out.reserve(as.size());
  for (ElemId a : as) {
    const int m = reg_.omega_power(a);
    out.push_back(left_omega(m, left_rec(reg_.omega_left(a, -m), x, memos[m])));
  }
  return out;
}

CVec CPrimeAlgebra::mul(const CVec& a, const CVec& b) {
  // Group the left factor by omega component so that one memo serves each.
  std::map<int, std::vector<std::pair<ElemId, const LaurentInt*>>> by_omega;
  for (const auto& [w, c] : a) by_omega[reg_.omega_power(w)].emplace_back(w, &c);
  CVec out;
  for (const auto& [m, terms] : by_omega) {
    Memo memo;
    for (const auto& [w, c] : terms) cvec_add_scaled(out, left_omega(m, left_rec(reg_.omega_left(w, -m), b, memo)), *c);
  }
  return out;
}

HeckeElt CPrimeAlgebra::c_prime(ElemId w) {
  const int m = reg_.omega_power(w);
  const ElemId base = reg_.omega_left(w, -m);
  const KLRow& r = t_.row(base);
  const AffPerm om = AffPerm::omega(rank(), m);
  const LaurentInt scale = LaurentInt::v_power(-reg_.length(w));
  HeckeElt out(rank());
  for (std::size_t i = 0; i < r.lower.size(); ++i) out.add_term(compose(om, reg_.elem(r.lower[i])), r.P[i] * scale);
  return out;
}

HeckeElt CPrimeAlgebra::from_cprime(const CVec& x) {
  HeckeElt out(rank());
  for (const auto& [w, c] : x) out.add_scaled(c_prime(w), c);
  return out;
}

// Peel the terms of maximal length: T_y = v^{l(y)} C'_y - sum_{x < y} P_{x,y} T_x.
CVec CPrimeAlgebra::to_cprime(const HeckeElt& a) {
  std::map<int, CVec, std::greater<>> levels;
  for (const auto& [w, c] : a.terms()) cvec_add(levels[w.length()], reg_.intern(w), c);
  CVec out;
  while (!levels.empty()) {
    auto top = levels.begin();
    const int len = top->first;
    CVec level = std::move(top->second);
    levels.erase(top);
    for (const auto& [y, c] : level) {
      cvec_add(out, y, c * LaurentInt::v_power(len));
      const int m = reg_.omega_power(y);
      const KLRow& r = t_.row(reg_.omega_left(y, -m));
      for (std::size_t i = 0; i < r.lower.size(); ++i) {
        const int lx = reg_.length(r.lower[i]);
        if (lx == len) continue;
        cvec_add(levels[lx], reg_.omega_left(r.lower[i], m), -(c * r.P[i]));
      }
    }
  }
  return out;
}

}  // namespace affhecke
