#include "affhecke/hecke.hpp"

#include <algorithm>
#include <sstream>

namespace affhecke {

namespace {

const LaurentInt& q() {
  static const LaurentInt value = LaurentInt::q_power(1);
  return value;
}
const LaurentInt& q_minus_1() {
  static const LaurentInt value = LaurentInt::q_power(1) - LaurentInt(1);
  return value;
}
const LaurentInt& qinv() {
  static const LaurentInt value = LaurentInt::q_power(-1);
  return value;
}
const LaurentInt& qinv_minus_1() {
  static const LaurentInt value = LaurentInt::q_power(-1) - LaurentInt(1);
  return value;
}

void check_rank(const HeckeElt& a, const HeckeElt& b) {
  if (a.rank() != b.rank()) throw Error("rank mismatch in Hecke algebra operation");
}

}  // namespace

HeckeElt HeckeElt::T(const AffPerm& w, const LaurentInt& c) {
  HeckeElt h(w.rank());
  h.add_term(w, c);
  return h;
}

LaurentInt HeckeElt::coeff(const AffPerm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentInt() : it->second;
}

void HeckeElt::add_term(const AffPerm& w, const LaurentInt& c) {
  if (c.is_zero()) return;
  if (w.rank() != n_) throw Error("rank mismatch in Hecke algebra operation");
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HeckeElt::add_scaled(const HeckeElt& other, const LaurentInt& c) {
  check_rank(*this, other);
  if (c.is_zero()) return;
  for (const auto& [w, x] : other.terms_) add_term(w, x * c);
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& other) {
  check_rank(*this, other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& other) {
  check_rank(*this, other);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

HeckeElt& HeckeElt::operator*=(const LaurentInt& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

std::vector<std::pair<AffPerm, LaurentInt>> HeckeElt::sorted_terms() const {
  std::vector<std::pair<AffPerm, LaurentInt>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return CanonicalLess{}(a.first, b.first); });
  return out;
}

std::string HeckeElt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : sorted_terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ")*T" << w.window_str();
  }
  return os.str();
}

HeckeElt mul_right_gen(const HeckeElt& a, int k) {
  HeckeElt out(a.rank());
  for (const auto& [x, c] : a.terms()) {
    if (x.is_right_descent(k)) {
      out.add_term(x.right_mul_gen(k), c * q());
      out.add_term(x, c * q_minus_1());
    } else {
      out.add_term(x.right_mul_gen(k), c);
    }
  }
  return out;
}

HeckeElt mul_right_gen_inv(const HeckeElt& a, int k) {
  HeckeElt out(a.rank());
  for (const auto& [x, c] : a.terms()) {
    if (x.is_right_descent(k)) {
      out.add_term(x.right_mul_gen(k), c);
    } else {
      out.add_term(x.right_mul_gen(k), c * qinv());
      out.add_term(x, c * qinv_minus_1());
    }
  }
  return out;
}

HeckeElt mul_left_gen(int k, const HeckeElt& a) {
  HeckeElt out(a.rank());
  for (const auto& [x, c] : a.terms()) {
    if (x.is_left_descent(k)) {
      out.add_term(x.left_mul_gen(k), c * q());
      out.add_term(x, c * q_minus_1());
    } else {
      out.add_term(x.left_mul_gen(k), c);
    }
  }
  return out;
}

HeckeElt mul_left_gen_inv(int k, const HeckeElt& a) {
  HeckeElt out(a.rank());
  for (const auto& [x, c] : a.terms()) {
    if (x.is_left_descent(k)) {
      out.add_term(x.left_mul_gen(k), c);
    } else {
      out.add_term(x.left_mul_gen(k), c * qinv());
      out.add_term(x, c * qinv_minus_1());
    }
  }
  return out;
}

HeckeElt mul_right_omega(const HeckeElt& a, int m) {
  if (m == 0) return a;
  const AffPerm om = AffPerm::omega(a.rank(), m);
  HeckeElt out(a.rank());
  for (const auto& [x, c] : a.terms()) out.add_term(compose(x, om), c);
  return out;
}

HeckeElt mul_left_omega(int m, const HeckeElt& a) {
  if (m == 0) return a;
  const AffPerm om = AffPerm::omega(a.rank(), m);
  HeckeElt out(a.rank());
  for (const auto& [x, c] : a.terms()) out.add_term(compose(om, x), c);
  return out;
}

// T_w = T_{omega^m} T_{s_i1} ... T_{s_ik}
HeckeElt mul_right_T(const HeckeElt& a, const AffPerm& w) {
  const CanonicalWord cw = canonical_word(w);
  HeckeElt r = mul_right_omega(a, cw.omega_power);
  for (int k : cw.word) r = mul_right_gen(r, k);
  return r;
}

HeckeElt mul_left_T(const AffPerm& w, const HeckeElt& a) {
  const CanonicalWord cw = canonical_word(w);
  HeckeElt r = a;
  for (auto it = cw.word.rbegin(); it != cw.word.rend(); ++it) r = mul_left_gen(*it, r);
  return mul_left_omega(cw.omega_power, r);
}

// T_w^{-1} = T_{s_ik}^{-1} ... T_{s_i1}^{-1} T_{omega^-m}
HeckeElt mul_right_T_inv(const HeckeElt& a, const AffPerm& w) {
  const CanonicalWord cw = canonical_word(w);
  HeckeElt r = a;
  for (auto it = cw.word.rbegin(); it != cw.word.rend(); ++it) r = mul_right_gen_inv(r, *it);
  return mul_right_omega(r, -cw.omega_power);
}

HeckeElt mul_left_T_inv(const AffPerm& w, const HeckeElt& a) {
  const CanonicalWord cw = canonical_word(w);
  HeckeElt r = mul_left_omega(-cw.omega_power, a);
  for (int k : cw.word) r = mul_left_gen_inv(k, r);
  return r;
}

HeckeElt t_mul(const HeckeElt& a, const HeckeElt& b) {
  check_rank(a, b);
  HeckeElt out(a.rank());
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [w, c] : b.sorted_terms()) out.add_scaled(mul_right_T(a, w), c);
  return out;
}

HeckeElt bar_elt(const HeckeElt& a) {
  HeckeElt out(a.rank());
  for (const auto& [w, c] : a.sorted_terms()) {
    const CanonicalWord cw = canonical_word(w);
    HeckeElt r = HeckeElt::T(AffPerm::omega(a.rank(), cw.omega_power), c.bar());
    for (int k : cw.word) r = mul_right_gen_inv(r, k);
    out += r;
  }
  return out;
}

Weight theta_shift(const Weight& lambda) {
  const int n = lambda.rank();
  Weight shift{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
  for (int i = n - 2; i >= 0; --i) {
    const auto u = static_cast<std::size_t>(i);
    shift.entries[u] = shift.entries[u + 1] + std::max<std::int64_t>(0, lambda.entries[u + 1] - lambda.entries[u]);
  }
  return shift;
}

HeckeElt theta_with(const Weight& lambda, const Weight& lambda_2) {
  const Weight lambda_1 = lambda + lambda_2;
  if (!lambda_1.dominant() || !lambda_2.dominant()) throw Error("theta decomposition needs dominant weights");
  const AffPerm t1 = translation(lambda_1);
  const AffPerm t2 = translation(lambda_2);
  HeckeElt r = HeckeElt::T(t1, LaurentInt::v_power(t2.length() - t1.length()));
  return mul_right_T_inv(r, t2);
}

HeckeElt theta(const Weight& lambda) { return theta_with(lambda, theta_shift(lambda)); }

HeckeElt mul_right_theta(const HeckeElt& a, const Weight& mu) {
  const Weight mu_2 = theta_shift(mu);
  const AffPerm t1 = translation(mu + mu_2);
  const AffPerm t2 = translation(mu_2);
  HeckeElt r = mul_right_T_inv(mul_right_T(a, t1), t2);
  return r *= LaurentInt::v_power(t2.length() - t1.length());
}

HeckeElt mul_left_theta(const Weight& mu, const HeckeElt& a) {
  const Weight mu_2 = theta_shift(mu);
  const AffPerm t1 = translation(mu + mu_2);
  const AffPerm t2 = translation(mu_2);
  HeckeElt r = mul_left_T(t1, mul_left_T_inv(t2, a));
  return r *= LaurentInt::v_power(t2.length() - t1.length());
}

}  // namespace affhecke
