#include <random>
#include <sstream>

#include "doctest.h"

#include "affhecke/cprime.hpp"
#include "affhecke/hecke.hpp"
#include "affhecke/kl_table.hpp"
#include "affhecke/oracle.hpp"

using namespace affhecke;

namespace {

AffPerm E(int n, const char* s) { return AffPerm::parse(n, s); }
LaurentInt L(const char* s) { return LaurentInt::parse(s); }
const LaurentInt q = LaurentInt::q_power(1);
const LaurentInt one(1);

HeckeElt Th(const AffPerm& w) { return HeckeElt::T(w); }

std::string table_text(const KLTable& t) {
  std::ostringstream os;
  t.save(os);
  return os.str();
}

std::string load_error(int n, const std::string& text) {
  KLTable t(n);
  std::istringstream is(text);
  try {
    t.load(is);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("T-basis multiplication") {
  const AffPerm s1 = AffPerm::generator(2, 1), s0 = AffPerm::generator(2, 0), e = AffPerm::identity(2);
  HeckeElt sq = HeckeElt::T(s1, q - one);
  sq.add_term(e, q);
  CHECK(Th(s1) * Th(s1) == sq);
  CHECK(Th(s1) * Th(s0) == Th(compose(s1, s0)));
  CHECK(Th(AffPerm::omega(2)) * Th(AffPerm::omega(2, -1)) == Th(e));
  CHECK(Th(AffPerm::omega(3)) * Th(E(3, "s1")) * Th(AffPerm::omega(3, -1)) == Th(E(3, "s2")));
  CHECK((Th(s1) * HeckeElt(2)).is_zero());
  CHECK_THROWS(Th(s1) * Th(AffPerm::identity(3)));
}

TEST_CASE("T-basis multiplication is associative") {
  const auto ball = enumerate_ball(3, 3, full_mask(3));
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  std::uniform_int_distribution<int> om(-2, 2), coef(-2, 2);
  auto random_elt = [&] {
    HeckeElt a(3);
    for (int i = 0; i < 3; ++i)
      a.add_term(compose(AffPerm::omega(3, om(rng)), ball[pick(rng)]), LaurentInt::monomial(coef(rng), coef(rng)));
    return a;
  };
  for (int i = 0; i < 40; ++i) {
    const HeckeElt a = random_elt(), b = random_elt(), c = random_elt();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("bar involution on the Hecke algebra") {
  const AffPerm s = AffPerm::generator(3, 1), e = AffPerm::identity(3);
  const LaurentInt qi = LaurentInt::q_power(-1);
  HeckeElt expect = HeckeElt::T(s, qi);
  expect.add_term(e, qi - one);
  CHECK(bar_elt(Th(s)) == expect);
  CHECK(bar_elt(Th(e)) == Th(e));
  CHECK(bar_elt(HeckeElt::T(e, LaurentInt::v_power(1))) == HeckeElt::T(e, LaurentInt::v_power(-1)));
  CHECK(bar_elt(Th(AffPerm::omega(3))) == Th(AffPerm::omega(3)));

  const auto ball = enumerate_ball(3, 3, full_mask(3));
  for (std::size_t i = 0; i < ball.size(); i += 3)
    for (std::size_t j = 0; j < ball.size(); j += 5) {
      const HeckeElt a = HeckeElt::T(ball[i], L("v^2 - 3*v^-1")), b = Th(compose(AffPerm::omega(3), ball[j]));
      CHECK(bar_elt(a * b) == bar_elt(a) * bar_elt(b));
      CHECK(bar_elt(bar_elt(a)) == a);
    }
}

TEST_CASE("Kazhdan-Lusztig polynomials") {
  KLTable t4(4);
  CHECK(t4.P(AffPerm::identity(4), E(4, "s1")) == one);
  CHECK(t4.P(AffPerm::identity(4), E(4, "[3,4,1,2]")) == one + q);
  CHECK(t4.P(E(4, "s1"), E(4, "s2")).is_zero());
  CHECK(t4.P(E(4, "[4,3,2,1]"), E(4, "[4,3,2,1]")) == one);
  CHECK(t4.mu(E(4, "s1.s2"), E(4, "[3,4,1,2]")) == 0);
  CHECK(t4.mu(E(4, "s2"), E(4, "s2.s1")) == 1);

  KLTable t2(2);
  CHECK(t2.P(AffPerm::omega(2), E(2, "s1")).is_zero());
  CHECK(t2.P(AffPerm::omega(2), E(2, "om.s1")) == one);
  CHECK(t2.P(E(2, "om.s0"), E(2, "om.s0.s1.s0")) == t2.P(E(2, "s0"), E(2, "s0.s1.s0")));
}

TEST_CASE("Kazhdan-Lusztig polynomials agree with the bar-invariance solver") {
  for (auto [n, len, mask] : {std::tuple{4, 6, finite_mask(4)}, std::tuple{2, 7, full_mask(2)}, std::tuple{3, 4, full_mask(3)}}) {
    KLTable t(n);
    for (const auto& w : enumerate_ball(n, len, mask)) {
      const auto sol = oracle::kl_by_bar_invariance(w);
      REQUIRE(sol.has_value());
      for (const auto& [y, p] : *sol) CHECK(t.P(y, w) == p);
      CHECK(t.row(t.id(w)).lower.size() == sol->size());
    }
  }
}

TEST_CASE("Kazhdan-Lusztig inverse symmetry and degree bound") {
  KLTable t(3);
  const auto ball = enumerate_ball(3, 5, full_mask(3));
  for (const auto& w : ball)
    for (const auto& y : ball) {
      const LaurentInt p = t.P(y, w);
      CHECK(p == t.P(y.inverse(), w.inverse()));
      if (p.is_zero()) continue;
      CHECK(bruhat_leq(y, w));
      if (y != w) CHECK(p.leading().first <= w.length() - y.length() - 1);
    }
}

TEST_CASE("C' basis") {
  KLTable t(2);
  CPrimeAlgebra alg(t);
  const AffPerm s1 = AffPerm::generator(2, 1), s0 = AffPerm::generator(2, 0), e = AffPerm::identity(2);
  HeckeElt cs = Th(e) + Th(s1);
  cs *= LaurentInt::v_power(-1);
  CHECK(alg.c_prime(t.id(s1)) == cs);
  CHECK(alg.c_prime(t.id(e)) == Th(e));

  const AffPerm w = compose(s1, s0);
  const auto sol = oracle::kl_by_bar_invariance(w);
  REQUIRE(sol.has_value());
  HeckeElt expect(2);
  for (const auto& [y, p] : *sol) expect.add_term(y, p * LaurentInt::v_power(-2));
  CHECK(alg.c_prime(t.id(w)) == expect);
  CHECK(expect.size() == 4);

  const CVec ts = alg.to_cprime(Th(s1));
  CHECK(ts.size() == 2);
  CHECK(ts.at(t.id(s1)) == LaurentInt::v_power(1));
  CHECK(ts.at(t.id(e)) == LaurentInt(-1));
  CHECK(alg.to_cprime(HeckeElt(2)).empty());

  const AffPerm om = AffPerm::omega(2);
  CHECK(alg.c_prime(t.id(compose(om, w))) == Th(om) * alg.c_prime(t.id(w)));
}

TEST_CASE("C' basis is bar invariant and round trips") {
  KLTable t(3);
  CPrimeAlgebra alg(t);
  for (const auto& w : enumerate_ball(3, 4, full_mask(3)))
    for (int m : {0, 1}) {
      const ElemId id = t.id(compose(AffPerm::omega(3, m), w));
      const HeckeElt c = alg.c_prime(id);
      CHECK(bar_elt(c) == c);
      CHECK(cvec_equal(alg.to_cprime(c), CPrimeAlgebra::basis(id)));
      CHECK(alg.from_cprime(CPrimeAlgebra::basis(id)) == c);
    }
}

TEST_CASE("C' products agree with T-basis products") {
  KLTable t(3);
  CPrimeAlgebra alg(t);
  const auto ball = enumerate_ball(3, 3, full_mask(3));
  for (std::size_t i = 0; i < ball.size(); i += 2)
    for (std::size_t j = 0; j < ball.size(); j += 3) {
      const ElemId a = t.id(ball[i]), b = t.id(compose(AffPerm::omega(3, -1), ball[j]));
      const CVec prod = alg.mul(CPrimeAlgebra::basis(a), CPrimeAlgebra::basis(b));
      CHECK(alg.from_cprime(prod) == alg.c_prime(a) * alg.c_prime(b));
    }
}

TEST_CASE("Bernstein elements") {
  const AffPerm e = AffPerm::identity(2);
  CHECK(theta(Weight{{0, 0}}) == Th(e));
  CHECK(theta(Weight{{1, 1}}) == Th(AffPerm::omega(2, 2)));
  CHECK(theta(Weight{{1, 0}}) == HeckeElt::T(E(2, "[3,2]"), LaurentInt::v_power(-1)));
  CHECK(theta_shift(Weight{{0, 2}}) == Weight{{2, 0}});

  const Weight alpha{{1, -1}};
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = -2; b <= 2; ++b) {
      const Weight l{{a, b}}, sl = reflect(l, 1);
      for (std::int64_t c = -1; c <= 1; ++c) CHECK(theta(l) * theta(Weight{{c, 1}}) == theta(l + Weight{{c, 1}}));
      const HeckeElt ts = Th(AffPerm::generator(2, 1));
      const HeckeElt lhs = (ts * theta(l) - theta(sl) * ts) * (theta(alpha) - Th(e));
      const HeckeElt rhs = (q - one) * (theta(alpha) * (theta(l) - theta(sl)));
      CHECK(lhs == rhs);
      CHECK(theta_with(l, theta_shift(l) + Weight{{1, 0}}) == theta(l));
      CHECK(mul_right_theta(ts, l) == ts * theta(l));
      CHECK(mul_left_theta(l, ts) == theta(l) * ts);
    }
  CHECK_THROWS(theta_with(Weight{{0, 1}}, Weight{{0, 0}}));
}

TEST_CASE("table fill is schedule independent") {
  const auto ball = enumerate_ball(3, 6, full_mask(3));
  KLTable serial(3), parallel(3);
  serial.fill(ball, ExecMode::Serial);
  parallel.fill(ball, ExecMode::Parallel);
  CHECK(serial.row_count() == ball.size());
  CHECK(table_text(serial) == table_text(parallel));
}

TEST_CASE("table save and load") {
  KLTable t(3);
  t.fill(enumerate_ball(3, 4, full_mask(3)), ExecMode::Parallel);
  const std::string text = table_text(t);
  CHECK(text.rfind("klv1 n=3\n", 0) == 0);

  KLTable u(3);
  std::istringstream is(text);
  const auto rows = u.load(is);
  CHECK(rows.size() == t.row_count());
  CHECK(table_text(u) == text);
  for (const auto& w : enumerate_ball(3, 4, full_mask(3))) CHECK(u.P(AffPerm::identity(3), w) == t.P(AffPerm::identity(3), w));

  // loading into a table that already has the rows is a consistency check
  std::istringstream again(text);
  CHECK_NOTHROW(u.load(again));

  CHECK(load_error(3, "") == "line 1: empty table file");
  CHECK(load_error(3, "klv2 n=3\n") == "line 1: unsupported table version 'klv2 n=3'");
  CHECK(load_error(3, "klv1 n=4\n") == "line 1: table header 'klv1 n=4' does not match 'klv1 n=3'");
  CHECK(load_error(3, "klv1 n=3\nnonsense\n") == "line 2: malformed entry");
  CHECK(load_error(3, "klv1 n=3\n\ny=[2,3,4]; w=[2,3,4]; P=1\n") == "line 3: entry outside W_a");
  CHECK(load_error(3, "klv1 n=3\ny=[1,2,3]; w=[2,1,3]; P=0\n") == "line 2: zero polynomial stored");
  CHECK(load_error(3, "klv1 n=3\ny=[1,2,3]; w=[2,1,3]; P=1\n") == "row w=[2,1,3] lacks P(w,w)=1");
  CHECK(load_error(3, "klv1 n=3\ny=[1,2,3]; w=[2,1,3]; P=1\ny=[2,1,3]; w=[2,1,3]; P=1\n").empty());
  CHECK(load_error(3, "klv1 n=3\ny=[1,2,3]; w=[1,2,3]; P=v^2 + 1\n") == "row w=[1,2,3] lacks P(w,w)=1");
}
