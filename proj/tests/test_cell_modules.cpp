#include "doctest.h"

#include "affhecke/cell_modules.hpp"

using namespace affhecke;

namespace {

AffPerm E(int n, const char* s) { return AffPerm::parse(n, s); }

struct Setup {
  KLTable t;
  CPrimeAlgebra alg;
  CellData cd;
  Setup(int n, int max_len) : t(n), alg(t), cd(cells_in_ball(max_len < 0 ? Ball::finite_group(t) : Ball::affine(t, max_len), alg)) {}
  ElemId id(const char* s) { return t.id(E(t.rank(), s)); }
  CellModuleElt pi(ElemId w, const Partition& cell) { return project(alg, CPrimeAlgebra::basis(w), cell, cd); }
};

}  // namespace

TEST_CASE("projection to a cell module") {
  Setup S(4, -1);
  const ElemId s13 = S.id("s1.s3"), wS = S.id("[4,3,2,1]"), e = S.id("e");
  CHECK(cvec_equal(S.pi(s13, Partition({2, 2})).coords, CPrimeAlgebra::basis(s13)));
  CHECK(cvec_equal(S.pi(wS, Partition({4})).coords, CPrimeAlgebra::basis(wS)));
  CHECK(S.pi(wS, Partition({2, 2})).coords.empty());
  CHECK_THROWS_WITH(S.pi(e, Partition({2, 2})), "not in the ideal");
  CHECK_THROWS_WITH(S.pi(S.id("s1"), Partition({2, 2})), "not in the ideal");
  CHECK(project(S.alg, S.alg.c_prime(s13), Partition({2, 2}), S.cd).coords.size() == 1);

  Setup A(3, 5);
  CHECK_THROWS_WITH(A.pi(A.id("s0.s1.s0.s2.s0"), Partition({3})), "ball too small");
}

TEST_CASE("bimodule multiplication") {
  Setup S(4, -1);
  const Partition cell({2, 2});
  const ElemId s13 = S.id("s1.s3"), e = S.id("e");
  const CellModuleElt m = S.pi(s13, cell);
  const CVec one = CPrimeAlgebra::basis(e);
  CHECK(cvec_equal(bimodule_mul(S.alg, one, m, one, S.cd).coords, m.coords));

  const CVec sq = structure_constants(S.alg, s13, s13);
  const CellModuleElt eta_m = bimodule_mul(S.alg, CPrimeAlgebra::basis(s13), m, one, S.cd);
  CHECK(cvec_equal(eta_m.coords, sq));
  CHECK(eta_m.coords.at(s13) == LaurentInt::v_plus_vinv() * LaurentInt::v_plus_vinv());

  // any lift gives the same product
  CellModuleElt lifted = m;
  cvec_add(lifted.coords, S.id("[4,3,2,1]"), LaurentInt(7));
  cvec_add(lifted.coords, S.id("s1.s2.s1"), LaurentInt::v_power(3));
  const CVec h = CPrimeAlgebra::basis(S.id("s2"));
  const CVec hr = CPrimeAlgebra::basis(S.id("s1.s2"));
  CHECK(cvec_equal(bimodule_mul(S.alg, h, m, hr, S.cd).coords, bimodule_mul(S.alg, h, lifted, hr, S.cd).coords));

  Setup A(2, 6);
  const CellModuleElt p = bimodule_mul(A.alg, CPrimeAlgebra::basis(A.id("s0")), A.pi(A.id("s1"), Partition({2})),
                                       CPrimeAlgebra::basis(A.id("e")), A.cd);
  CHECK(cvec_equal(p.coords, CPrimeAlgebra::basis(A.id("s0.s1"))));
}

TEST_CASE("left and right factorizations") {
  Setup S(4, -1);
  const ElemId e = S.id("e"), s1 = S.id("s1"), s2 = S.id("s2");
  CHECK(cvec_equal(express_left(S.alg, s2, s2), CPrimeAlgebra::basis(e)));
  CHECK(cvec_equal(express_right(S.alg, s2, s2), CPrimeAlgebra::basis(e)));
  CHECK(cvec_equal(express_left(S.alg, S.id("s1.s2"), s2), CPrimeAlgebra::basis(s1)));
  CHECK(cvec_equal(express_right(S.alg, S.id("s2.s1"), s2), CPrimeAlgebra::basis(s1)));
  CHECK_THROWS_WITH(express_left(S.alg, s1, s2), "not in left ideal shape");
  CHECK_THROWS_WITH(express_right(S.alg, S.id("s2.s1"), s1), "not in right ideal shape");
  CHECK_THROWS_WITH(express_left(S.alg, S.id("s1.s2"), S.id("s1.s2")), "not a parabolic element");

  Setup A(2, 6);
  CHECK(cvec_equal(express_left(A.alg, A.id("s0.s1"), A.id("s1")), CPrimeAlgebra::basis(A.id("s0"))));
  CHECK(cvec_equal(express_right(A.alg, A.id("s1.s0"), A.id("s1")), CPrimeAlgebra::basis(A.id("s0"))));

  // every length-additive factorization through a parabolic element in S_4
  ElementRegistry& reg = S.t.registry();
  for (GenMask T = 0; T < full_mask(4); T += 2) {
    const ElemId w = S.t.id(parabolic_longest(GenSet{4, T}));
    for (ElemId x : S.cd.ball.ids) {
      if ((T & ~reg.right_descents(x)) == 0) {
        const CVec h = express_left(S.alg, x, w);
        CHECK(cvec_equal(S.alg.mul(h, CPrimeAlgebra::basis(w)), CPrimeAlgebra::basis(x)));
      }
      if ((T & ~reg.left_descents(x)) == 0) CHECK_NOTHROW(express_right(S.alg, x, w));
    }
  }
}

TEST_CASE("generation witnesses") {
  Setup A(2, 10);
  const Partition cell({2});
  const ElemId v = A.id("s1");
  auto verified = [&](Setup& s, const Key1Witness& w, ElemId u, ElemId anchor, const Partition& c) {
    return cvec_equal(bimodule_mul(s.alg, w.h, s.pi(anchor, c), w.h_right, s.cd).coords, CPrimeAlgebra::basis(u));
  };
  const auto self = key1_witness(A.alg, v, v, cell, A.cd);
  REQUIRE(self.has_value());
  CHECK(cvec_equal(self->h, CPrimeAlgebra::basis(A.id("e"))));
  CHECK(cvec_equal(self->h_right, CPrimeAlgebra::basis(A.id("e"))));

  const ElemId u = A.id("s0.s1");
  const auto w = key1_witness(A.alg, u, v, cell, A.cd);
  REQUIRE(w.has_value());
  CHECK(verified(A, *w, u, v, cell));
  CHECK(w->gamma_checked);
  for (const char* s : {"s0", "s1.s0", "s0.s1.s0.s1", "om.s1", "om^3.s0.s1.s0"}) {
    const ElemId x = A.id(s);
    const auto k = key1_witness(A.alg, x, v, cell, A.cd);
    REQUIRE(k.has_value());
    CHECK(verified(A, *k, x, v, cell));
  }

  Setup B(3, 8);
  const ElemId u3 = B.id("s2.s1.s2"), v3 = B.id("s1.s2.s1");
  CHECK(u3 == v3);
  const auto k3 = key1_witness(B.alg, u3, v3, Partition({3}), B.cd, 4);
  REQUIRE(k3.has_value());
  CHECK(verified(B, *k3, u3, v3, Partition({3})));
  const ElemId x3 = B.id("s0.s2");
  const auto k4 = key1_witness(B.alg, x3, B.id("s1"), Partition({2, 1}), B.cd);
  REQUIRE(k4.has_value());
  CHECK(verified(B, *k4, x3, B.id("s1"), Partition({2, 1})));
}

TEST_CASE("finite generation check") {
  Setup S(4, -1);
  for (GenMask T = 0; T < full_mask(4); T += 2) {
    const AffPerm w = parabolic_longest(GenSet{4, T});
    const Partition rho = partition_of_parabolic(GenSet{4, T});
    const SpanCheck sc = finite_generated_span(S.alg, S.t.id(w), rho, S.cd);
    CHECK(sc.full);
    CHECK(sc.cell_size == S.cd.two_sided_classes[static_cast<std::size_t>(S.cd.class_with_label(rho).at(0))].size());
    CHECK(sc.covered == sc.cell_size);
  }
}

TEST_CASE("ideal membership") {
  KLTable t(4);
  CPrimeAlgebra alg(t);
  const ElemId v = t.id(E(4, "s1.s3")), e = t.id(AffPerm::identity(4));
  const CVec trivial = cvec_scaled(CPrimeAlgebra::basis(v), LaurentInt::v_plus_vinv());
  const MembershipEvidence ev0 = ideal_membership_evidence(alg, trivial, v, 0, ExecMode::Parallel);
  CHECK(ev0.integral);
  REQUIRE(ev0.solution.size() == 1);
  CHECK(ev0.solution[0].first == std::array<ElemId, 3>{e, v, e});
  CHECK(ev0.solution[0].second == LaurentInt::v_plus_vinv());

  const ElemId w = t.id(E(4, "s1.s2.s1"));
  const CVec target = cvec_scaled(CPrimeAlgebra::basis(w), LaurentInt::v_plus_vinv());
  const MembershipEvidence ev = ideal_membership_evidence(alg, target, v, 2, ExecMode::Parallel);
  CHECK(ev.integral);
  HeckeElt sum(4);
  for (const auto& [g, c] : ev.solution) sum.add_scaled(alg.c_prime(g[0]) * alg.c_prime(g[1]) * alg.c_prime(g[2]), c);
  CHECK(sum == alg.from_cprime(target));

  const MembershipEvidence serial = ideal_membership_evidence(alg, target, v, 2, ExecMode::Serial);
  CHECK(serial.solution == ev.solution);

  const MembershipEvidence bare = ideal_membership_evidence(alg, CPrimeAlgebra::basis(w), v, 2, ExecMode::Parallel);
  CHECK_FALSE(bare.integral);
  CHECK(bare.rational_checked);
  CHECK(bare.rational);
  CHECK(bare.mod2_obstruction);
  CHECK_FALSE(ev.mod2_obstruction);
}
