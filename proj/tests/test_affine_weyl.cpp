#include "doctest.h"

#include "affhecke/affine_weyl.hpp"
#include "affhecke/oracle.hpp"

using namespace affhecke;

namespace {

AffPerm W(int n, std::vector<std::int64_t> w) { return AffPerm::from_window(n, w); }
AffPerm E(int n, const char* s) { return AffPerm::parse(n, s); }

}  // namespace

TEST_CASE("window construction") {
  CHECK(W(2, {2, 1}) == AffPerm::generator(2, 1));
  CHECK(W(2, {0, 3}) == AffPerm::generator(2, 0));
  CHECK_THROWS_WITH(W(2, {1, 3}), "not a bijection");
  CHECK_THROWS(W(3, {1, 2}));
  CHECK(AffPerm::omega(2).window() == std::vector<std::int64_t>{2, 3});
}

TEST_CASE("composition") {
  const AffPerm om = AffPerm::omega(2), s1 = AffPerm::generator(2, 1), s0 = AffPerm::generator(2, 0);
  CHECK(compose(om, s1) == W(2, {3, 2}));
  CHECK(compose(om, s1) == translation(Weight{{1, 0}}));
  CHECK(compose(s1, s0) == W(2, {-1, 4}));
  for (int k = 0; k < 2; ++k) CHECK(compose(AffPerm::generator(2, k), AffPerm::generator(2, k)).is_identity());
  CHECK(compose(s1, AffPerm::identity(2)) == s1);
  CHECK_THROWS(compose(s1, AffPerm::identity(3)));
}

TEST_CASE("length") {
  CHECK(AffPerm::omega(2).length() == 0);
  CHECK(W(2, {-1, 4}).length() == 2);
  CHECK(W(2, {3, 2}).length() == 1);
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k < n; ++k) CHECK(AffPerm::generator(n, k).length() == 1);
}

TEST_CASE("length agrees with breadth-first search") {
  for (auto [n, radius] : {std::pair{2, 10}, std::pair{3, 7}}) {
    const auto dist = oracle::bfs_lengths(n, radius, full_mask(n));
    const auto ball = enumerate_ball(n, radius, full_mask(n));
    CHECK(dist.size() == ball.size());
    for (const auto& [w, d] : dist) {
      CHECK(w.length() == d);
      for (int m = -2; m <= 2; ++m) CHECK(compose(AffPerm::omega(n, m), w).length() == d);
    }
  }
}

TEST_CASE("length inequalities on a ball") {
  const auto ball = enumerate_ball(3, 4, full_mask(3));
  for (const auto& x : ball) {
    CHECK(x.inverse().length() == x.length());
    for (const auto& y : ball) CHECK(compose(x, y).length() <= x.length() + y.length());
  }
}

TEST_CASE("descents") {
  CHECK(AffPerm::generator(2, 0).right_descents() == gen_bit(0));
  CHECK(AffPerm::identity(3).right_descents() == 0);
  CHECK(AffPerm::identity(3).left_descents() == 0);
  CHECK(W(4, {2, 1, 4, 3}).right_descents() == (gen_bit(1) | gen_bit(3)));
  const auto ball = enumerate_ball(3, 5, full_mask(3));
  for (const auto& w : ball)
    for (int k = 0; k < 3; ++k) {
      CHECK(w.is_right_descent(k) == (w.right_mul_gen(k).length() < w.length()));
      CHECK(w.is_left_descent(k) == (w.left_mul_gen(k).length() < w.length()));
    }
}

TEST_CASE("canonical words") {
  const auto om3 = canonical_word(AffPerm::omega(2, 3));
  CHECK(om3.omega_power == 3);
  CHECK(om3.word.empty());
  const auto t = canonical_word(W(2, {3, 2}));
  CHECK(t.omega_power == 1);
  CHECK(t.word == std::vector<int>{1});
  CHECK(canonical_word(AffPerm::generator(2, 0)).word == std::vector<int>{0});

  for (int n = 2; n <= 4; ++n)
    for (const auto& w : enumerate_ball(n, 5, full_mask(n)))
      for (int m = -2; m <= 2; ++m) {
        const AffPerm x = compose(AffPerm::omega(n, m), w);
        const auto cw = canonical_word(x);
        CHECK(static_cast<int>(cw.word.size()) == x.length());
        CHECK(cw.omega_power == m);
        CHECK(from_word(n, cw) == x);
        CHECK(AffPerm::parse(n, x.word_str()) == x);
        CHECK(AffPerm::parse(n, x.window_str()) == x);
      }
}

TEST_CASE("element grammar") {
  CHECK(E(2, "om") == AffPerm::omega(2));
  CHECK(E(3, "om^2.s1") == compose(AffPerm::omega(3, 2), AffPerm::generator(3, 1)));
  CHECK(E(3, "e").is_identity());
  CHECK(E(2, "[3,2]").word_str() == "om.s1");
  CHECK(AffPerm::identity(4).word_str() == "e");
  CHECK_THROWS(E(2, "s2"));
  CHECK_THROWS(E(2, "x1"));
}

TEST_CASE("omega normalizes the simple reflections") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k < n; ++k) {
      const AffPerm c = compose({AffPerm::omega(n), AffPerm::generator(n, k), AffPerm::omega(n, -1)});
      CHECK(c == AffPerm::generator(n, (k + 1) % n));
    }
}

TEST_CASE("bruhat order") {
  CHECK(bruhat_leq(AffPerm::identity(2), E(2, "s0.s1")));
  CHECK_FALSE(bruhat_leq(AffPerm::omega(2), AffPerm::generator(2, 1)));
  CHECK(bruhat_leq(E(4, "s2"), E(4, "s2.s1.s3.s2")));
  CHECK(bruhat_leq(E(4, "s1.s2.s1"), E(4, "s2.s1.s3.s2")));
  CHECK_FALSE(bruhat_leq(E(4, "s1.s2.s3"), E(4, "s2.s1.s3.s2")));
}

TEST_CASE("bruhat order agrees with subwords") {
  const auto ball = enumerate_ball(3, 6, full_mask(3));
  for (const auto& w : ball) {
    const auto lower = oracle::lower_interval(w);
    const std::set<AffPerm> below(lower.begin(), lower.end());
    for (const auto& y : ball) CHECK(bruhat_leq(y, w) == (below.count(y) > 0));
  }
}

TEST_CASE("translations") {
  CHECK(translation(Weight{{1, 1}}) == AffPerm::omega(2, 2));
  CHECK(translation(Weight{{0, 0, 0}}).is_identity());
  CHECK(translation(Weight{{1, 0}}) == W(2, {3, 2}));
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = -2; b <= 2; ++b)
      for (std::int64_t c = -2; c <= 2; ++c) {
        const Weight l{{a, b, c}}, m{{c, a, b}};
        CHECK(translation(l + m) == compose(translation(l), translation(m)));
        const std::int64_t expect = std::abs(a - b) + std::abs(a - c) + std::abs(b - c);
        CHECK(translation(l).length() == expect);
      }
}

TEST_CASE("parabolic longest elements") {
  const AffPerm w13 = parabolic_longest(GenSet{4, gen_bit(1) | gen_bit(3)});
  CHECK(w13 == W(4, {2, 1, 4, 3}));
  CHECK(w13.length() == 2);
  CHECK(parabolic_longest(GenSet{4, 0}).is_identity());
  const AffPerm wS = parabolic_longest(GenSet{4, finite_mask(4)});
  CHECK(wS == W(4, {4, 3, 2, 1}));
  CHECK(wS.length() == 6);
  CHECK_THROWS_WITH(parabolic_longest(GenSet{3, full_mask(3)}), "infinite parabolic");

  for (int n = 2; n <= 5; ++n)
    for (GenMask T = 0; T < full_mask(n); ++T) {
      const AffPerm w = parabolic_longest(GenSet{n, T});
      CHECK(compose(w, w).is_identity());
      int expect = 0;
      for (int k : block_type(GenSet{n, T})) expect += k * (k + 1) / 2;
      CHECK(w.length() == expect);
      CHECK(w.right_descents() == T);
      CHECK(is_parabolic(w));
    }
  CHECK_FALSE(is_parabolic(E(3, "s1.s2")));
}

TEST_CASE("block types") {
  CHECK(block_type(GenSet{4, gen_bit(1) | gen_bit(3)}) == std::vector<int>{1, 1});
  CHECK(block_type(GenSet{4, gen_bit(1) | gen_bit(2)}) == std::vector<int>{2});
  CHECK(block_type(GenSet{4, gen_bit(0) | gen_bit(3)}) == std::vector<int>{2});
  CHECK(block_type(GenSet{4, 0}).empty());
}
