#include <gtest/gtest.h>

#include "hypc/cycles.hpp"
#include "hypc/sampler.hpp"

using namespace hypc;

namespace {

Scalar q(long n, long d = 1) { return Scalar::from_rational(n, d); }
Vec2 v2(long x, long y) { return {q(x), q(y)}; }
Cycle cyc(long a, long bx, long by, long c) { return {q(a), {q(bx), q(by)}, q(c)}; }

Cycle random_cycle(PointSampler& s) { return {s.coordinate(), {s.coordinate(), s.coordinate()}, s.coordinate()}; }

}  // namespace

TEST(Cycles, Dot) {
  EXPECT_EQ(dot(v2(1, 0), v2(0, 1)), q(0));
  EXPECT_EQ(dot(v2(3, 4), v2(3, 4)), q(25));
  EXPECT_EQ(dot(v2(1, 2), v2(3, -1)), q(1));
}

TEST(Cycles, Pairing) {
  const Cycle p = cyc(0, 0, -1, 0);
  EXPECT_EQ(pairing(p, p), q(1));
  EXPECT_EQ(pairing(zero_circle(v2(0, 1)), zero_circle(v2(0, 3))), q(-8));
  EXPECT_EQ(norm(zero_circle(v2(7, -2))).sign(), 0);
}

TEST(Cycles, Norm) {
  EXPECT_EQ(norm(cyc(0, 1, 0, -1)), q(1));
  EXPECT_EQ(norm(cyc(1, 0, 0, -1)), q(4));
  EXPECT_EQ(norm(cyc(1, 0, -2, 1)), q(0));
}

TEST(Cycles, Classify) {
  EXPECT_EQ(classify(cyc(0, 0, 0, 5)), (CycleClass{Degree::ZeroCycle, true}));
  EXPECT_EQ(classify(cyc(0, 1, 0, -1)), (CycleClass{Degree::OneCycle, false}));
  EXPECT_EQ(classify(cyc(1, 0, -2, 1)), (CycleClass{Degree::TwoCycle, true}));
  EXPECT_EQ(classify(cyc(1, 0, 0, -1)), (CycleClass{Degree::TwoCycle, false}));
  EXPECT_THROW(classify(cyc(0, 0, 0, 0)), DomainError);
}

TEST(Cycles, ZeroCircle) {
  EXPECT_EQ(zero_circle(v2(0, 1)), cyc(1, 0, -2, 1));
  EXPECT_EQ(zero_circle(v2(0, 0)), cyc(1, 0, 0, 0));
  EXPECT_EQ(zero_circle(v2(3, 1)), cyc(1, -6, -2, 10));
}

TEST(Cycles, CenterOfIsotropic) {
  EXPECT_EQ(center_of_isotropic(cyc(1, 0, -2, 1)), v2(0, 1));
  EXPECT_EQ(center_of_isotropic(cyc(2, 0, -4, 2)), v2(0, 1));
  EXPECT_EQ(center_of_isotropic(cyc(1, -6, -2, 10)), v2(3, 1));
  EXPECT_THROW(center_of_isotropic(cyc(1, 0, 0, -1)), DomainError);
  EXPECT_THROW(center_of_isotropic(cyc(0, 0, 0, 3)), DomainError);
}

TEST(Cycles, GramDet) {
  EXPECT_EQ(gram_det({cyc(0, 1, 0, 0), cyc(1, 0, 0, -1)}), q(4));
  const Cycle f = cyc(2, 3, -1, 5);
  EXPECT_EQ(gram_det({f, f}).sign(), 0);
  const Scalar d = gram_det({cyc(0, 0, -1, 0), zero_circle(v2(0, 1)), zero_circle(v2(0, 4))});
  EXPECT_EQ(d.sign(), -1);
  EXPECT_EQ(d, q(-900));
  EXPECT_THROW(gram_det({f}), DomainError);
}

TEST(CycleProperties, BilinearAndSymmetric) {
  PointSampler s(1);
  for (int i = 0; i < 100; ++i) {
    const Cycle f = random_cycle(s), g = random_cycle(s), h = random_cycle(s);
    const Scalar alpha = s.coordinate();
    EXPECT_EQ(pairing(alpha * f + g, h), alpha * pairing(f, h) + pairing(g, h));
    EXPECT_EQ(pairing(f, g), pairing(g, f));
  }
}

TEST(CycleProperties, SignatureDiagonalizes) {
  const Scalar half = q(1, 2);
  const std::array<Cycle, 4> basis{Cycle{q(1), {q(0), q(0)}, q(0)}, Cycle{q(0), {q(1), q(0)}, q(0)},
                                   Cycle{q(0), {q(0), q(1)}, q(0)}, Cycle{q(0), {q(0), q(0)}, q(1)}};
  linalg::Mat4<Scalar> g;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g[i][j] = pairing(basis[i], basis[j]);
  EXPECT_EQ(linalg::det4(g), q(-4));

  // b_x, b_y, (a - c)/2, (a + c)/2 diagonalize the pairing to [1, 1, 1, -1].
  const std::array<Cycle, 4> diag{Cycle{q(0), {q(1), q(0)}, q(0)}, Cycle{q(0), {q(0), q(1)}, q(0)},
                                  Cycle{half, {q(0), q(0)}, -half}, Cycle{half, {q(0), q(0)}, half}};
  const std::array<long, 4> expected{1, 1, 1, -1};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(pairing(diag[i], diag[j]), q(i == j ? expected[i] : 0)) << i << "," << j;
}

TEST(CycleProperties, ZeroCircleIdentity) {
  PointSampler s(2);
  for (int i = 0; i < 200; ++i) {
    const Vec2 u{s.coordinate(), s.coordinate()}, v{s.coordinate(), s.coordinate()};
    EXPECT_EQ(pairing(zero_circle(u), zero_circle(v)), q(-2) * dot(u - v, u - v));
  }
}

TEST(CycleProperties, IsotropicTwoCycleFactorizes) {
  PointSampler s(3);
  for (int i = 0; i < 100; ++i) {
    Scalar k = s.coordinate();
    if (k.is_zero()) k = q(1);
    const Cycle f = k * zero_circle({s.coordinate(), s.coordinate()});
    ASSERT_EQ(norm(f).sign(), 0);
    const Vec2 c{-f.b.x / (q(2) * f.a), -f.b.y / (q(2) * f.a)};
    EXPECT_EQ(f, f.a * zero_circle(c));
  }
}

TEST(CycleProperties, Nondegenerate) {
  const std::array<Cycle, 4> basis{cyc(1, 0, 0, 0), cyc(0, 1, 0, 0), cyc(0, 0, 1, 0), cyc(0, 0, 0, 1)};
  for (const auto& e : basis) {
    bool some = false;
    for (const auto& f : basis) some = some || !pairing(e, f).is_zero();
    EXPECT_TRUE(some);
  }
}
