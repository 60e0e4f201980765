#include <gtest/gtest.h>

#include "hypc/parallels.hpp"
#include "hypc/sampler.hpp"

using namespace hypc;

namespace {

Scalar q(long n, long d = 1) { return Scalar::from_rational(n, d); }
Point pt(long x, long y) { return Point(q(x), q(y)); }
Cycle cyc(long a, long bx, long by, long c) { return {q(a), {q(bx), q(by)}, q(c)}; }

const PlaneContext& ctx() { return standard_context(); }
const Line& axis() {
  static const Line l = line_from_cycle(ctx(), cyc(0, 1, 0, 0));
  return l;
}

}  // namespace

TEST(Parallels, Diag) {
  const DiagCoords a = to_diag(ctx(), cyc(0, 1, 0, 0));
  EXPECT_EQ(a.X, q(1));
  EXPECT_EQ(a.Y, q(0));
  EXPECT_EQ(a.Z, q(0));
  const DiagCoords b = to_diag(ctx(), cyc(1, 0, 0, -1));
  EXPECT_EQ(b.X, q(0));
  EXPECT_EQ(b.Y, q(2));
  EXPECT_EQ(b.Z, q(0));
  const Cycle f = cyc(3, -5, 0, 7);
  EXPECT_EQ(from_diag(to_diag(ctx(), f)), f);
  const DiagCoords d = to_diag(ctx(), f);
  EXPECT_EQ(norm(f), d.X * d.X + d.Y * d.Y - d.Z * d.Z);
  EXPECT_THROW(to_diag(ctx(), cyc(1, 0, 1, 0)), DomainError);
}

TEST(Parallels, ConicPoint) {
  const Cycle c0 = conic_point(ConicParam::at(q(0)));
  EXPECT_EQ(c0, (Cycle{q(1, 2), {q(1), q(0)}, q(1, 2)}));
  EXPECT_EQ(c0.a * zero_circle({q(-1), q(0)}), c0);
  EXPECT_EQ(conic_point(ConicParam::at(q(-1))), cyc(0, 0, 0, 2));
  const Cycle inf = conic_point(ConicParam::at_infinity());
  EXPECT_EQ(norm(inf).sign(), 0);
  EXPECT_EQ(center_of_isotropic(inf), (Vec2{q(1), q(0)}));
}

TEST(Parallels, ParallelAtParam) {
  const Point u = pt(1, 1);
  const auto m0 = parallel_at_param(ctx(), u, axis(), ConicParam::at(q(0)));
  ASSERT_TRUE(m0);
  EXPECT_EQ(m0->cycle(), cyc(1, -3, 0, 1));
  EXPECT_TRUE(on_line(*m0, u));
  EXPECT_EQ(gram_det({axis().cycle(), m0->cycle()}), q(-4));
  EXPECT_EQ(intersect(ctx(), axis(), *m0).kind, IntersectKind::UltraParallel);

  const Cycle c = conic_point(ConicParam::at(q(-1)));
  EXPECT_EQ(pairing(c, u.q()), q(-4));
  EXPECT_EQ(pairing(axis().cycle(), u.q()), q(-2));
  const auto m1 = parallel_at_param(ctx(), u, axis(), ConicParam::at(q(-1)));
  ASSERT_TRUE(m1);
  EXPECT_EQ(m1->cycle(), cyc(0, 1, 0, -1));
  EXPECT_EQ(intersect(ctx(), axis(), *m1).kind, IntersectKind::LimitingParallel);

  const auto m2 = parallel_at_param(ctx(), u, axis(), ConicParam::at(q(2)));
  ASSERT_TRUE(m2);
  EXPECT_FALSE(*m2 == *m0);
  EXPECT_THROW(parallel_at_param(ctx(), pt(0, 3), axis(), ConicParam::at(q(0))), DomainError);
}

TEST(Parallels, BoundaryPointGivesLimitingParallel) {
  // t = 1 is twice the zero circle of the boundary point 0 of the axis.
  EXPECT_EQ(conic_point(ConicParam::at(q(1))), cyc(2, 0, 0, 0));
  const auto m = parallel_at_param(ctx(), pt(1, 1), axis(), ConicParam::at(q(1)));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->cycle(), cyc(1, -2, 0, 0));
  EXPECT_EQ(intersect(ctx(), axis(), *m).kind, IntersectKind::LimitingParallel);
}

TEST(Parallels, CountDistinct) {
  const Point u = pt(1, 1);
  std::vector<ConicParam> ts;
  for (long t : {0, 1, 2, 3, -2}) ts.push_back(ConicParam::at(q(t)));
  EXPECT_GE(count_distinct_parallels(ctx(), u, axis(), ts), 3u);
  EXPECT_EQ(count_distinct_parallels(ctx(), u, axis(), {}), 0u);
  const std::vector<ConicParam> twice{ConicParam::at(q(2)), ConicParam::at(q(2))};
  EXPECT_EQ(count_distinct_parallels(ctx(), u, axis(), twice),
            count_distinct_parallels(ctx(), u, axis(), std::span(twice).first(1)));
  EXPECT_THROW(count_distinct_parallels(ctx(), pt(0, 1), axis(), ts), DomainError);
}

TEST(ParallelProperties, ConicIsIsotropic) {
  PointSampler s(41);
  for (int i = 0; i < 100; ++i) {
    const Cycle c = conic_point(ConicParam::at(s.coordinate()));
    EXPECT_EQ(norm(c).sign(), 0);
    EXPECT_EQ(pairing(c, ctx().p).sign(), 0);
  }
}

TEST(ParallelProperties, ConstructionSound) {
  PointSampler s(42);
  int configs = 0;
  while (configs < 40) {
    const Line l = s.line(ctx());
    const Point u = s.point();
    if (on_line(l, u)) continue;
    ++configs;
    std::vector<Line> found;
    for (int k = 0; k < 12; ++k) {
      const auto m = parallel_at_param(ctx(), u, l, ConicParam::at(s.coordinate()));
      if (!m) continue;
      EXPECT_TRUE(on_line(*m, u));
      EXPECT_NE(intersect(ctx(), l, *m).kind, IntersectKind::Intersecting);
      bool seen = false;
      for (const auto& f : found) seen = seen || f == *m;
      if (!seen) found.push_back(*m);
    }
    EXPECT_GE(found.size(), 2u);
  }
}

TEST(ParallelProperties, IntersectingMeansAnisotropic) {
  PointSampler s(43);
  for (int i = 0; i < 100; ++i) {
    const Line l = s.line(ctx());
    const Point u = s.point();
    const Point v = s.point();
    if (u == v || on_line(l, u)) continue;
    const Line m = line_through(ctx(), u, v);
    if (m == l) continue;
    const auto k = intersect(ctx(), l, m);
    EXPECT_EQ(k.kind == IntersectKind::Intersecting, gram_det({l.cycle(), m.cycle()}).sign() > 0);
  }
}
