#pragma once

// Congruence transformations: orthogonal maps of the cycle space that fix p
// and send every q(u), u in the half-plane, to a positive multiple of some
// q(v). They are built from reflections along positive-norm cycles
// orthogonal to p and stored as exact 4x4 matrices.

#include <vector>

#include "hypc/plane.hpp"

namespace hypc {

using Matrix4 = linalg::Mat4<Scalar>;

/// Gram matrix of the cycle pairing in (a, b_x, b_y, c) coordinates.
inline const Matrix4& gram_matrix() {
  static const Matrix4 g = [] {
    Matrix4 m;
    for (auto& row : m)
      for (auto& e : row) e = Scalar(0);
    m[0][3] = Scalar(-2);
    m[3][0] = Scalar(-2);
    m[1][1] = Scalar(1);
    m[2][2] = Scalar(1);
    return m;
  }();
  return g;
}

struct Motion {
  Matrix4 matrix;
  /// Mirror cycles of the generating reflections, in order of application.
  std::vector<Cycle> mirrors;
};

inline Motion identity_motion() {
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = Scalar(i == j ? 1 : 0);
  return {m, {}};
}

/// x - 2 <x, t>/<t, t> t. Any nonzero multiple of t gives the same map.
inline Cycle reflect_cycle(const Cycle& t, const Cycle& x) {
  const Scalar n = norm(t);
  if (n.is_zero()) throw DomainError("reflect_cycle: isotropic mirror");
  return x - (Scalar(2) * pairing(x, t) / n) * t;
}

/// Reflection along a nonisotropic cycle, as a matrix.
inline Motion reflection(const Cycle& t) {
  const Scalar n = norm(t);
  if (n.is_zero()) throw DomainError("reflection: isotropic mirror");
  const CycleCoords tv = t.coords();
  const CycleCoords gt = functional(t);
  const Scalar k = Scalar(-2) / n;
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = Scalar(i == j ? 1 : 0) + k * tv[i] * gt[j];
  return {m, {t}};
}

inline Cycle apply_cycle(const Motion& M, const Cycle& f) {
  return Cycle::from_coords(linalg::multiply(M.matrix, f.coords()));
}

/// Orthogonal, fixes p, and sends q(u) for u in {(0,1), (1,1), (0,2)} to
/// 2-cycles with positive leading coefficient.
inline bool is_proper(const PlaneContext& ctx, const Motion& M) {
  const Matrix4& g = gram_matrix();
  const Matrix4 lhs = linalg::multiply(linalg::multiply(linalg::transpose(M.matrix), g), M.matrix);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!(lhs[i][j] == g[i][j])) return false;
  if (!(apply_cycle(M, ctx.p) == ctx.p)) return false;
  for (const Vec2& u : {Vec2{Scalar(0), Scalar(1)}, Vec2{Scalar(1), Scalar(1)}, Vec2{Scalar(0), Scalar(2)}})
    if (apply_cycle(M, zero_circle(u)).a.sign() <= 0) return false;
  return true;
}

/// Image of a point: M q(u) = lambda q(v) with lambda > 0.
inline Point apply(const Motion& M, const Point& u) {
  const Cycle f = apply_cycle(M, u.q());
  if (f.a.sign() <= 0) throw std::logic_error("apply: motion is not proper");
#ifdef HYPC_CHECK_INVARIANTS
  if (!norm(f).is_zero()) throw std::logic_error("apply: image cycle is not isotropic");
#endif
  const Scalar two_a = Scalar(2) * f.a;
  return Point(-f.b.x / two_a, -f.b.y / two_a);
}

/// first applies `second`, then `first`.
inline Motion compose(const Motion& first, const Motion& second) {
  Motion out{linalg::multiply(first.matrix, second.matrix), second.mirrors};
  out.mirrors.insert(out.mirrors.end(), first.mirrors.begin(), first.mirrors.end());
  return out;
}

/// G^-1 M^T G, exact for any orthogonal M.
inline Motion inverse(const Motion& M) {
  Matrix4 g_inv = gram_matrix();
  g_inv[0][3] = Scalar::from_rational(-1, 2);
  g_inv[3][0] = Scalar::from_rational(-1, 2);
  Motion out{linalg::multiply(linalg::multiply(g_inv, linalg::transpose(M.matrix)), gram_matrix()),
             std::vector<Cycle>(M.mirrors.rbegin(), M.mirrors.rend())};
  return out;
}

inline Line apply_line(const PlaneContext& ctx, const Motion& M, const Line& L) {
  return line_from_cycle(ctx, apply_cycle(M, L.cycle()));
}

/// Fixes every point of L and exchanges its two sides.
inline Motion reflection_in_line(const Line& L) { return reflection(L.cycle()); }

/// Reflection along r = q(u) - lambda q(v), <q(u), p> = lambda <q(v), p>.
inline Motion reflection_swapping_points(const PlaneContext& ctx, const Point& u, const Point& v) {
  if (u == v) throw DomainError("reflection_swapping_points: points coincide");
  const Cycle qu = u.q(), qv = v.q();
  const Scalar lambda = pairing(qu, ctx.p) / pairing(qv, ctx.p);
  return reflection(qu - lambda * qv);
}

/// Reflection mapping L onto M, along l - m (or l + m) for the unit cycles.
inline Motion reflection_line_to_line(const PlaneContext&, const Line& L, const Line& M) {
  if (L == M) throw DomainError("reflection_line_to_line: lines are identical");
  // With l = L.cycle()/sqrt(n1) and m = M.cycle()/sqrt(n2), the mirror
  // l -+ m is a positive multiple of n2 L.cycle() -+ sqrt(n1 n2) M.cycle().
  // norm(l - m) = 2 - 2<l, m> decides which of the two is usable.
  const Cycle& lc = L.cycle();
  const Cycle& mc = M.cycle();
  const Scalar n1 = norm(lc), n2 = norm(mc);
  const Scalar k = sqrt(n1 * n2);
  const bool minus = (k - pairing(lc, mc)).sign() > 0;
  const Cycle mirror = minus ? n2 * lc - k * mc : n2 * lc + k * mc;
  return reflection(mirror);
}

/// Reflection fixing u on L and exchanging the two sides of u on L.
inline Motion reflection_fixing_point_on_line(const PlaneContext& ctx, const Point& u, const Line& L) {
  if (!on_line(L, u)) throw DomainError("reflection_fixing_point_on_line: point is not on the line");
  return reflection(orthogonal_complement(ctx.p, u.q(), L.cycle()));
}

/// d(u, v) = -<q(u), q(v)> / (<q(u), p> <q(v), p>); equals cosh(distance) - 1.
inline Scalar quasi_distance(const PlaneContext& ctx, const Point& u, const Point& v) {
  const Cycle qu = u.q(), qv = v.q();
  return -pairing(qu, qv) / (pairing(qu, ctx.p) * pairing(qv, ctx.p));
}

inline bool segment_congruent(const PlaneContext& ctx, const Segment& s1, const Segment& s2) {
  return quasi_distance(ctx, s1.u(), s1.v()) == quasi_distance(ctx, s2.u(), s2.v());
}

/// A congruence taking `from` onto `to`, origin to origin.
inline Motion transport_ray(const PlaneContext& ctx, const Ray& from, const Ray& to) {
  Motion T = identity_motion();
  if (!(from.line == to.line)) T = reflection_line_to_line(ctx, from.line, to.line);
  const Point origin = apply(T, from.origin);
  if (!(origin == to.origin)) T = compose(reflection_swapping_points(ctx, origin, to.origin), T);
  if (!to.contains(apply(T, from.through)))
    T = compose(reflection_fixing_point_on_line(ctx, to.origin, to.line), T);
  return T;
}

inline bool maps_ray_onto(const Motion& M, const Ray& from, const Ray& to) {
  return apply(M, from.origin) == to.origin && to.contains(apply(M, from.through));
}

/// An ordered pair of rays with a common origin.
struct Angle {
  Point vertex;
  Ray ray1;
  Ray ray2;
};

inline Angle make_angle(const PlaneContext& ctx, const Point& vertex, const Point& through1,
                        const Point& through2) {
  return {vertex, make_ray(ctx, vertex, through1), make_ray(ctx, vertex, through2)};
}

inline bool angle_congruent(const PlaneContext& ctx, const Angle& a1, const Angle& a2) {
  const Motion M = transport_ray(ctx, a1.ray1, a2.ray1);
  if (a2.ray2.contains(apply(M, a1.ray2.through))) return true;
  // The only other congruence taking ray1 onto ray1 swaps the sides of its line.
  const Motion flipped = compose(reflection_in_line(a2.ray1.line), M);
  return a2.ray2.contains(apply(flipped, a1.ray2.through));
}

}  // namespace hypc
