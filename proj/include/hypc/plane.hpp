#pragma once

// The half-plane model: points, lines, betweenness, sides and intersections.
//
// The plane is fixed by the unit covector i = (0, -1); the distinguished
// 1-cycle is p = i.X, so <p, q(u)> = 2 u.y and the model is the upper
// half-plane. Lines are zero sets of positive-norm cycles orthogonal to p:
// vertical half-lines and semicircles centered on the x-axis.

#include <array>
#include <optional>
#include <string>

#include "hypc/cycles.hpp"

namespace hypc {

struct PlaneContext {
  Vec2 i;
  Cycle p;
};

inline PlaneContext make_context() {
  const Vec2 i{Scalar(0), Scalar(-1)};
  return {i, Cycle{Scalar(0), i, Scalar(0)}};
}

/// The standard context, shared by the value types below.
inline const PlaneContext& standard_context() {
  static const PlaneContext ctx = make_context();
  return ctx;
}

inline bool contains(const PlaneContext& ctx, const Vec2& u) {
  return pairing(ctx.p, zero_circle(u)).sign() > 0;
}

/// A point of the open half-plane.
class Point {
 public:
  explicit Point(Vec2 u) : u_(std::move(u)) {
    if (!contains(standard_context(), u_)) throw DomainError("point is not in the half-plane");
  }
  Point(Scalar x, Scalar y) : Point(Vec2{std::move(x), std::move(y)}) {}

  const Vec2& u() const { return u_; }
  const Scalar& x() const { return u_.x; }
  const Scalar& y() const { return u_.y; }
  Cycle q() const { return zero_circle(u_); }

  friend bool operator==(const Point& a, const Point& b) { return a.u_ == b.u_; }

 private:
  Vec2 u_;
};

/// A hyperbolic line. m() is the canonical unit-norm cycle: norm 1 and
/// first nonzero coordinate among (a, b_x, b_y, c) positive. cycle() is a
/// positive multiple of m() with simpler coefficients (a primitive integer
/// vector when m() is a multiple of a rational cycle); predicates use it
/// since they only depend on signs.
class Line {
 public:
  /// Unit-norm representative, computed on first use.
  const Cycle& m() const {
    if (!unit_) unit_ = primitive_ / sqrt(norm(primitive_));
    return *unit_;
  }
  const Cycle& cycle() const { return primitive_; }

  friend bool operator==(const Line& l, const Line& k) {
    if (l.rational_ && k.rational_) {
      const CycleCoords a = l.primitive_.coords(), b = k.primitive_.coords();
      for (std::size_t i = 0; i < 4; ++i)
        if (*a[i].rational() != *b[i].rational()) return false;
      return true;
    }
    return proportional(l.primitive_, k.primitive_);
  }

 private:
  friend Line line_from_cycle(const PlaneContext& ctx, const Cycle& m);
  Line(Cycle primitive, bool rational) : primitive_(std::move(primitive)), rational_(rational) {}

  Cycle primitive_;
  mutable std::optional<Cycle> unit_;
  bool rational_;
};

namespace detail {

// Rescales a cycle to a primitive integer vector when it is rational, then
// flips it so that its first nonzero coordinate is positive.
inline std::pair<Cycle, bool> canonical_multiple(const Cycle& m) {
  CycleCoords v = m.coords();
  bool rational = true;
  for (const auto& s : v) rational = rational && s.is_rational();
  if (!rational) {
    // A multiple of a rational cycle becomes rational after dividing by its
    // first nonzero coordinate (exactly so inside one quadratic field).
    std::size_t first = 0;
    while (first < 4 && v[first].is_zero()) ++first;
    if (first < 4) {
      CycleCoords w = v;
      bool all = true;
      for (std::size_t i = 0; i < 4 && all; ++i) {
        w[i] = v[i] / v[first];
        all = w[i].is_rational();
      }
      if (all) {
        v = w;
        rational = true;
      }
    }
  }
  if (rational) {
    mpz_class den = 1, num = 0;
    for (const auto& s : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.rational()->get_den().get_mpz_t());
    std::array<mpz_class, 4> ints;
    for (std::size_t i = 0; i < 4; ++i) {
      mpq_class t = *v[i].rational() * den;
      ints[i] = t.get_num();
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), ints[i].get_mpz_t());
    }
    for (std::size_t i = 0; i < 4; ++i) v[i] = Scalar(mpz_class(ints[i] / num));
  }
  for (const auto& s : v) {
    const int sg = s.sign();
    if (sg == 0) continue;
    if (sg < 0)
      for (auto& t : v) t = -t;
    break;
  }
  return {Cycle::from_coords(v), rational};
}

}  // namespace detail

inline Line line_from_cycle(const PlaneContext& ctx, const Cycle& m) {
  if (m.is_zero()) throw DomainError("line_from_cycle: zero cycle");
  if (!pairing(m, ctx.p).is_zero()) throw DomainError("line_from_cycle: cycle is not orthogonal to p");
  auto [primitive, rational] = detail::canonical_multiple(m);
  if (norm(primitive).sign() <= 0) throw DomainError("line_from_cycle: cycle norm is not positive");
  return Line(primitive, rational);
}

inline bool on_line(const Line& L, const Point& u) { return pairing(L.cycle(), u.q()).is_zero(); }

/// Side of u relative to L: the sign of <m, q(u)>, 0 on the line.
inline int side(const Line& L, const Point& u) { return pairing(L.cycle(), u.q()).sign(); }

inline Line line_through(const PlaneContext& ctx, const Point& u, const Point& v) {
  if (u == v) throw DomainError("line_through: points coincide");
  const Cycle m = orthogonal_complement(ctx.p, u.q(), v.q());
  return line_from_cycle(ctx, m);
}

/// Point of L for parameter s > 0. Vertical lines x = x0 give (x0, s);
/// semicircles use the rational parametrization
/// (x0 + r(1 - s^2)/(1 + s^2), 2rs/(1 + s^2)).
inline Point param_point(const Line& L, const Scalar& s) {
  if (s.sign() <= 0) throw DomainError("param_point: parameter must be positive");
  const Cycle& m = L.cycle();
  if (m.a.is_zero()) return Point(-m.c / m.b.x, s);
  const Scalar x0 = -m.b.x / (Scalar(2) * m.a);
  const Scalar radius = sqrt(norm(m)) / (Scalar(2) * abs(m.a));
  const Scalar s2 = s * s;
  const Scalar den = Scalar(1) + s2;
  return Point(x0 + radius * (Scalar(1) - s2) / den, radius * Scalar(2) * s / den);
}

inline Point sample_point(const Line& L) { return param_point(L, Scalar(1)); }

/// True when p, q(u), q(v), q(w) are linearly dependent.
inline bool collinear(const PlaneContext& ctx, const Point& u, const Point& v, const Point& w) {
  return linalg::det4<Scalar>({ctx.p.coords(), u.q().coords(), v.q().coords(), w.q().coords()}).is_zero();
}

enum class Middle { First, Second, Third };

/// Signs of (x, y, z) in p = x q(u) + y q(v) + z q(w) for collinear points.
inline std::array<int, 3> betweenness_signs(const PlaneContext& ctx, const Point& u, const Point& v,
                                            const Point& w) {
  const std::array<CycleCoords, 3> cols{u.q().coords(), v.q().coords(), w.q().coords()};
  const CycleCoords rhs = ctx.p.coords();
  // Quadratic and linear coefficient rows first; constant row as fallback.
  static constexpr std::array<std::array<std::size_t, 3>, 4> row_sets{
      {{0, 1, 2}, {0, 2, 3}, {0, 1, 3}, {1, 2, 3}}};
  for (const auto& rows : row_sets) {
    linalg::Mat3<Scalar> a;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a[i][j] = cols[j][rows[i]];
    const int d = linalg::det3(a).sign();
    if (d == 0) continue;
    std::array<int, 3> out{};
    for (std::size_t k = 0; k < 3; ++k) {
      linalg::Mat3<Scalar> ak = a;
      for (std::size_t i = 0; i < 3; ++i) ak[i][k] = rhs[rows[i]];
      out[k] = linalg::det3(ak).sign() * d;
    }
    return out;
  }
  throw std::logic_error("betweenness_signs: every 3x3 system is singular");
}

/// Which of three distinct collinear points lies between the other two.
inline Middle between(const PlaneContext& ctx, const Point& u, const Point& v, const Point& w) {
  if (u == v || v == w || u == w) throw DomainError("between: points must be distinct");
  if (!collinear(ctx, u, v, w)) throw DomainError("between: points are not collinear");
  const auto s = betweenness_signs(ctx, u, v, w);
  if (s[0] == 0 || s[1] == 0 || s[2] == 0) throw std::logic_error("between: vanishing coefficient");
  if (s[1] == s[2]) return Middle::First;
  if (s[0] == s[2]) return Middle::Second;
  return Middle::Third;
}

inline const Point& middle_point(const PlaneContext& ctx, const Point& u, const Point& v, const Point& w) {
  switch (between(ctx, u, v, w)) {
    case Middle::First:
      return u;
    case Middle::Second:
      return v;
    case Middle::Third:
      return w;
  }
  return v;
}

class Segment {
 public:
  Segment(Point u, Point v) : u_(std::move(u)), v_(std::move(v)) {
    if (u_ == v_) throw DomainError("segment endpoints coincide");
  }
  const Point& u() const { return u_; }
  const Point& v() const { return v_; }

 private:
  Point u_;
  Point v_;
};

inline bool segment_contains(const PlaneContext& ctx, const Segment& seg, const Point& x) {
  if (x == seg.u() || x == seg.v()) return true;
  if (!collinear(ctx, seg.u(), x, seg.v())) return false;
  return between(ctx, seg.u(), x, seg.v()) == Middle::Second;
}

struct IntersectKind {
  enum Kind { Intersecting, LimitingParallel, UltraParallel };
  Kind kind;
  std::optional<Point> point;
};

/// The two normalized zero circles spanning the orthogonal complement of
/// two intersecting lines: q(v) for the intersection point v and its mirror
/// image q(w) = q(v) - 2<p, q(v)> p across the boundary.
struct BoundaryPair {
  Cycle inside;
  Cycle outside;
};

inline BoundaryPair boundary_pair(const PlaneContext& ctx, const Line& L, const Line& M) {
  const Cycle g = orthogonal_complement(ctx.p, L.cycle(), M.cycle());
  const Scalar n = norm(g);
  if (n.sign() >= 0) throw DomainError("boundary_pair: lines do not intersect");
  // The complement is spanned by p and g with <p, p> = 1, <p, g> = 0, so its
  // isotropic directions are g +- sqrt(-<g, g>) p.
  const Scalar root = sqrt(-n);
  const Scalar signed_root = g.a.sign() > 0 ? root : -root;
  const Cycle in = signed_root * ctx.p + g;
  const Cycle out = g - signed_root * ctx.p;
  return {in / g.a, out / g.a};
}

inline IntersectKind intersect(const PlaneContext& ctx, const Line& L, const Line& M) {
  if (L == M) throw DomainError("intersect: lines are identical");
  const int d = gram_det({L.cycle(), M.cycle()}).sign();
  if (d == 0) return {IntersectKind::LimitingParallel, std::nullopt};
  if (d < 0) return {IntersectKind::UltraParallel, std::nullopt};
  const BoundaryPair bp = boundary_pair(ctx, L, M);
  return {IntersectKind::Intersecting, Point(center_of_isotropic(bp.inside))};
}

/// Whether M separates r and s, i.e. crosses the segment between them.
inline bool pasch_crossing(const PlaneContext&, const Line& M, const Point& r, const Point& s) {
  const int sr = side(M, r), ss = side(M, s);
  if (sr == 0 || ss == 0) throw DomainError("pasch_crossing: a point lies on the line");
  return sr * ss < 0;
}

/// The point where M crosses the segment [r, s], if it does. It is the
/// center of the isotropic cycle x p + y q(r) + z q(s) with y, z > 0 chosen
/// so the cycle is orthogonal to M, and x the root of
/// x^2 + 2x<p, y q(r) + z q(s)> + 2yz<q(r), q(s)> = 0 on the half-plane side.
inline std::optional<Point> pasch_witness(const PlaneContext& ctx, const Line& M, const Point& r,
                                          const Point& s) {
  if (!pasch_crossing(ctx, M, r, s)) return std::nullopt;
  const Cycle qr = r.q(), qs = s.q();
  const Scalar y = abs(pairing(M.cycle(), qs));
  const Scalar z = abs(pairing(M.cycle(), qr));
  const Cycle combo = y * qr + z * qs;
  const Scalar beta = pairing(ctx.p, combo);
  const Scalar gamma = Scalar(2) * y * z * pairing(qr, qs);
  const Scalar x = sqrt(beta * beta - gamma) - beta;
  const Cycle f = x * ctx.p + combo;
  return Point(center_of_isotropic(f));
}

/// A ray [origin through, infinity): origin plus the side of origin on the
/// line that contains `through`. Sides are told apart by the sign of
/// <n, q(v)> with n orthogonal to p, q(origin) and the line cycle.
struct Ray {
  Line line;
  Point origin;
  Point through;
  Cycle side_cycle;
  int side_sign;

  bool contains(const Point& v) const {
    if (v == origin) return true;
    if (!on_line(line, v)) return false;
    return pairing(side_cycle, v.q()).sign() == side_sign;
  }
};

inline Ray make_ray(const PlaneContext& ctx, const Point& origin, const Point& through) {
  Line L = line_through(ctx, origin, through);
  Cycle n = orthogonal_complement(ctx.p, origin.q(), L.cycle());
  const int sg = pairing(n, through.q()).sign();
  if (sg == 0) throw std::logic_error("make_ray: side cycle vanishes on the ray");
  return {std::move(L), origin, through, std::move(n), sg};
}

}  // namespace hypc
