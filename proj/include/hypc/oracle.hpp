#pragma once

// Double-precision Poincaré half-plane model, used only to cross-check the
// exact kernel. Nothing here feeds back into exact results.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "hypc/plane.hpp"

namespace hypc::oracle {

struct FPoint {
  double x;
  double y;
};

inline FPoint to_fpoint(const Point& u) { return {u.x().to_double(), u.y().to_double()}; }

/// Hyperbolic distance, from |u - v| and |u - conj(v)|. A - B is rewritten
/// as 4 u_y v_y / (A + B) to avoid cancellation for distant points.
inline double distance(FPoint u, FPoint v) {
  const double A = std::hypot(u.x - v.x, u.y + v.y);
  const double B = std::hypot(u.x - v.x, u.y - v.y);
  const double diff = 4.0 * u.y * v.y / (A + B);
  return std::log1p(2.0 * B / diff);
}

/// cosh(rho) - 1, computed as 2 sinh^2(rho / 2).
inline double cosh_minus_one(FPoint u, FPoint v) {
  const double s = std::sinh(distance(u, v) / 2.0);
  return 2.0 * s * s;
}

/// A geodesic as a Euclidean vertical line x = center, or a semicircle
/// with the given center on the boundary and radius.
struct Geodesic {
  bool vertical;
  double center;
  double radius;
};

inline Geodesic to_geodesic(const Line& L) {
  const Cycle& f = L.cycle();
  const double a = f.a.to_double(), bx = f.b.x.to_double(), c = f.c.to_double();
  if (f.a.is_zero()) return {true, -c / bx, 0.0};
  const double n = norm(f).to_double();
  return {false, -bx / (2.0 * a), std::sqrt(n) / (2.0 * std::fabs(a))};
}

/// Position along the geodesic: height for vertical lines, the polar angle
/// about the center for semicircles (decreasing from the right end).
inline double parameter(const Geodesic& g, FPoint u) {
  if (g.vertical) return u.y;
  return std::atan2(u.y, u.x - g.center);
}

enum class Verdict { Intersecting, Limiting, Ultra };

/// Classification from the boundary endpoints, or nothing when an endpoint
/// gap is within `margin` (relative to the endpoint scale) of degeneracy.
inline std::optional<Verdict> classify(const Geodesic& g, const Geodesic& h, double margin = 1e-6) {
  if (g.vertical && h.vertical) return Verdict::Limiting;
  if (g.vertical != h.vertical) {
    const Geodesic& v = g.vertical ? g : h;
    const Geodesic& s = g.vertical ? h : g;
    const double gap = std::fabs(v.center - s.center) - s.radius;
    const double scale = std::max({1.0, std::fabs(v.center), std::fabs(s.center), s.radius});
    if (std::fabs(gap) <= margin * scale) return std::nullopt;
    return gap < 0 ? Verdict::Intersecting : Verdict::Ultra;
  }
  const double a1 = g.center - g.radius, b1 = g.center + g.radius;
  const double a2 = h.center - h.radius, b2 = h.center + h.radius;
  const double scale = std::max({1.0, std::fabs(a1), std::fabs(b1), std::fabs(a2), std::fabs(b2)});
  for (double e : {a2, b2})
    for (double f : {a1, b1})
      if (std::fabs(e - f) <= margin * scale) return std::nullopt;
  const bool a2_inside = a1 < a2 && a2 < b1;
  const bool b2_inside = a1 < b2 && b2 < b1;
  return a2_inside != b2_inside ? Verdict::Intersecting : Verdict::Ultra;
}

/// Index (0, 1, 2) of the middle point of three points on g, or nothing
/// when two parameters are within `margin` of each other.
inline std::optional<int> middle(const Geodesic& g, const std::array<FPoint, 3>& pts, double margin = 1e-6) {
  std::array<double, 3> t{};
  for (std::size_t i = 0; i < 3; ++i) t[i] = parameter(g, pts[i]);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (std::fabs(t[i] - t[j]) <= margin * std::max({1.0, std::fabs(t[i]), std::fabs(t[j])})) return std::nullopt;
  for (int i = 0; i < 3; ++i) {
    const double a = t[(i + 1) % 3], b = t[(i + 2) % 3];
    if ((a < t[i] && t[i] < b) || (b < t[i] && t[i] < a)) return i;
  }
  return std::nullopt;
}

}  // namespace hypc::oracle
