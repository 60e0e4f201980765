#pragma once

// Lines through a point that miss a given line.
//
// Cycles orthogonal to p form a 3-dimensional space isometric to the form
// X^2 + Y^2 - Z^2. Every isotropic cycle c of that space spans, together
// with the given line cycle l, an isotropic plane; the cycle of that plane
// which also passes through u defines a parallel to l through u.

#include <optional>
#include <span>
#include <vector>

#include "hypc/plane.hpp"

namespace hypc {

struct DiagCoords {
  Scalar X;
  Scalar Y;
  Scalar Z;
};

/// (b_x, a - c, a + c) for a cycle orthogonal to p (so b_y = 0).
inline DiagCoords to_diag(const PlaneContext& ctx, const Cycle& f) {
  if (!pairing(f, ctx.p).is_zero()) throw DomainError("to_diag: cycle is not orthogonal to p");
  return {f.b.x, f.a - f.c, f.a + f.c};
}

inline Cycle from_diag(const DiagCoords& d) {
  const Scalar half = Scalar::from_rational(1, 2);
  return {half * (d.Y + d.Z), {d.X, Scalar(0)}, half * (d.Z - d.Y)};
}

/// Parameter on the conic: a value t, or the point at infinity.
struct ConicParam {
  std::optional<Scalar> t;

  static ConicParam at(Scalar t) { return {std::move(t)}; }
  static ConicParam at_infinity() { return {std::nullopt}; }
  bool is_infinite() const { return !t.has_value(); }
};

/// Isotropic cycle with diagonal coordinates (1 - t^2, 2t, 1 + t^2);
/// infinity maps to (-1, 0, 1).
inline Cycle conic_point(const ConicParam& param) {
  if (param.is_infinite()) return from_diag({Scalar(-1), Scalar(0), Scalar(1)});
  const Scalar& t = *param.t;
  const Scalar t2 = t * t;
  return from_diag({Scalar(1) - t2, Scalar(2) * t, Scalar(1) + t2});
}

/// The parallel to L through u selected by a conic parameter, or nothing
/// when the parameter is degenerate (tangent direction or L itself).
inline std::optional<Line> parallel_at_param(const PlaneContext& ctx, const Point& u, const Line& L,
                                             const ConicParam& param) {
  const Cycle qu = u.q();
  const Cycle& l = L.cycle();
  const Scalar lu = pairing(l, qu);
  if (lu.is_zero()) throw DomainError("parallel_at_param: point lies on the line");
  const Cycle c = conic_point(param);
  const Cycle m = pairing(c, qu) * l - lu * c;
  if (m.is_zero() || norm(m).sign() <= 0 || proportional(m, l)) return std::nullopt;
  return line_from_cycle(ctx, m);
}

/// Distinct parallels among the given parameters, each checked to miss L.
inline std::size_t count_distinct_parallels(const PlaneContext& ctx, const Point& u, const Line& L,
                                            std::span<const ConicParam> params) {
  if (on_line(L, u)) throw DomainError("count_distinct_parallels: point lies on the line");
  std::vector<Line> found;
  for (const auto& t : params) {
    auto line = parallel_at_param(ctx, u, L, t);
    if (!line) continue;
    if (intersect(ctx, L, *line).kind == IntersectKind::Intersecting) continue;
    bool seen = false;
    for (const auto& f : found) seen = seen || f == *line;
    if (!seen) found.push_back(std::move(*line));
  }
  return found.size();
}

}  // namespace hypc
