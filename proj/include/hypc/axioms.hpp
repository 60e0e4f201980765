#pragma once

// Randomized exact checks of the Hilbert axioms for the half-plane model,
// plus a cross-check against the floating-point Poincaré model.
//
// Every suite is deterministic in its seed. Each axiom gets its own
// sampler stream, so changing the trial count of one axiom does not shift
// the configurations drawn for another.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "hypc/json_io.hpp"
#include "hypc/motions.hpp"
#include "hypc/oracle.hpp"
#include "hypc/parallels.hpp"
#include "hypc/sampler.hpp"

namespace hypc {

struct AxiomReport {
  std::string id;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;
  std::optional<Json> first_counterexample;
  std::chrono::duration<double> elapsed{};
};

inline Json to_json(const AxiomReport& r) {
  Json j;
  j["id"] = r.id;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["skipped"] = r.skipped;
  if (r.first_counterexample) j["first_counterexample"] = *r.first_counterexample;
  j["elapsed_ms"] = std::round(r.elapsed.count() * 1e4) / 10.0;
  return j;
}

/// The operations under test. Replacing one with a faulty version must make
/// the suites report failures.
struct Kernel {
  std::function<Line(const PlaneContext&, const Point&, const Point&)> line_through = hypc::line_through;
  std::function<Middle(const PlaneContext&, const Point&, const Point&, const Point&)> between = hypc::between;
  std::function<Scalar(const PlaneContext&, const Point&, const Point&)> quasi_distance = hypc::quasi_distance;
  std::function<std::optional<Line>(const PlaneContext&, const Point&, const Line&, const ConicParam&)>
      parallel_at_param = hypc::parallel_at_param;
};

namespace detail {

enum class Outcome { Pass, Fail, Skip };

inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  return seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
}

// Runs `trial` n times. The trial records its configuration in `config`;
// on failure (or exception) that configuration becomes the counterexample.
template <class F>
AxiomReport run_axiom(std::string id, std::size_t n, std::uint64_t seed, std::uint64_t stream, F&& trial) {
  AxiomReport r;
  r.id = std::move(id);
  PointSampler s(stream_seed(seed, stream));
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < n; ++i) {
    Json config = Json::object();
    Outcome out;
    try {
      out = trial(s, config);
    } catch (const std::exception& e) {
      config["error"] = e.what();
      out = Outcome::Fail;
    }
    ++r.trials;
    if (out == Outcome::Skip) ++r.skipped;
    if (out == Outcome::Fail) {
      ++r.failures;
      if (!r.first_counterexample) {
        config["trial"] = i;
        r.first_counterexample = std::move(config);
      }
    }
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

inline Outcome fail(Json& config, const std::string& reason) {
  config["reason"] = reason;
  return Outcome::Fail;
}

inline void require_trials(std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("axiom suite needs at least one trial");
}

// Null vector of three functionals by Gauss-Jordan elimination, pivoting
// from the last column: an independent route to the line through two points.
inline Cycle eliminate(const std::array<CycleCoords, 3>& rows_in) {
  std::array<CycleCoords, 3> m = rows_in;
  std::array<int, 3> pivot{-1, -1, -1};
  std::size_t row = 0;
  for (int col = 3; col >= 0 && row < 3; --col) {
    std::size_t r = row;
    while (r < 3 && m[r][col].is_zero()) ++r;
    if (r == 3) continue;
    std::swap(m[r], m[row]);
    const Scalar inv = Scalar(1) / m[row][col];
    for (auto& e : m[row]) e = e * inv;
    for (std::size_t k = 0; k < 3; ++k) {
      if (k == row || m[k][col].is_zero()) continue;
      const Scalar f = m[k][col];
      for (std::size_t j = 0; j < 4; ++j) m[k][j] = m[k][j] - f * m[row][j];
    }
    pivot[row++] = col;
  }
  int free_col = -1;
  for (int col = 3; col >= 0 && free_col < 0; --col)
    if (std::find(pivot.begin(), pivot.end(), col) == pivot.end()) free_col = col;
  CycleCoords x{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
  x[free_col] = Scalar(1);
  for (std::size_t r = 0; r < 3; ++r)
    if (pivot[r] >= 0) x[pivot[r]] = -m[r][free_col];
  return Cycle::from_coords(x);
}

inline Point distinct_from(PointSampler& s, const Point& u) {
  for (;;) {
    Point v = s.point();
    if (!(v == u)) return v;
  }
}

inline std::array<Point, 3> triangle(const PlaneContext& ctx, PointSampler& s) {
  for (;;) {
    Point u = s.point(), v = s.point(), w = s.point();
    if (u == v || u == w || v == w || collinear(ctx, u, v, w)) continue;
    return {std::move(u), std::move(v), std::move(w)};
  }
}

// Products of one to four reflections in random lines or point swaps.
inline Motion random_motion(const PlaneContext& ctx, PointSampler& s) {
  Motion m = identity_motion();
  const int n = s.integer(1, 4);
  for (int i = 0; i < n; ++i) {
    auto [u, v] = s.pair();
    m = compose(s.integer(0, 1) == 0 ? reflection_in_line(line_through(ctx, u, v))
                                     : reflection_swapping_points(ctx, u, v),
                m);
  }
  return m;
}

// Distinct positive parameters, sorted ascending.
inline std::vector<Scalar> sorted_parameters(PointSampler& s, std::size_t n) {
  std::vector<Scalar> t;
  while (t.size() < n) {
    Scalar x = s.parameter();
    bool dup = false;
    for (const auto& y : t) dup = dup || y == x;
    if (!dup) t.push_back(std::move(x));
  }
  std::sort(t.begin(), t.end());
  return t;
}

// The image of a rational anchor on the rational line L under the rotation
// about its center with half-angle tangent t (semicircles) or the scaling
// of heights by t (vertical lines). Rational points stay rational, which
// keeps later constructions inside a single quadratic field.
inline std::optional<Point> move_along(const Line& L, const Point& anchor, const Scalar& t) {
  const Cycle& f = L.cycle();
  if (f.a.is_zero()) {
    if (t.sign() <= 0) return std::nullopt;
    return Point(anchor.x(), anchor.y() * t);
  }
  const Scalar c = -f.b.x / (Scalar(2) * f.a);
  const Scalar dx = anchor.x() - c, dy = anchor.y();
  const Scalar den = Scalar(1) + t * t;
  const Scalar cs = (Scalar(1) - t * t) / den, sn = Scalar(2) * t / den;
  const Scalar y = sn * dx + cs * dy;
  if (y.sign() <= 0) return std::nullopt;
  return Point(c + cs * dx - sn * dy, y);
}

// A random rational point of L other than the anchor.
inline Point rational_point_on(const Line& L, const Point& anchor, PointSampler& s) {
  for (;;) {
    const Scalar t = L.cycle().a.is_zero() ? s.parameter() : s.coordinate();
    if (auto u = move_along(L, anchor, t); u && !(*u == anchor)) return *u;
  }
}

// A rational point of L near the float parameter `target` (height or
// polar angle, as in the oracle).
inline std::optional<Point> rational_point_near(const Line& L, const Point& anchor, double target) {
  const oracle::FPoint a = oracle::to_fpoint(anchor);
  const oracle::Geodesic g = oracle::to_geodesic(L);
  const double t = g.vertical ? target / a.y : std::tan((target - oracle::parameter(g, a)) / 2.0);
  if (!std::isfinite(t) || std::fabs(t) > 1e6) return std::nullopt;
  return move_along(L, anchor, Scalar::from_rational(std::lround(t * 4096.0), 4096));
}

inline Json points_json(std::initializer_list<const Point*> pts) {
  Json j = Json::array();
  for (const Point* p : pts) j.push_back(to_json(*p));
  return j;
}

}  // namespace detail

/// I1 unique line, I2 two points per line, I3 three non-collinear points.
inline std::vector<AxiomReport> check_incidence(std::uint64_t seed, std::size_t trials = 500,
                                                const Kernel& k = {}) {
  using namespace detail;
  require_trials(trials);
  const PlaneContext& ctx = standard_context();
  std::vector<AxiomReport> out;

  out.push_back(run_axiom("I1", trials, seed, 1, [&](PointSampler& s, Json& cfg) {
    auto [u, v] = s.pair();
    cfg["points"] = points_json({&u, &v});
    const Line L = k.line_through(ctx, u, v);
    cfg["line"] = to_json(L);
    if (!on_line(L, u) || !on_line(L, v)) return fail(cfg, "line misses a given point");
    const Cycle g = eliminate({functional(v.q()), functional(u.q()), functional(ctx.p)});
    if (!(line_from_cycle(ctx, g) == L)) return fail(cfg, "elimination finds a different line");
    return Outcome::Pass;
  }));

  out.push_back(run_axiom("I2", trials, seed, 2, [&](PointSampler& s, Json& cfg) {
    auto [u, v] = s.pair();
    cfg["points"] = points_json({&u, &v});
    const Line L = k.line_through(ctx, u, v);
    const auto t = sorted_parameters(s, 2);
    cfg["params"] = Json::array({t[0].format(), t[1].format()});
    const Point a = param_point(L, t[0]), b = param_point(L, t[1]);
    if (!on_line(L, a) || !on_line(L, b)) return fail(cfg, "parametrized point off the line");
    if (a == b) return fail(cfg, "distinct parameters give the same point");
    return Outcome::Pass;
  }));

  out.push_back(run_axiom("I3", trials, seed, 3, [&](PointSampler& s, Json& cfg) {
    // u, u + s, u + t with s vertical and t slanted, both pointing into the
    // half-plane.
    const Point u = s.point();
    const Vec2 sv{Scalar(0), s.positive_coordinate()};
    Scalar tx = s.coordinate();
    if (tx.is_zero()) tx = Scalar(1);
    const Vec2 tv{tx, s.positive_coordinate()};
    const Point us(u.u() + sv), ut(u.u() + tv);
    cfg["points"] = points_json({&u, &us, &ut});
    if (linalg::det4<Scalar>({ctx.p.coords(), u.q().coords(), us.q().coords(), ut.q().coords()}).is_zero())
      return fail(cfg, "p, q(u), q(u+s), q(u+t) are dependent");
    if (on_line(k.line_through(ctx, u, us), ut)) return fail(cfg, "the three points are collinear");
    return Outcome::Pass;
  }));
  return out;
}

/// O1-O2 permutation invariance, O3 parameter coherence, O4 Pasch.
inline std::vector<AxiomReport> check_order(std::uint64_t seed, std::size_t trials = 1000, const Kernel& k = {}) {
  using namespace detail;
  require_trials(trials);
  const PlaneContext& ctx = standard_context();
  const std::size_t pasch = std::max<std::size_t>(1, trials / 2);
  const std::size_t rest = std::max<std::size_t>(1, (trials - std::min(trials, pasch)) / 2);
  std::vector<AxiomReport> out;

  out.push_back(run_axiom("O1-O2", rest, seed, 11, [&](PointSampler& s, Json& cfg) {
    const Line L = k.line_through(ctx, s.point(), s.point());
    auto t = sorted_parameters(s, 3);
    std::shuffle(t.begin(), t.end(), s.engine());
    const std::array<Point, 3> pts{param_point(L, t[0]), param_point(L, t[1]), param_point(L, t[2])};
    cfg["points"] = points_json({&pts[0], &pts[1], &pts[2]});
    const auto signs = betweenness_signs(ctx, pts[0], pts[1], pts[2]);
    const int odd = (signs[0] != signs[1] && signs[0] != signs[2]) + (signs[1] != signs[0] && signs[1] != signs[2]) +
                    (signs[2] != signs[0] && signs[2] != signs[1]);
    if (signs[0] == 0 || signs[1] == 0 || signs[2] == 0 || odd != 1)
      return fail(cfg, "not exactly one coefficient of opposite sign");
    std::array<int, 3> perm{0, 1, 2};
    std::optional<Point> mid;
    do {
      const Point& a = pts[perm[0]];
      const Point& b = pts[perm[1]];
      const Point& c = pts[perm[2]];
      const Middle m = k.between(ctx, a, b, c);
      const Point& found = m == Middle::First ? a : (m == Middle::Second ? b : c);
      if (!mid) mid = found;
      else if (!(*mid == found)) return fail(cfg, "middle point depends on the argument order");
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Outcome::Pass;
  }));

  out.push_back(run_axiom("O3", rest, seed, 12, [&](PointSampler& s, Json& cfg) {
    // Parameters u < s < v < t < w along a random line.
    const Line L = k.line_through(ctx, s.point(), s.point());
    cfg["line"] = to_json(L);
    const auto t = sorted_parameters(s, 5);
    Json params = Json::array();
    for (const auto& x : t) params.push_back(x.format());
    cfg["params"] = params;
    std::vector<Point> p;
    for (const auto& x : t) p.push_back(param_point(L, x));
    if (k.between(ctx, p[0], p[1], p[3]) != Middle::Second) return fail(cfg, "s is not between u and t");
    if (k.between(ctx, p[1], p[2], p[3]) != Middle::Second) return fail(cfg, "v is not between s and t");
    if (k.between(ctx, p[1], p[3], p[4]) != Middle::Second) return fail(cfg, "t is not between s and w");
    if (k.between(ctx, p[4], p[0], p[2]) != Middle::Third) return fail(cfg, "order disagrees with parameters");
    return Outcome::Pass;
  }));

  out.push_back(run_axiom("O4", pasch, seed, 13, [&](PointSampler& s, Json& cfg) {
    const auto tri = triangle(ctx, s);
    cfg["triangle"] = points_json({&tri[0], &tri[1], &tri[2]});
    Line M = k.line_through(ctx, s.point(), s.point());
    while (on_line(M, tri[0]) || on_line(M, tri[1]) || on_line(M, tri[2]))
      M = k.line_through(ctx, s.point(), s.point());
    cfg["line"] = to_json(M);
    int crossed = 0;
    for (int i = 0; i < 3; ++i) {
      const Point& r = tri[i];
      const Point& t = tri[(i + 1) % 3];
      const auto w = pasch_witness(ctx, M, r, t);
      if (!w) continue;
      ++crossed;
      if (!on_line(M, *w)) return fail(cfg, "crossing point is off the line");
      if (k.between(ctx, r, *w, t) != Middle::Second) return fail(cfg, "crossing point is not inside the side");
    }
    cfg["sides_crossed"] = crossed;
    if (crossed != 0 && crossed != 2) return fail(cfg, "line crosses an odd number of sides");
    return Outcome::Pass;
  }));
  return out;
}

/// C1-C6, with SAS checked by reconstructing the congruence.
inline std::vector<AxiomReport> check_congruence(std::uint64_t seed, std::size_t trials = 500,
                                                 const Kernel& k = {}) {
  using namespace detail;
  require_trials(trials);
  const PlaneContext& ctx = standard_context();
  const std::size_t each = std::max<std::size_t>(1, trials / 6);
  const std::size_t sas = std::max<std::size_t>(1, trials - std::min(trials, 5 * each));
  std::vector<AxiomReport> out;
  auto qd = [&](const Point& a, const Point& b) { return k.quasi_distance(ctx, a, b); };

  out.push_back(run_axiom("C1", each, seed, 21, [&](PointSampler& s, Json& cfg) {
    auto [u, v] = s.pair();
    const Motion m1 = random_motion(ctx, s), m2 = random_motion(ctx, s);
    const Point u1 = apply(m1, u), v1 = apply(m1, v), u2 = apply(m2, u), v2 = apply(m2, v);
    cfg["segments"] = Json::array({points_json({&u, &v}), points_json({&u1, &v1}), points_json({&u2, &v2})});
    const Scalar d = qd(u, v);
    if (!(d == qd(u, v))) return fail(cfg, "segment not congruent to itself");
    if (!(qd(u1, v1) == d) || !(qd(u2, v2) == d)) return fail(cfg, "motion image not congruent");
    if (!(qd(u1, v1) == qd(u2, v2))) return fail(cfg, "congruence is not transitive");
    return Outcome::Pass;
  }));

  out.push_back(run_axiom("C2", each, seed, 22, [&](PointSampler& s, Json& cfg) {
    const auto tri = triangle(ctx, s);
    const Motion m1 = random_motion(ctx, s), m2 = random_motion(ctx, s);
    cfg["angle"] = points_json({&tri[0], &tri[1], &tri[2]});
    const Angle a = make_angle(ctx, tri[0], tri[1], tri[2]);
    const Angle b = make_angle(ctx, apply(m1, tri[0]), apply(m1, tri[1]), apply(m1, tri[2]));
    const Angle c = make_angle(ctx, apply(m2, tri[0]), apply(m2, tri[1]), apply(m2, tri[2]));
    if (!angle_congruent(ctx, a, a)) return fail(cfg, "angle not congruent to itself");
    if (!angle_congruent(ctx, b, a) || !angle_congruent(ctx, c, a)) return fail(cfg, "motion image not congruent");
    if (!angle_congruent(ctx, b, c)) return fail(cfg, "angle congruence is not transitive");
    return Outcome::Pass;
  }));

  out.push_back(run_axiom("C3", each, seed, 23, [&](PointSampler& s, Json& cfg) {
    auto [u, v] = s.pair();
    auto [w, x] = s.pair();
    cfg["segment"] = points_json({&u, &v});
    cfg["ray"] = points_json({&w, &x});
    const Line L = line_through(ctx, w, x);
    const Point x_other = apply(reflection_fixing_point_on_line(ctx, w, L), x);
    const Scalar d = qd(u, v);
    for (const Point* dir : std::array<const Point*, 2>{&x, &x_other}) {
      const Ray target = make_ray(ctx, w, *dir);
      const Point t = apply(transport_ray(ctx, make_ray(ctx, u, v), target), v);
      if (t == w || !target.contains(t)) return fail(cfg, "transported point is not on the ray");
      if (!(qd(w, t) == d)) return fail(cfg, "transported segment is not congruent");
      // Any other point of the ray is at a different quasi-distance.
      const Point other = rational_point_on(L, w, s);
      if (!(other == t) && !(other == w) && target.contains(other) && qd(w, other) == d)
        return fail(cfg, "second point on the ray with the same quasi-distance");
    }
    return Outcome::Pass;
  }));

  out.push_back(run_axiom("C4", each, seed, 24, [&](PointSampler& s, Json& cfg) {
    auto [p0, p1] = s.pair();
    const Line L = line_through(ctx, p0, p1);
    std::array<Point, 3> on{p0, rational_point_on(L, p0, s), p1};
    while (on[1] == on[2]) on[2] = rational_point_on(L, p0, s);
    // Order them so that v lies between u and w.
    const Middle mid = between(ctx, on[0], on[1], on[2]);
    if (mid == Middle::First) std::swap(on[0], on[1]);
    if (mid == Middle::Third) std::swap(on[2], on[1]);
    const Point &u = on[0], &v = on[1], &w = on[2];
    auto [x, x_dir] = s.pair();
    cfg["segments"] = points_json({&u, &v, &w});
    cfg["ray"] = points_json({&x, &x_dir});
    const Line M = line_through(ctx, x, x_dir);
    const Point y = apply(transport_ray(ctx, make_ray(ctx, u, v), make_ray(ctx, x, x_dir)), v);
    // A rational point of M past y, seen from x.
    const oracle::Geodesic g = oracle::to_geodesic(M);
    const double tx = oracle::parameter(g, oracle::to_fpoint(x)), ty = oracle::parameter(g, oracle::to_fpoint(y));
    const double end = g.vertical ? (tx < ty ? 2.0 * ty : 0.0) : (tx < ty ? std::numbers::pi : 0.0);
    const auto beyond = rational_point_near(M, x, (ty + end) / 2.0);
    if (!beyond || between(ctx, x, y, *beyond) != Middle::Second) return Outcome::Skip;
    const Point z = apply(transport_ray(ctx, make_ray(ctx, v, w), make_ray(ctx, y, *beyond)), w);
    if (!(qd(x, y) == qd(u, v)) || !(qd(y, z) == qd(v, w))) return fail(cfg, "construction broke congruence");
    if (k.between(ctx, x, y, z) != Middle::Second) return fail(cfg, "segments on M overlap");
    if (!(qd(u, w) == qd(x, z))) return fail(cfg, "sums of congruent segments differ");
    return Outcome::Pass;
  }));

  out.push_back(run_axiom("C5", each, seed, 25, [&](PointSampler& s, Json& cfg) {
    const auto tri = triangle(ctx, s);
    auto [x, x_dir] = s.pair();
    cfg["angle"] = points_json({&tri[0], &tri[1], &tri[2]});
    cfg["ray"] = points_json({&x, &x_dir});
    const Angle alpha = make_angle(ctx, tri[0], tri[1], tri[2]);
    const Ray T = make_ray(ctx, x, x_dir);
    const Point w1 = apply(transport_ray(ctx, alpha.ray1, T), tri[2]);
    const Point w2 = apply(reflection_in_line(T.line), w1);
    const int s1 = side(T.line, w1), s2 = side(T.line, w2);
    if (s1 == 0 || s1 != -s2) return fail(cfg, "rays not on opposite sides");
    if (!angle_congruent(ctx, alpha, make_angle(ctx, x, x_dir, w1)) ||
        !angle_congruent(ctx, alpha, make_angle(ctx, x, x_dir, w2)))
      return fail(cfg, "constructed angle not congruent");
    const Point r = s.point();
    if (side(T.line, r) != 0) {
      const Ray ray_w = make_ray(ctx, x, side(T.line, r) == s1 ? w1 : w2);
      if (!ray_w.contains(r) && angle_congruent(ctx, alpha, make_angle(ctx, x, x_dir, r)))
        return fail(cfg, "second congruent ray on the same side");
    }
    return Outcome::Pass;
  }));

  out.push_back(run_axiom("C6", sas, seed, 26, [&](PointSampler& s, Json& cfg) {
    const auto tri = triangle(ctx, s);
    const Point &u = tri[0], &v = tri[1], &w = tri[2];
    auto [x, x_dir] = s.pair();
    const Motion T = transport_ray(ctx, make_ray(ctx, u, v), make_ray(ctx, x, x_dir));
    const Point y = apply(T, v);
    Point z = apply(T, w);
    if (s.integer(0, 1) == 1) z = apply(reflection_in_line(line_through(ctx, x, y)), z);
    cfg["first"] = points_json({&u, &v, &w});
    cfg["second"] = points_json({&x, &y, &z});
    if (!(qd(u, v) == qd(x, y)) || !(qd(u, w) == qd(x, z))) return fail(cfg, "hypothesis: sides differ");
    if (!angle_congruent(ctx, make_angle(ctx, u, v, w), make_angle(ctx, x, y, z)))
      return fail(cfg, "hypothesis: angles differ");
    Motion S = transport_ray(ctx, make_ray(ctx, u, v), make_ray(ctx, x, y));
    if (!make_ray(ctx, x, z).contains(apply(S, w))) S = compose(reflection_in_line(line_through(ctx, x, y)), S);
    if (!(apply(S, u) == x) || !(apply(S, v) == y) || !(apply(S, w) == z))
      return fail(cfg, "no congruence maps the triangle");
    return Outcome::Pass;
  }));
  return out;
}

/// Hyperbolic parallel axiom: 12 conic parameters per configuration, at
/// least two distinct verified parallels.
inline std::vector<AxiomReport> check_parallel(std::uint64_t seed, std::size_t trials = 100, const Kernel& k = {}) {
  using namespace detail;
  require_trials(trials);
  const PlaneContext& ctx = standard_context();
  std::vector<AxiomReport> out;
  out.push_back(run_axiom("P", trials, seed, 31, [&](PointSampler& s, Json& cfg) {
    const Line L = line_through(ctx, s.point(), s.point());
    Point u = s.point();
    while (on_line(L, u)) u = s.point();
    cfg["line"] = to_json(L);
    cfg["point"] = to_json(u);
    std::vector<Line> found;
    Json params = Json::array();
    for (int i = 0; i < 12; ++i) {
      const Scalar t = s.coordinate();
      params.push_back(t.format());
      cfg["params"] = params;
      const auto m = k.parallel_at_param(ctx, u, L, ConicParam::at(t));
      if (!m) continue;
      if (!on_line(*m, u)) return fail(cfg, "parallel misses the point");
      if (*m == L || intersect(ctx, L, *m).kind == IntersectKind::Intersecting)
        return fail(cfg, "constructed parallel meets the line");
      bool seen = false;
      for (const auto& f : found) seen = seen || f == *m;
      if (!seen) found.push_back(*m);
    }
    cfg["distinct"] = found.size();
    if (found.size() < 2) return fail(cfg, "fewer than two parallels");
    return Outcome::Pass;
  }));
  return out;
}

/// Exact results against the double-precision Poincaré model: X1
/// quasi-distance vs cosh(rho) - 1, X2 betweenness, X3 intersection kind.
/// Near-degenerate configurations are skipped and counted.
inline std::vector<AxiomReport> oracle_crosscheck(std::uint64_t seed, std::size_t trials = 1000,
                                                  const Kernel& k = {}) {
  using namespace detail;
  require_trials(trials);
  const PlaneContext& ctx = standard_context();
  std::vector<AxiomReport> out;

  out.push_back(run_axiom("X1", trials, seed, 41, [&](PointSampler& s, Json& cfg) {
    auto [u, v] = s.pair();
    cfg["points"] = points_json({&u, &v});
    const double exact = k.quasi_distance(ctx, u, v).to_double();
    const double approx = oracle::cosh_minus_one(oracle::to_fpoint(u), oracle::to_fpoint(v));
    cfg["exact"] = exact;
    cfg["oracle"] = approx;
    if (std::fabs(exact - approx) > 1e-9 * std::fabs(approx)) return fail(cfg, "quasi-distance disagrees");
    return Outcome::Pass;
  }));

  out.push_back(run_axiom("X2", trials, seed, 42, [&](PointSampler& s, Json& cfg) {
    const Line L = line_through(ctx, s.point(), s.point());
    auto t = sorted_parameters(s, 3);
    std::shuffle(t.begin(), t.end(), s.engine());
    const std::array<Point, 3> pts{param_point(L, t[0]), param_point(L, t[1]), param_point(L, t[2])};
    cfg["points"] = points_json({&pts[0], &pts[1], &pts[2]});
    const auto g = oracle::to_geodesic(L);
    const auto mid = oracle::middle(g, {oracle::to_fpoint(pts[0]), oracle::to_fpoint(pts[1]), oracle::to_fpoint(pts[2])});
    if (!mid) return Outcome::Skip;
    if (static_cast<int>(k.between(ctx, pts[0], pts[1], pts[2])) != *mid) return fail(cfg, "betweenness disagrees");
    return Outcome::Pass;
  }));

  out.push_back(run_axiom("X3", trials, seed, 43, [&](PointSampler& s, Json& cfg) {
    const Line L = line_through(ctx, s.point(), s.point());
    const Line M = line_through(ctx, s.point(), s.point());
    cfg["lines"] = Json::array({to_json(L), to_json(M)});
    if (L == M) return Outcome::Skip;
    const auto verdict = oracle::classify(oracle::to_geodesic(L), oracle::to_geodesic(M));
    if (!verdict) return Outcome::Skip;
    const IntersectKind exact = intersect(ctx, L, M);
    const bool agree = (exact.kind == IntersectKind::Intersecting && *verdict == oracle::Verdict::Intersecting) ||
                       (exact.kind == IntersectKind::LimitingParallel && *verdict == oracle::Verdict::Limiting) ||
                       (exact.kind == IntersectKind::UltraParallel && *verdict == oracle::Verdict::Ultra);
    if (!agree) return fail(cfg, "intersection kind disagrees");
    if (exact.point) {
      if (!on_line(L, *exact.point) || !on_line(M, *exact.point)) return fail(cfg, "point not on both lines");
    }
    return Outcome::Pass;
  }));
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"incidence", "order", "congruence", "parallel", "oracle"};
  return names;
}

/// Runs a named suite ("all" runs every suite) with its default trial
/// count unless `trials` is given.
inline std::vector<AxiomReport> run_suite(const std::string& name, std::uint64_t seed,
                                          std::optional<std::size_t> trials = std::nullopt, const Kernel& k = {}) {
  if (name == "all") {
    std::vector<AxiomReport> all;
    for (const auto& n : suite_names()) {
      auto part = run_suite(n, seed, trials, k);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (name == "incidence") return check_incidence(seed, trials.value_or(500), k);
  if (name == "order") return check_order(seed, trials.value_or(1000), k);
  if (name == "congruence") return check_congruence(seed, trials.value_or(500), k);
  if (name == "parallel") return check_parallel(seed, trials.value_or(100), k);
  if (name == "oracle") return oracle_crosscheck(seed, trials.value_or(1000), k);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

inline std::size_t total_failures(const std::vector<AxiomReport>& reports) {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.failures;
  return n;
}

}  // namespace hypc
