// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "hypc/cli.hpp"

using namespace hypc;

namespace {

Scalar q(long n, long d = 1) { return Scalar::from_rational(n, d); }
Point pt(long x, long y) { return Point(q(x), q(y)); }
Cycle cyc(long a, long bx, long by, long c) { return {q(a), {q(bx), q(by)}, q(c)}; }
const PlaneContext& ctx() { return standard_context(); }

struct Criterion {
  int index;
  std::string title;
  std::function<std::string(bool&)> run;  // returns a detail line, clears ok on failure
};

// ---- 1: exact values ------------------------------------------------------

std::string exact_values(bool& ok) {
  int failed = 0;
  auto check = [&](bool c) { failed += !c; };
  check(pairing(pt(0, 1).q(), pt(0, 3).q()) == q(-8));
  check(quasi_distance(ctx(), pt(0, 1), pt(0, 2)) == q(1, 4));
  const Line unit = line_from_cycle(ctx(), cyc(1, 0, 0, -1));
  check(apply(reflection_in_line(unit), pt(0, 2)) == Point(q(0), q(1, 2)));
  const Motion swap = reflection_swapping_points(ctx(), pt(0, 1), pt(0, 4));
  check(swap.mirrors.size() == 1 && proportional(swap.mirrors[0], cyc(1, 0, 0, -4)));
  check(apply(swap, pt(0, 1)) == pt(0, 4));
  const Line axis = line_from_cycle(ctx(), cyc(0, 1, 0, 0));
  const auto m = parallel_at_param(ctx(), pt(1, 1), axis, ConicParam::at(q(0)));
  check(m.has_value() && m->cycle() == cyc(1, -3, 0, 1));
  check(m.has_value() && gram_det({m->cycle(), axis.cycle()}) == q(-4));
  ok = failed == 0;
  return std::to_string(7 - failed) + "/7 values exact";
}

// ---- 2: oracle identity ---------------------------------------------------

std::string oracle_identity(bool& ok) {
  PointSampler s(2001);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    auto [u, v] = s.pair();
    const double exact = quasi_distance(ctx(), u, v).to_double();
    const double model = oracle::cosh_minus_one(oracle::to_fpoint(u), oracle::to_fpoint(v));
    worst = std::max(worst, std::fabs(exact - model) / std::max(std::fabs(exact), 1e-300));
  }
  ok = worst <= 1e-9;
  char buf[96];
  std::snprintf(buf, sizeof buf, "1000 pairs, worst relative error %.3e", worst);
  return buf;
}

// ---- 3: axiom suites ------------------------------------------------------

std::string axiom_suites(bool& ok) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t failures = 0, trials = 0;
  std::string detail;
  for (std::uint64_t seed : {1u, 20261016u}) {
    for (const auto& r : run_suite("all", seed)) {
      failures += r.failures;
      trials += r.trials;
      if (r.failures) detail += " " + r.id + "@" + std::to_string(seed);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = failures == 0;
  char buf[128];
  std::snprintf(buf, sizeof buf, "2 seeds, %zu trials, %zu failures, %.1f s", trials, failures, secs);
  return buf + detail;
}

// ---- 4: algebra invariants ------------------------------------------------

Cycle random_cycle(PointSampler& s) { return {s.coordinate(), {s.coordinate(), s.coordinate()}, s.coordinate()}; }

Motion random_motion(PointSampler& s) {
  Motion m = identity_motion();
  const int n = s.integer(1, 4);
  for (int i = 0; i < n; ++i) {
    auto [u, v] = s.pair();
    m = compose(s.integer(0, 1) == 0 ? reflection_in_line(line_through(ctx(), u, v))
                                     : reflection_swapping_points(ctx(), u, v),
                m);
  }
  return m;
}

std::string algebra_invariants(bool& ok) {
  constexpr int kN = 200;
  PointSampler s(4004);
  int bad[5] = {};
  for (int i = 0; i < kN; ++i) {
    // Reflection involution, on points and on arbitrary cycles.
    auto [u, v] = s.pair();
    const Motion r = s.integer(0, 1) ? reflection_in_line(s.line(ctx())) : reflection_swapping_points(ctx(), u, v);
    const Cycle x = random_cycle(s);
    const Point w = s.point();
    bad[0] += !(apply_cycle(r, apply_cycle(r, x)) == x) || !(apply(r, apply(r, w)) == w);

    // Pairing preservation.
    const Motion m = random_motion(s);
    const Cycle y = random_cycle(s), z = random_cycle(s);
    bad[1] += !(pairing(apply_cycle(m, y), apply_cycle(m, z)) == pairing(y, z));

    // <f, g> = <f, p><g, p> + X X' + Y Y' - Z Z'.
    const Cycle f = random_cycle(s), g = random_cycle(s);
    const Scalar fp = pairing(f, ctx().p), gp = pairing(g, ctx().p);
    const DiagCoords df = to_diag(ctx(), f - fp * ctx().p), dg = to_diag(ctx(), g - gp * ctx().p);
    bad[2] += !(pairing(f, g) == fp * gp + df.X * dg.X + df.Y * dg.Y - df.Z * dg.Z);

    // Zero-circle identity.
    const Vec2 d = u.u() - v.u();
    bad[3] += !(pairing(u.q(), v.q()) == Scalar(-2) * dot(d, d));

    // Boundary pair of two intersecting lines.
    for (;;) {
      const Line L = s.line(ctx()), M = s.line(ctx());
      if (L == M || intersect(ctx(), L, M).kind != IntersectKind::Intersecting) continue;
      const BoundaryPair bp = boundary_pair(ctx(), L, M);
      const Cycle expect = bp.inside - Scalar(2) * pairing(ctx().p, bp.inside) * ctx().p;
      bad[4] += !(bp.outside == expect) || !norm(bp.inside).is_zero() || !norm(bp.outside).is_zero();
      break;
    }
  }
  ok = bad[0] + bad[1] + bad[2] + bad[3] + bad[4] == 0;
  std::ostringstream out;
  out << kN << " instances each; mismatches involution=" << bad[0] << " pairing=" << bad[1] << " diagonal=" << bad[2]
      << " zero-circle=" << bad[3] << " boundary-pair=" << bad[4];
  return out.str();
}

// ---- 5: intersection trichotomy ------------------------------------------

std::string trichotomy(bool& ok) {
  PointSampler s(5005);
  int agree = 0, disagree = 0, skipped = 0;
  for (int i = 0; i < 300; ++i) {
    const Line L = s.line(ctx());
    Line M = s.line(ctx());
    while (M == L) M = s.line(ctx());
    const auto verdict = oracle::classify(oracle::to_geodesic(L), oracle::to_geodesic(M));
    if (!verdict) {
      ++skipped;
      continue;
    }
    const auto kind = intersect(ctx(), L, M).kind;
    const bool same = (kind == IntersectKind::Intersecting && *verdict == oracle::Verdict::Intersecting) ||
                      (kind == IntersectKind::LimitingParallel && *verdict == oracle::Verdict::Limiting) ||
                      (kind == IntersectKind::UltraParallel && *verdict == oracle::Verdict::Ultra);
    (same ? agree : disagree)++;
  }
  ok = disagree == 0 && skipped <= 15;
  return "300 pairs: " + std::to_string(agree) + " agree, " + std::to_string(disagree) + " disagree, " +
         std::to_string(skipped) + " skipped";
}

// ---- 6: scalar kernel -----------------------------------------------------

Scalar random_expression(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 6);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
  switch (pick(rng)) {
    case 0:
      return q(num(rng), den(rng));
    case 1:
      return random_expression(rng, depth - 1) + random_expression(rng, depth - 1);
    case 2:
      return random_expression(rng, depth - 1) - random_expression(rng, depth - 1);
    case 3:
      return random_expression(rng, depth - 1) * random_expression(rng, depth - 1);
    case 4: {
      const Scalar a = random_expression(rng, depth - 1), b = random_expression(rng, depth - 1);
      return b.sign() == 0 ? a : a / b;
    }
    case 5:
      return -random_expression(rng, depth - 1);
    default:
      return sqrt(abs(random_expression(rng, depth - 1)));
  }
}

std::string scalar_kernel(bool& ok) {
  int bad = 0;
  const Scalar nested = sqrt(q(2)) + sqrt(q(3)) - sqrt(q(5) + q(2) * sqrt(q(6)));
  bad += nested.sign() != 0;

  // Identities built to vanish, then perturbed by a known small rational.
  std::mt19937_64 rng(6006);
  std::uniform_int_distribution<long> small(1, 60), pick(0, 3), expo(3, 15);
  int decided = 0;
  for (int i = 0; i < 100; ++i) {
    const Scalar a = q(small(rng), small(rng)), b = q(small(rng), small(rng)), c = q(small(rng), small(rng));
    Scalar zero;
    switch (pick(rng)) {
      case 0:
        zero = sqrt(a) + sqrt(b) - sqrt(a + b + q(2) * sqrt(a * b));
        break;
      case 1:
        zero = (sqrt(a) + sqrt(b)) * (sqrt(a) - sqrt(b)) - (a - b);
        break;
      case 2:
        zero = sqrt(a * c * c) - c * sqrt(a) + sqrt(b) * sqrt(c) - sqrt(b * c);
        break;
      default:
        zero = (sqrt(a) + sqrt(c)) * (sqrt(b) + sqrt(c)) - sqrt(a * b) - sqrt(a * c) - sqrt(b * c) - c;
        break;
    }
    if (i % 2 == 0) {
      bad += zero.sign() != 0;
    } else {
      long p = 1;
      for (long e = expo(rng); e > 0; --e) p *= 10;
      const int want = (i % 4 == 1) ? 1 : -1;
      bad += (zero + q(want, p)).sign() != want;
    }
    ++decided;
  }

  int round_trips = 0;
  for (int i = 0; i < 200; ++i) {
    const Scalar x = random_expression(rng, 3);
    const std::string text = x.format();
    const Scalar y = Scalar::parse(text);
    round_trips += y == x && y.format() == text;
  }
  bad += 200 - round_trips;
  ok = bad == 0;
  return "nested radical " + std::string(nested.sign() == 0 ? "zero" : "NONZERO") + ", " + std::to_string(decided) +
         " identities, " + std::to_string(round_trips) + "/200 round-trips";
}

// ---- 7: CLI goldens -------------------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string cli_goldens(bool& ok) {
  const std::string dir = HYPC_GOLDEN_DIR;
  int matched = 0;
  std::string detail;
  for (const auto& [cmd, expected] : {std::pair<std::string, std::string>{"between", "between.expected"},
                                      {"intersect", "intersect.expected"},
                                      {"render", "render.expected.svg"}}) {
    const auto r = cli::run_command(cmd, slurp(dir + "/" + cmd + ".json"));
    if (r.exit_code == 0 && r.output == slurp(dir + "/" + expected))
      ++matched;
    else
      detail += " " + cmd;
  }
  ok = matched == 3;
  return std::to_string(matched) + "/3 byte-identical" + detail;
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "exact worked values", exact_values},
      {2, "oracle identity precheck", oracle_identity},
      {3, "axiom suites at default sizes", axiom_suites},
      {4, "exact algebra invariants", algebra_invariants},
      {5, "intersection trichotomy vs float oracle", trichotomy},
      {6, "scalar kernel", scalar_kernel},
      {7, "CLI golden files", cli_goldens},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    bool ok = true;
    std::string detail;
    try {
      detail = c.run(ok);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    failed += !ok;
    std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", c.index, c.title.c_str(), detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
