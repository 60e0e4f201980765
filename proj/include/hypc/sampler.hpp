#pragma once

// Seeded random configurations for the axiom suites: rational points with
// numerators in [-100, 100] and denominators in [1, 20].

#include <cstdint>
#include <random>

#include "hypc/plane.hpp"

namespace hypc {

class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

  Scalar coordinate() {
    std::uniform_int_distribution<long> num(-100, 100);
    std::uniform_int_distribution<long> den(1, 20);
    const long n = num(rng_);
    return Scalar::from_rational(n, den(rng_));
  }

  Scalar positive_coordinate() {
    std::uniform_int_distribution<long> num(1, 100);
    std::uniform_int_distribution<long> den(1, 20);
    const long n = num(rng_);
    return Scalar::from_rational(n, den(rng_));
  }

  Point point() { return Point(coordinate(), positive_coordinate()); }

  /// Two distinct points.
  std::pair<Point, Point> pair() {
    Point u = point();
    for (;;) {
      Point v = point();
      if (!(v == u)) return {std::move(u), std::move(v)};
    }
  }

  Line line(const PlaneContext& ctx) {
    auto [u, v] = pair();
    return line_through(ctx, u, v);
  }

  /// Positive rational line parameter.
  Scalar parameter() { return positive_coordinate(); }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hypc
