#pragma once

// The cycle space: functions aX.X + b.X + c on the plane, with the pairing
// <f, g> = b_f.b_g - 2 a_f c_g - 2 a_g c_f.
//
// Coordinates are ordered (a, b_x, b_y, c); the Gram matrix of the pairing
// in that basis is
//
//     [ 0  0  0 -2 ]
//     [ 0  1  0  0 ]
//     [ 0  0  1  0 ]
//     [-2  0  0  0 ]

#include <array>
#include <span>
#include <string>

#include "hypc/linalg.hpp"
#include "hypc/scalar.hpp"

namespace hypc {

struct Vec2 {
  Scalar x;
  Scalar y;

  friend Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
  friend Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }
  friend Vec2 operator-(const Vec2& u) { return {-u.x, -u.y}; }
  friend Vec2 operator*(const Scalar& k, const Vec2& u) { return {k * u.x, k * u.y}; }
  friend bool operator==(const Vec2& u, const Vec2& v) { return u.x == v.x && u.y == v.y; }
};

inline Scalar dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

using CycleCoords = linalg::Row4<Scalar>;

struct Cycle {
  Scalar a;
  Vec2 b;
  Scalar c;

  CycleCoords coords() const { return {a, b.x, b.y, c}; }
  static Cycle from_coords(const CycleCoords& v) { return {v[0], {v[1], v[2]}, v[3]}; }

  /// Every coordinate is exactly zero.
  bool is_zero() const { return a.is_zero() && b.x.is_zero() && b.y.is_zero() && c.is_zero(); }

  friend Cycle operator+(const Cycle& f, const Cycle& g) { return {f.a + g.a, f.b + g.b, f.c + g.c}; }
  friend Cycle operator-(const Cycle& f, const Cycle& g) { return {f.a - g.a, f.b - g.b, f.c - g.c}; }
  friend Cycle operator-(const Cycle& f) { return {-f.a, -f.b, -f.c}; }
  friend Cycle operator*(const Scalar& k, const Cycle& f) { return {k * f.a, k * f.b, k * f.c}; }
  friend Cycle operator/(const Cycle& f, const Scalar& k) { return {f.a / k, {f.b.x / k, f.b.y / k}, f.c / k}; }

  /// Componentwise exact equality.
  friend bool operator==(const Cycle& f, const Cycle& g) {
    return f.a == g.a && f.b == g.b && f.c == g.c;
  }
};

inline Scalar pairing(const Cycle& f, const Cycle& g) {
  return dot(f.b, g.b) - Scalar(2) * f.a * g.c - Scalar(2) * g.a * f.c;
}

inline Scalar norm(const Cycle& f) { return pairing(f, f); }

/// The linear form x -> <x, f> written as a coordinate row (G f).
inline CycleCoords functional(const Cycle& f) {
  return {Scalar(-2) * f.c, f.b.x, f.b.y, Scalar(-2) * f.a};
}

/// The cycle p(X) = X.X - 2u.X + u.u whose only zero is u.
inline Cycle zero_circle(const Vec2& u) { return {Scalar(1), Scalar(-2) * u, dot(u, u)}; }

enum class Degree { ZeroCycle, OneCycle, TwoCycle };

struct CycleClass {
  Degree degree;
  bool isotropic;
  friend bool operator==(const CycleClass&, const CycleClass&) = default;
};

inline CycleClass classify(const Cycle& f) {
  if (f.is_zero()) throw DomainError("classify: the zero cycle has no class");
  Degree d = Degree::ZeroCycle;
  if (!f.a.is_zero())
    d = Degree::TwoCycle;
  else if (!f.b.x.is_zero() || !f.b.y.is_zero())
    d = Degree::OneCycle;
  return {d, norm(f).is_zero()};
}

/// Center -b/2a of an isotropic 2-cycle.
inline Vec2 center_of_isotropic(const Cycle& f) {
  const CycleClass k = classify(f);
  if (k.degree != Degree::TwoCycle || !k.isotropic)
    throw DomainError("center_of_isotropic: not an isotropic 2-cycle");
  const Scalar two_a = Scalar(2) * f.a;
  return {-f.b.x / two_a, -f.b.y / two_a};
}

/// Determinant of the pairing Gram matrix of two or three cycles.
inline Scalar gram_det(std::span<const Cycle> fs) {
  if (fs.size() == 2) {
    return linalg::det2(norm(fs[0]), pairing(fs[0], fs[1]), pairing(fs[1], fs[0]), norm(fs[1]));
  }
  if (fs.size() == 3) {
    linalg::Mat3<Scalar> m;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m[i][j] = (j < i) ? m[j][i] : pairing(fs[i], fs[j]);
    return linalg::det3(m);
  }
  throw DomainError("gram_det: expected 2 or 3 cycles");
}

inline Scalar gram_det(std::initializer_list<Cycle> fs) {
  return gram_det(std::span<const Cycle>(fs.begin(), fs.size()));
}

/// A cycle orthogonal to three given cycles; zero iff they are dependent.
inline Cycle orthogonal_complement(const Cycle& f, const Cycle& g, const Cycle& h) {
  return Cycle::from_coords(linalg::null_vector<Scalar>({functional(f), functional(g), functional(h)}));
}

/// True when f = k g for some scalar k (either may be zero).
inline bool proportional(const Cycle& f, const Cycle& g) {
  const CycleCoords x = f.coords(), y = g.coords();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!linalg::det2(x[i], x[j], y[i], y[j]).is_zero()) return false;
  return true;
}

}  // namespace hypc
