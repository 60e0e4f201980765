#pragma once

// Small dense determinants and null vectors, generic over the field type.

#include <array>
#include <cstddef>

namespace hypc::linalg {

template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;
template <class T>
using Mat4 = std::array<std::array<T, 4>, 4>;
template <class T>
using Row4 = std::array<T, 4>;

template <class T>
T det2(const T& a, const T& b, const T& c, const T& d) {
  return a * d - b * c;
}

template <class T>
T det3(const Mat3<T>& m) {
  return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
         m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
         m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

/// 3x3 minor of a 3x4 matrix obtained by deleting column `skip`.
template <class T>
T minor3(const std::array<Row4<T>, 3>& rows, std::size_t skip) {
  Mat3<T> m;
  for (std::size_t r = 0; r < 3; ++r) {
    std::size_t k = 0;
    for (std::size_t c = 0; c < 4; ++c) {
      if (c == skip) continue;
      m[r][k++] = rows[r][c];
    }
  }
  return det3(m);
}

/// Generalized cross product: a vector orthogonal (in the plain dot-product
/// sense) to the three rows. It is nonzero exactly when the rows are
/// linearly independent.
template <class T>
Row4<T> null_vector(const std::array<Row4<T>, 3>& rows) {
  Row4<T> out;
  for (std::size_t j = 0; j < 4; ++j) {
    T m = minor3(rows, j);
    out[j] = (j % 2 == 0) ? m : -m;
  }
  return out;
}

template <class T>
T det4(const Mat4<T>& m) {
  // Expansion along the first row, reusing null_vector's cofactors.
  std::array<Row4<T>, 3> rest{m[1], m[2], m[3]};
  const Row4<T> cof = null_vector(rest);
  return m[0][0] * cof[0] + m[0][1] * cof[1] + m[0][2] * cof[2] + m[0][3] * cof[3];
}

template <class T>
Mat4<T> multiply(const Mat4<T>& a, const Mat4<T>& b) {
  Mat4<T> out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      T s = a[i][0] * b[0][j];
      for (std::size_t k = 1; k < 4; ++k) s = s + a[i][k] * b[k][j];
      out[i][j] = s;
    }
  return out;
}

template <class T>
Row4<T> multiply(const Mat4<T>& a, const Row4<T>& v) {
  Row4<T> out;
  for (std::size_t i = 0; i < 4; ++i) {
    T s = a[i][0] * v[0];
    for (std::size_t k = 1; k < 4; ++k) s = s + a[i][k] * v[k];
    out[i] = s;
  }
  return out;
}

template <class T>
Mat4<T> transpose(const Mat4<T>& a) {
  Mat4<T> out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i][j] = a[j][i];
  return out;
}

}  // namespace hypc::linalg
