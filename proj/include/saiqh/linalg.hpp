#ifndef SAIQH_LINALG_HPP
#define SAIQH_LINALG_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

#include "saiqh/errors.hpp"

namespace saiqh::linalg {

template <std::size_t N>
using Vector = std::array<double, N>;

template <std::size_t N>
using Matrix = std::array<std::array<double, N>, N>;

template <std::size_t N>
Vector<N> multiply(const Matrix<N>& a, const Vector<N>& x) {
  Vector<N> y{};
  for (std::size_t i = 0; i < N; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < N; ++j) acc += a[i][j] * x[j];
    y[i] = acc;
  }
  return y;
}

template <std::size_t N>
double max_abs(const Vector<N>& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

/// Dense Gaussian elimination with partial pivoting. Throws numerical_error on a zero pivot.
template <std::size_t N>
Vector<N> solve(Matrix<N> a, Vector<N> b) {
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < N; ++row) {
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    }
    if (a[pivot][col] == 0.0) throw numerical_error("singular matrix in linear solve");
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t row = col + 1; row < N; ++row) {
      const double factor = a[row][col] / a[col][col];
      if (factor == 0.0) continue;
      a[row][col] = 0.0;
      for (std::size_t j = col + 1; j < N; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  Vector<N> x{};
  for (std::size_t k = N; k-- > 0;) {
    double acc = b[k];
    for (std::size_t j = k + 1; j < N; ++j) acc -= a[k][j] * x[j];
    x[k] = acc / a[k][k];
  }
  return x;
}

/// ||a x - b||_inf / max(||b||_inf, ||a||_inf ||x||_inf), the normwise backward error.
template <std::size_t N>
double relative_residual(const Matrix<N>& a, const Vector<N>& x, const Vector<N>& b) {
  const Vector<N> ax = multiply(a, x);
  double norm_a = 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < N; ++j) row += std::abs(a[i][j]);
    norm_a = std::max(norm_a, row);
    worst = std::max(worst, std::abs(ax[i] - b[i]));
  }
  const double scale = std::max(max_abs(b), norm_a * max_abs(x));
  return scale > 0.0 ? worst / scale : worst;
}

}  // namespace saiqh::linalg

#endif  // SAIQH_LINALG_HPP
