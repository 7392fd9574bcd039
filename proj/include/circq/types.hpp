#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace circq {

inline constexpr std::size_t kDim = 4;

/// Four real components with a tag that keeps points, vectors and covectors
/// from being mixed up at call sites.
template <class Tag>
struct Quad {
  std::array<double, kDim> c{};

  constexpr double& operator[](std::size_t i) { return c[i]; }
  constexpr double operator[](std::size_t i) const { return c[i]; }
  double* data() { return c.data(); }
  const double* data() const { return c.data(); }

  bool finite() const {
    for (double x : c)
      if (!std::isfinite(x)) return false;
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : c) m = std::fmax(m, std::fabs(x));
    return m;
  }

  friend constexpr bool operator==(const Quad&, const Quad&) = default;
};

struct PointTag {};
struct VectorTag {};
struct CovectorTag {};

/// Coordinates (x1, x2, x3, x4) of a point of the chart.
using Point4 = Quad<PointTag>;
/// Contravariant components (u^1, ..., u^4).
using Vector4 = Quad<VectorTag>;
/// Partials (f_1, ..., f_4) of a scalar field.
using Covector4 = Quad<CovectorTag>;

/// Dense row-major 4x4 matrix.
struct Matrix4 {
  std::array<double, kDim * kDim> m{};

  constexpr double& operator()(std::size_t row, std::size_t col) { return m[row * kDim + col]; }
  constexpr double operator()(std::size_t row, std::size_t col) const { return m[row * kDim + col]; }

  static constexpr Matrix4 identity() {
    Matrix4 r;
    for (std::size_t i = 0; i < kDim; ++i) r(i, i) = 1.0;
    return r;
  }

  Matrix4 transposed() const {
    Matrix4 r;
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  friend Matrix4 operator*(const Matrix4& x, const Matrix4& y) {
    Matrix4 r;
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < kDim; ++k) s += x(i, k) * y(k, j);
        r(i, j) = s;
      }
    return r;
  }

  double max_abs_diff(const Matrix4& o) const {
    double d = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) d = std::fmax(d, std::fabs(m[i] - o.m[i]));
    return d;
  }

  friend constexpr bool operator==(const Matrix4&, const Matrix4&) = default;
};

using MetricMatrix = Matrix4;
using Hessian4 = Matrix4;

} // namespace circq
