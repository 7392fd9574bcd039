#include "circq/circulant.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "circq/errors.hpp"
#include "circq/kernels.hpp"

namespace circq {

MetricMatrix metric_components(const CirculantTriple& t) {
  MetricMatrix g;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = slot_value(t, circulant_slot(i, j));
  return g;
}

double inverse_denominator(const CirculantTriple& t) {
  const double s = t.a + t.c;
  return (t.a - t.c) * ((s - 2.0 * t.b) * (s + 2.0 * t.b));
}

double metric_determinant(const CirculantTriple& t) {
  const double d = t.a - t.c;
  const double s = t.a + t.c;
  return d * d * ((s - 2.0 * t.b) * (s + 2.0 * t.b));
}

bool is_degenerate(const CirculantTriple& t) {
  const double scale = 1.0 + std::fabs(t.a) + std::fabs(t.b) + std::fabs(t.c);
  return !(std::fabs(inverse_denominator(t)) > 1e-12 * scale * scale * scale);
}

CirculantTriple inverse_triple(const CirculantTriple& t) {
  if (is_degenerate(t)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "singular metric: D = " << inverse_denominator(t) << " at (A, B, C) = (" << t.a << ", " << t.b
        << ", " << t.c << ")";
    throw SingularMetricError(msg.str());
  }
  const double d = inverse_denominator(t);
  const double s = t.a + t.c;
  const double bb = t.b * t.b;
  return {(t.a * s - 2.0 * bb) / d, t.b * (t.c - t.a) / d, (2.0 * bb - t.c * s) / d};
}

MetricMatrix inverse_metric(const CirculantTriple& t) { return metric_components(inverse_triple(t)); }

CirculantTriple compose(const CirculantTriple& x, const CirculantTriple& y) {
  return {
      x.a * y.a + 2.0 * x.b * y.b + x.c * y.c,
      x.a * y.b + x.b * y.a + x.b * y.c + x.c * y.b,
      x.a * y.c + x.c * y.a + 2.0 * x.b * y.b,
  };
}

bool is_positive_definite_ordered(const CirculantTriple& t) { return t.a > t.c && t.c > t.b && t.b > 0.0; }

double leading_minor(const Matrix4& m, std::size_t order) {
  double work[4][4];
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) work[i][j] = m(i, j);
  double det = 1.0;
  for (std::size_t col = 0; col < order; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < order; ++r)
      if (std::fabs(work[r][col]) > std::fabs(work[pivot][col])) pivot = r;
    if (work[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < order; ++j) std::swap(work[pivot][j], work[col][j]);
      det = -det;
    }
    det *= work[col][col];
    for (std::size_t r = col + 1; r < order; ++r) {
      const double f = work[r][col] / work[col][col];
      for (std::size_t j = col; j < order; ++j) work[r][j] -= f * work[col][j];
    }
  }
  return det;
}

std::array<double, 4> leading_principal_minors(const CirculantTriple& t) {
  const MetricMatrix g = metric_components(t);
  return {leading_minor(g, 1), leading_minor(g, 2), leading_minor(g, 3), leading_minor(g, 4)};
}

bool leading_minors_positive(const CirculantTriple& t) {
  for (double minor : leading_principal_minors(t))
    if (!(minor > 0.0)) return false;
  return true;
}

Matrix4 affinor_matrix() {
  Matrix4 q;
  q(0, 1) = 1.0;
  q(1, 2) = 1.0;
  q(2, 3) = 1.0;
  q(3, 0) = 1.0;
  return q;
}

Matrix4 affinor_matrix_power(int k) {
  Matrix4 r = Matrix4::identity();
  const Matrix4 q = affinor_matrix();
  for (int n = 0; n < (k % 4 + 4) % 4; ++n) r = r * q;
  return r;
}

Vector4 apply_affinor(int k, const Vector4& v) {
  Vector4 out;
  kernels::active().affinor_power(((k % 4) + 4) % 4, v.data(), out.data(), 1);
  return out;
}

Covector4 lower(const CirculantTriple& t, const Vector4& v) {
  Covector4 out;
  kernels::active().circulant_matvec(t, v.data(), out.data(), 1);
  return out;
}

double inner(const CirculantTriple& t, const Vector4& u, const Vector4& v) {
  double out = 0.0;
  kernels::active().circulant_inner(&t, u.data(), v.data(), &out, 1);
  return out;
}

} // namespace circq
