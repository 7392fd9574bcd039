#include "circq/connection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "circq/circulant.hpp"
#include "circq/errors.hpp"
#include "circq/kernels.hpp"

namespace circq {

double ChristoffelArray::max_abs() const {
  double m = 0.0;
  for (double x : data) m = std::fmax(m, std::fabs(x));
  return m;
}

double NablaQArray::max_abs() const {
  double m = 0.0;
  for (double x : data) m = std::fmax(m, std::fabs(x));
  return m;
}

double ResidualReport::max_residual() const {
  double m = 0.0;
  for (const Residual& r : entries) m = std::fmax(m, r.value);
  return m;
}

namespace {

void require_off_excluded(const ManifoldSpec& m, const Point4& p) {
  if (auto locus = excluded_locus(m, p)) throw DomainError("point lies on excluded locus " + *locus);
}

} // namespace

std::array<double, 64> christoffel_first_kind(const FieldJet& jet) {
  // d_k g_xy is the k-th partial of the field generating slot (x, y).
  auto dg = [&](std::size_t k, std::size_t x, std::size_t y) { return jet.grad[circulant_slot(x, y)][k]; };
  std::array<double, 64> first{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t a = 0; a < 4; ++a) first[(i * 4 + j) * 4 + a] = dg(i, a, j) + dg(j, a, i) - dg(a, i, j);
  return first;
}

ChristoffelArray christoffel(const FieldJet& jet) {
  const CirculantTriple inv = inverse_triple(jet.value);
  std::array<double, 64> raised = christoffel_first_kind(jet);
  kernels::active().circulant_matvec(inv, raised.data(), raised.data(), 16);
  ChristoffelArray gamma;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t s = 0; s < 4; ++s) gamma(s, i, j) = 0.5 * raised[(i * 4 + j) * 4 + s];
  return gamma;
}

ChristoffelArray christoffel(const ManifoldSpec& m, const Point4& p) {
  require_off_excluded(m, p);
  return christoffel(jet_at(m, p, false));
}

NablaQArray nabla_q(const ChristoffelArray& gamma) {
  // q^s_j = Q(j, s), Q the affinor matrix.
  const Matrix4 q = affinor_matrix();
  NablaQArray out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t s = 0; s < 4; ++s)
      for (std::size_t j = 0; j < 4; ++j) {
        double lhs = 0.0;
        double rhs = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
          lhs += gamma(s, i, k) * q(j, k);
          rhs += gamma(k, i, j) * q(k, s);
        }
        out(i, s, j) = lhs - rhs;
      }
  return out;
}

NablaQArray nabla_q(const ManifoldSpec& m, const Point4& p) { return nabla_q(christoffel(m, p)); }

ResidualReport gradient_condition_residuals(const FieldJet& jet) {
  const Covector4& A = jet.grad[0];
  const Covector4& B = jet.grad[1];
  const Covector4& C = jet.grad[2];
  ResidualReport r;
  r.entries = {
      {"A1 = C3", std::fabs(A[0] - C[2])},
      {"A2 = C4", std::fabs(A[1] - C[3])},
      {"A3 = C1", std::fabs(A[2] - C[0])},
      {"A4 = C2", std::fabs(A[3] - C[1])},
      {"B1 = B3", std::fabs(B[0] - B[2])},
      {"B2 = B4", std::fabs(B[1] - B[3])},
      {"2B1 = C4 + C2", std::fabs(2.0 * B[0] - C[3] - C[1])},
      {"2B2 = C1 + C3", std::fabs(2.0 * B[1] - C[0] - C[2])},
  };
  return r;
}

ResidualReport gradient_condition_residuals(const ManifoldSpec& m, const Point4& p) {
  return gradient_condition_residuals(jet_at(m, p, false));
}

ResidualReport full_system_residuals(const FieldJet& jet) {
  // One-based accessors matching the printed system.
  auto A = [&](int k) { return jet.grad[0][static_cast<std::size_t>(k - 1)]; };
  auto B = [&](int k) { return jet.grad[1][static_cast<std::size_t>(k - 1)]; };
  auto C = [&](int k) { return jet.grad[2][static_cast<std::size_t>(k - 1)]; };
  ResidualReport r;
  r.entries = {
      {"A4 - B1 + B3 - C2 = 0", std::fabs(A(4) - B(1) + B(3) - C(2))},
      {"A4 + B1 - B3 - C2 = 0", std::fabs(A(4) + B(1) - B(3) - C(2))},
      {"2A2 + A4 - 3B1 - B3 + C2 = 0", std::fabs(2 * A(2) + A(4) - 3 * B(1) - B(3) + C(2))},
      {"A3 + B2 - B4 - C1 = 0", std::fabs(A(3) + B(2) - B(4) - C(1))},
      {"A3 - B2 + B4 - C1 = 0", std::fabs(A(3) - B(2) + B(4) - C(1))},
      {"A2 - B1 + B3 - C4 = 0", std::fabs(A(2) - B(1) + B(3) - C(4))},
      {"A2 + B1 - B3 - C4 = 0", std::fabs(A(2) + B(1) - B(3) - C(4))},
      // -3B3 mirrors the last relation; the +3B3 variant does not follow
      // from nabla q = 0.
      {"A4 - B1 - 3B3 + C2 + 2C4 = 0", std::fabs(A(4) - B(1) - 3 * B(3) + C(2) + 2 * C(4))},
      {"A2 + 2A4 - 3B1 - B3 + C4 = 0", std::fabs(A(2) + 2 * A(4) - 3 * B(1) - B(3) + C(4))},
      {"A2 + 2A4 - B1 - 3B3 + C4 = 0", std::fabs(A(2) + 2 * A(4) - B(1) - 3 * B(3) + C(4))},
      {"A1 + 2A3 - 3B2 - B4 + C3 = 0", std::fabs(A(1) + 2 * A(3) - 3 * B(2) - B(4) + C(3))},
      {"A1 - B2 + B4 - C3 = 0", std::fabs(A(1) - B(2) + B(4) - C(3))},
      {"A3 - B2 - 3B4 + C1 + 2C3 = 0", std::fabs(A(3) - B(2) - 3 * B(4) + C(1) + 2 * C(3))},
      {"A1 - B2 - 3B4 + 2C1 + C3 = 0", std::fabs(A(1) - B(2) - 3 * B(4) + 2 * C(1) + C(3))},
      {"2A1 + A3 - B2 - 3B4 + C1 = 0", std::fabs(2 * A(1) + A(3) - B(2) - 3 * B(4) + C(1))},
      {"A2 - B1 - 3B3 + 2C2 + C4 = 0", std::fabs(A(2) - B(1) - 3 * B(3) + 2 * C(2) + C(4))},
  };
  return r;
}

ResidualReport full_system_residuals(const ManifoldSpec& m, const Point4& p) {
  return full_system_residuals(jet_at(m, p, false));
}

ParallelismVerdict parallelism_verdict(const ManifoldSpec& m, const Point4& p, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  require_off_excluded(m, p);
  const FieldJet jet = jet_at(m, p, false);
  ParallelismVerdict v;
  v.nabla_q_max = nabla_q(christoffel(jet)).max_abs();
  v.conditions = gradient_condition_residuals(jet);
  const double cond = v.conditions.max_residual();
  v.parallel = v.nabla_q_max <= tol && cond <= tol;
  const double lo = std::fmin(v.nabla_q_max, cond);
  const double hi = std::fmax(v.nabla_q_max, cond);
  v.criteria_agree = !(lo <= tol && hi > 100.0 * tol);
  return v;
}

} // namespace circq
