#pragma once

#include <array>
#include <string>
#include <vector>

#include "circq/manifolds.hpp"
#include "circq/types.hpp"

namespace circq {

/// Gamma^s_ij, zero-based indices.
struct ChristoffelArray {
  std::array<double, 64> data{};

  double& operator()(std::size_t s, std::size_t i, std::size_t j) { return data[(s * 4 + i) * 4 + j]; }
  double operator()(std::size_t s, std::size_t i, std::size_t j) const { return data[(s * 4 + i) * 4 + j]; }
  double max_abs() const;
};

/// nabla_i q^s_j, zero-based indices.
struct NablaQArray {
  std::array<double, 64> data{};

  double& operator()(std::size_t i, std::size_t s, std::size_t j) { return data[(i * 4 + s) * 4 + j]; }
  double operator()(std::size_t i, std::size_t s, std::size_t j) const { return data[(i * 4 + s) * 4 + j]; }
  double max_abs() const;
};

struct Residual {
  std::string label;
  double value = 0.0;
};

struct ResidualReport {
  std::vector<Residual> entries;

  double max_residual() const;
};

/// Gamma^s_ij = 1/2 g^{as}(d_i g_aj + d_j g_ai - d_a g_ij), with d_k g read
/// from the analytic field gradients. Throws DomainError on an excluded
/// locus and SingularMetricError when g is degenerate.
ChristoffelArray christoffel(const ManifoldSpec& m, const Point4& p);
ChristoffelArray christoffel(const FieldJet& jet);

/// Lowered first-kind symbols L[a][i][j] = d_i g_aj + d_j g_ai - d_a g_ij,
/// stored with a fastest: index (i * 4 + j) * 4 + a.
std::array<double, 64> christoffel_first_kind(const FieldJet& jet);

/// nabla_i q^s_j = Gamma^s_ik q^k_j - Gamma^k_ij q^s_k (q is constant).
NablaQArray nabla_q(const ManifoldSpec& m, const Point4& p);
NablaQArray nabla_q(const ChristoffelArray& gamma);

/// The eight relations of the reduced system:
/// A1-C3, A2-C4, A3-C1, A4-C2, B1-B3, B2-B4, 2B1-C4-C2, 2B2-C1-C3.
ResidualReport gradient_condition_residuals(const ManifoldSpec& m, const Point4& p);
ResidualReport gradient_condition_residuals(const FieldJet& jet);

/// The sixteen relations of the intermediate system, in listed order.
ResidualReport full_system_residuals(const ManifoldSpec& m, const Point4& p);
ResidualReport full_system_residuals(const FieldJet& jet);

inline constexpr double kDefaultParallelTolerance = 1e-8;

struct ParallelismVerdict {
  bool parallel = false;
  /// Both criteria on the same side of tol, or the disagreement is within
  /// the two-decade guard band around tol.
  bool criteria_agree = false;
  double nabla_q_max = 0.0;
  ResidualReport conditions;
};

/// Parallel iff max |nabla q| <= tol and every gradient-condition residual
/// <= tol. Throws std::invalid_argument for tol <= 0.
ParallelismVerdict parallelism_verdict(const ManifoldSpec& m, const Point4& p, double tol);

} // namespace circq
