#pragma once

#include <array>
#include <cstddef>

#include "circq/types.hpp"

namespace circq {

/// Values (a, b, c) of the fields A, B, C at a point. Generates the symmetric
/// circulant matrix with first row (a, b, c, b).
struct CirculantTriple {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  friend constexpr bool operator==(const CirculantTriple&, const CirculantTriple&) = default;
};

/// Generator slot of entry (i, j): 0 -> a, 1 -> b, 2 -> c. Depends only on
/// (j - i) mod 4, with offsets 1 and 3 both mapping to b.
constexpr int circulant_slot(std::size_t i, std::size_t j) {
  constexpr int kSlot[4] = {0, 1, 2, 1};
  return kSlot[(j + 4 - i) & 3];
}

constexpr double slot_value(const CirculantTriple& t, int slot) {
  return slot == 0 ? t.a : (slot == 1 ? t.b : t.c);
}

MetricMatrix metric_components(const CirculantTriple& t);

/// (a - c)^2 ((a + c)^2 - 4 b^2)
double metric_determinant(const CirculantTriple& t);

/// D = (a - c)((a + c)^2 - 4 b^2), the denominator of the closed-form inverse.
double inverse_denominator(const CirculantTriple& t);

/// True when |D| <= 1e-12 (1 + |a| + |b| + |c|)^3.
bool is_degenerate(const CirculantTriple& t);

/// Generator of g^{-1}: (A', B', C') / D with A' = a(a + c) - 2b^2,
/// B' = b(c - a), C' = 2b^2 - c(a + c). Throws SingularMetricError.
CirculantTriple inverse_triple(const CirculantTriple& t);
MetricMatrix inverse_metric(const CirculantTriple& t);

/// Generator of C(x) * C(y). Symmetric circulants commute and are closed
/// under multiplication.
CirculantTriple compose(const CirculantTriple& x, const CirculantTriple& y);

/// a > c > b > 0, the sufficient condition for positive definiteness.
bool is_positive_definite_ordered(const CirculantTriple& t);

/// Determinants of the leading 1x1..4x4 blocks of metric_components(t).
std::array<double, 4> leading_principal_minors(const CirculantTriple& t);
bool leading_minors_positive(const CirculantTriple& t);

/// Determinant of the leading order x order block (order in 1..4), by
/// Gaussian elimination with partial pivoting.
double leading_minor(const Matrix4& m, std::size_t order);

/// The affinor q as a matrix Q(i, j) = q_i^j: ones at (1,2), (2,3), (3,4), (4,1).
Matrix4 affinor_matrix();
/// Q^k, k taken mod 4.
Matrix4 affinor_matrix_power(int k);

/// q^k v with (q v)^j = q_i^j v^i, i.e. q v = (v4, v1, v2, v3). k taken mod 4.
Vector4 apply_affinor(int k, const Vector4& v);

/// u^T g v
double inner(const CirculantTriple& t, const Vector4& u, const Vector4& v);

/// Index lowering: (g v)_i = g_ij v^j.
Covector4 lower(const CirculantTriple& t, const Vector4& v);

} // namespace circq
