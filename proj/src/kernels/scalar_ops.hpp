#pragma once

// Scalar primitives shared by the reference table and the SIMD tails. The
// SIMD variants reproduce exactly this operation order.

#include <array>
#include <cstddef>
#include <span>

#include "circq/circulant.hpp"
#include "circq/monomial.hpp"

namespace circq::kernels::detail {

inline void matvec4(const CirculantTriple& t, const double* in, double* out) {
  const double v0 = in[0], v1 = in[1], v2 = in[2], v3 = in[3];
  const double v[4] = {v0, v1, v2, v3};
  for (std::size_t i = 0; i < 4; ++i) {
    double r = t.a * v[i];
    r = r + t.b * (v[(i + 1) & 3] + v[(i + 3) & 3]);
    r = r + t.c * v[(i + 2) & 3];
    out[i] = r;
  }
}

inline void affinor4(int power, const double* in, double* out) {
  const unsigned k = static_cast<unsigned>(power) & 3u;
  const double v[4] = {in[0], in[1], in[2], in[3]};
  for (unsigned i = 0; i < 4; ++i) out[i] = v[(i - k) & 3u];
}

inline double inner4(const CirculantTriple& t, const double* u, const double* v) {
  double gv[4];
  matvec4(t, v, gv);
  const double w0 = u[0] * gv[0], w1 = u[1] * gv[1], w2 = u[2] * gv[2], w3 = u[3] * gv[3];
  return (w0 + w1) + (w2 + w3);
}

inline double poly1(std::span<const Monomial> terms, double x0, double x1, double x2, double x3) {
  const double x[4] = {x0, x1, x2, x3};
  double acc = 0.0;
  for (const Monomial& term : terms) {
    double m = term.coeff;
    for (std::size_t axis = 0; axis < 4; ++axis)
      for (unsigned e = 0; e < term.exps[axis]; ++e) m = m * x[axis];
    acc = acc + m;
  }
  return acc;
}

} // namespace circq::kernels::detail
