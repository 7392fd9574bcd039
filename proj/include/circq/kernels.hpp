#pragma once

// Data-parallel inner loops of the engine, with a scalar reference table and
// (on x86-64) an AVX2 table selected at runtime. A 4-vector occupies exactly
// one 256-bit register, the affinor q is a lane rotation and a circulant
// matrix-vector product is a sum of three rotations.
//
// Every variant performs the same IEEE operations in the same order and no
// FMA contraction, so all tables produce bit-identical results.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

#include "circq/monomial.hpp"

namespace circq {
struct CirculantTriple;
}

namespace circq::kernels {

struct Table {
  std::string_view name;

  /// out[n] = C(a,b,c) * in[n] for `count` packed 4-vectors. in == out allowed.
  void (*circulant_matvec)(const CirculantTriple& t, const double* in, double* out,
                           std::size_t count);

  /// out[n] = q^power * in[n], power in 0..3, for `count` packed 4-vectors.
  void (*affinor_power)(int power, const double* in, double* out, std::size_t count);

  /// out[n] = u[n]^T C(t[n]) v[n] for `count` independent instances.
  void (*circulant_inner)(const CirculantTriple* t, const double* u, const double* v,
                          double* out, std::size_t count);

  /// out[n] = sum of terms evaluated at (x[0][n], x[1][n], x[2][n], x[3][n]).
  void (*poly_eval)(std::span<const Monomial> terms, const std::array<const double*, 4>& x,
                    double* out, std::size_t count);
};

const Table& scalar();

/// AVX2 table, or nullptr when not compiled in or not supported by this CPU.
const Table* avx2();

/// Table chosen at first use: CIRCQ_KERNELS=scalar|avx2|auto (default auto,
/// i.e. the widest supported variant).
const Table& active();

/// Lookup by name ("scalar", "avx2"); nullptr when unavailable.
const Table* find(std::string_view name);

} // namespace circq::kernels
