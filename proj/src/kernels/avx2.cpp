// AVX2 variants. Compiled with -mavx2 only (no -mfma); the dispatcher checks
// CPU support before handing out this table.

#include <immintrin.h>

#include "circq/kernels.hpp"

#include "scalar_ops.hpp"

namespace circq::kernels {
namespace {

// lane i <- v[(i + s) mod 4]
inline __m256d rot1(__m256d v) { return _mm256_permute4x64_pd(v, _MM_SHUFFLE(0, 3, 2, 1)); }
inline __m256d rot2(__m256d v) { return _mm256_permute4x64_pd(v, _MM_SHUFFLE(1, 0, 3, 2)); }
inline __m256d rot3(__m256d v) { return _mm256_permute4x64_pd(v, _MM_SHUFFLE(2, 1, 0, 3)); }

inline __m256d matvec(__m256d a, __m256d b, __m256d c, __m256d v) {
  __m256d r = _mm256_mul_pd(a, v);
  r = _mm256_add_pd(r, _mm256_mul_pd(b, _mm256_add_pd(rot1(v), rot3(v))));
  r = _mm256_add_pd(r, _mm256_mul_pd(c, rot2(v)));
  return r;
}

void circulant_matvec(const CirculantTriple& t, const double* in, double* out, std::size_t count) {
  const __m256d a = _mm256_set1_pd(t.a);
  const __m256d b = _mm256_set1_pd(t.b);
  const __m256d c = _mm256_set1_pd(t.c);
  for (std::size_t n = 0; n < count; ++n) {
    const __m256d v = _mm256_loadu_pd(in + 4 * n);
    _mm256_storeu_pd(out + 4 * n, matvec(a, b, c, v));
  }
}

void affinor_power(int power, const double* in, double* out, std::size_t count) {
  // q^k lane i <- v[(i - k) mod 4], i.e. a rotation by 4 - k.
  switch (static_cast<unsigned>(power) & 3u) {
  case 0:
    for (std::size_t n = 0; n < count; ++n) _mm256_storeu_pd(out + 4 * n, _mm256_loadu_pd(in + 4 * n));
    break;
  case 1:
    for (std::size_t n = 0; n < count; ++n) _mm256_storeu_pd(out + 4 * n, rot3(_mm256_loadu_pd(in + 4 * n)));
    break;
  case 2:
    for (std::size_t n = 0; n < count; ++n) _mm256_storeu_pd(out + 4 * n, rot2(_mm256_loadu_pd(in + 4 * n)));
    break;
  default:
    for (std::size_t n = 0; n < count; ++n) _mm256_storeu_pd(out + 4 * n, rot1(_mm256_loadu_pd(in + 4 * n)));
    break;
  }
}

void circulant_inner(const CirculantTriple* t, const double* u, const double* v, double* out,
                     std::size_t count) {
  for (std::size_t n = 0; n < count; ++n) {
    const __m256d gv = matvec(_mm256_set1_pd(t[n].a), _mm256_set1_pd(t[n].b), _mm256_set1_pd(t[n].c),
                              _mm256_loadu_pd(v + 4 * n));
    const __m256d w = _mm256_mul_pd(_mm256_loadu_pd(u + 4 * n), gv);
    // (w0 + w1) + (w2 + w3)
    const __m256d h = _mm256_hadd_pd(w, w);
    const __m128d s = _mm_add_sd(_mm256_castpd256_pd128(h), _mm256_extractf128_pd(h, 1));
    out[n] = _mm_cvtsd_f64(s);
  }
}

void poly_eval(std::span<const Monomial> terms, const std::array<const double*, 4>& x, double* out,
               std::size_t count) {
  std::size_t n = 0;
  for (; n + 4 <= count; n += 4) {
    const __m256d xs[4] = {_mm256_loadu_pd(x[0] + n), _mm256_loadu_pd(x[1] + n),
                           _mm256_loadu_pd(x[2] + n), _mm256_loadu_pd(x[3] + n)};
    __m256d acc = _mm256_setzero_pd();
    for (const Monomial& term : terms) {
      __m256d m = _mm256_set1_pd(term.coeff);
      for (std::size_t axis = 0; axis < 4; ++axis)
        for (unsigned e = 0; e < term.exps[axis]; ++e) m = _mm256_mul_pd(m, xs[axis]);
      acc = _mm256_add_pd(acc, m);
    }
    _mm256_storeu_pd(out + n, acc);
  }
  for (; n < count; ++n) out[n] = detail::poly1(terms, x[0][n], x[1][n], x[2][n], x[3][n]);
}

} // namespace

const Table& avx2_table() {
  static const Table table{"avx2", circulant_matvec, affinor_power, circulant_inner, poly_eval};
  return table;
}

} // namespace circq::kernels
