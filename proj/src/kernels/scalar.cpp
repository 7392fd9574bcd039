#include "circq/kernels.hpp"

#include "scalar_ops.hpp"

namespace circq::kernels {
namespace {

void circulant_matvec(const CirculantTriple& t, const double* in, double* out, std::size_t count) {
  for (std::size_t n = 0; n < count; ++n) detail::matvec4(t, in + 4 * n, out + 4 * n);
}

void affinor_power(int power, const double* in, double* out, std::size_t count) {
  for (std::size_t n = 0; n < count; ++n) detail::affinor4(power, in + 4 * n, out + 4 * n);
}

void circulant_inner(const CirculantTriple* t, const double* u, const double* v, double* out,
                     std::size_t count) {
  for (std::size_t n = 0; n < count; ++n) out[n] = detail::inner4(t[n], u + 4 * n, v + 4 * n);
}

void poly_eval(std::span<const Monomial> terms, const std::array<const double*, 4>& x, double* out,
               std::size_t count) {
  for (std::size_t n = 0; n < count; ++n) out[n] = detail::poly1(terms, x[0][n], x[1][n], x[2][n], x[3][n]);
}

} // namespace

const Table& scalar() {
  static const Table table{"scalar", circulant_matvec, affinor_power, circulant_inner, poly_eval};
  return table;
}

} // namespace circq::kernels
