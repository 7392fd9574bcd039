#include "circq/curvature.hpp"

#include <algorithm>
#include <cmath>

#include "circq/circulant.hpp"
#include "circq/errors.hpp"
#include "circq/kernels.hpp"

namespace circq {

ChristoffelJet christoffel_jet(const ManifoldSpec& m, const Point4& p) {
  if (auto locus = excluded_locus(m, p)) throw DomainError("point lies on excluded locus " + *locus);
  const FieldJet jet = jet_at(m, p, true);
  const CirculantTriple inv = inverse_triple(jet.value);
  const kernels::Table& k = kernels::active();

  const std::array<double, 64> first = christoffel_first_kind(jet);
  std::array<double, 64> raised;
  k.circulant_matvec(inv, first.data(), raised.data(), 16);

  ChristoffelJet out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t s = 0; s < 4; ++s) out.gamma(s, i, j) = 0.5 * raised[(i * 4 + j) * 4 + s];

  for (std::size_t d = 0; d < 4; ++d) {
    // d_d g^{-1} = -g^{-1} (d_d g) g^{-1}
    const CirculantTriple dg = jet.derivative_triple(d);
    CirculantTriple dinv = compose(compose(inv, dg), inv);
    dinv = {-dinv.a, -dinv.b, -dinv.c};

    auto d2g = [&](std::size_t l, std::size_t x, std::size_t y) { return jet.hess[circulant_slot(x, y)](d, l); };
    std::array<double, 64> dfirst;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t a = 0; a < 4; ++a)
          dfirst[(i * 4 + j) * 4 + a] = d2g(i, a, j) + d2g(j, a, i) - d2g(a, i, j);

    std::array<double, 64> t1;
    std::array<double, 64> t2;
    k.circulant_matvec(dinv, first.data(), t1.data(), 16);
    k.circulant_matvec(inv, dfirst.data(), t2.data(), 16);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t s = 0; s < 4; ++s) {
          const std::size_t n = (i * 4 + j) * 4 + s;
          out.derivative[d](s, i, j) = 0.5 * (t1[n] + t2[n]);
        }
  }
  return out;
}

RiemannArray13 riemann_from_jet(const ChristoffelJet& jet) {
  const ChristoffelArray& G = jet.gamma;
  RiemannArray13 r;
  for (std::size_t l = 0; l < 4; ++l)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) {
          double v = jet.derivative[j](l, i, k) - jet.derivative[i](l, j, k);
          for (std::size_t m = 0; m < 4; ++m) v += G(l, j, m) * G(m, i, k) - G(l, i, m) * G(m, j, k);
          r(l, k, j, i) = v;
        }
  return r;
}

RiemannArray13 riemann(const ManifoldSpec& m, const Point4& p) { return riemann_from_jet(christoffel_jet(m, p)); }

namespace {

// Applies a circulant matrix to the first index of a rank-4 array.
template <class Out, class In>
Out transform_first_index(const In& r, const CirculantTriple& t) {
  std::array<double, 256> packed;
  for (std::size_t rest = 0; rest < 64; ++rest)
    for (std::size_t l = 0; l < 4; ++l) packed[rest * 4 + l] = r.data[l * 64 + rest];
  kernels::active().circulant_matvec(t, packed.data(), packed.data(), 64);
  Out out;
  for (std::size_t rest = 0; rest < 64; ++rest)
    for (std::size_t l = 0; l < 4; ++l) out.data[l * 64 + rest] = packed[rest * 4 + l];
  return out;
}

} // namespace

RiemannArray04 lower_index(const RiemannArray13& r, const CirculantTriple& metric) {
  return transform_first_index<RiemannArray04>(r, metric);
}

RiemannArray13 raise_index(const RiemannArray04& r, const CirculantTriple& metric) {
  return transform_first_index<RiemannArray13>(r, inverse_triple(metric));
}

RiemannArray04 riemann_lowered(const ManifoldSpec& m, const Point4& p) {
  return lower_index(riemann(m, p), m.triple_at(p));
}

double contract(const RiemannArray04& r, const Vector4& x, const Vector4& y, const Vector4& z,
                const Vector4& u) {
  double acc = 0.0;
  for (std::size_t m = 0; m < 4; ++m)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) acc += r(m, k, j, i) * u[m] * z[k] * x[j] * y[i];
  return acc;
}

double identity_31_residual(const RiemannArray04& r, const Vector4& x, const Vector4& y, const Vector4& z,
                            const Vector4& u) {
  return std::fabs(contract(r, x, y, z, apply_affinor(1, u)) - contract(r, x, y, apply_affinor(3, z), u));
}

double identity_31_residual(const ManifoldSpec& m, const Point4& p, const Vector4& x, const Vector4& y,
                            const Vector4& z, const Vector4& u) {
  return identity_31_residual(riemann_lowered(m, p), x, y, z, u);
}

namespace {

// Index of the basis vector q^power e_n.
std::array<std::size_t, 4> basis_image(int power) {
  std::array<std::size_t, 4> out{};
  for (std::size_t n = 0; n < 4; ++n) {
    Vector4 e;
    e[n] = 1.0;
    const Vector4 img = apply_affinor(power, e);
    for (std::size_t c = 0; c < 4; ++c)
      if (img[c] == 1.0) out[n] = c;
  }
  return out;
}

} // namespace

double identity_31_basis_residual(const RiemannArray04& r) {
  const auto q1 = basis_image(1);
  const auto q3 = basis_image(3);
  double worst = 0.0;
  // R(e_j, e_i, e_k, q e_m) - R(e_j, e_i, q^3 e_k, e_m)
  for (std::size_t m = 0; m < 4; ++m)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i)
          worst = std::fmax(worst, std::fabs(r(q1[m], k, j, i) - r(m, q3[k], j, i)));
  return worst;
}

double identity_32_residual(const RiemannArray13& r) {
  const Matrix4 q = affinor_matrix();
  double worst = 0.0;
  for (std::size_t l = 0; l < 4; ++l)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) {
          double lhs = 0.0;
          double rhs = 0.0;
          for (std::size_t s = 0; s < 4; ++s) {
            lhs += r(l, s, j, i) * q(k, s);
            rhs += r(s, k, j, i) * q(s, l);
          }
          worst = std::fmax(worst, std::fabs(lhs - rhs));
        }
  return worst;
}

double identity_32_residual(const ManifoldSpec& m, const Point4& p) { return identity_32_residual(riemann(m, p)); }

double SymmetryResiduals::max() const {
  return std::max({derivative_pair, vector_pair, pair_exchange, bianchi});
}

SymmetryResiduals classical_symmetry_residuals(const RiemannArray04& r) {
  SymmetryResiduals s;
  for (std::size_t m = 0; m < 4; ++m)
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) {
          const double v = r(m, k, j, i);
          s.derivative_pair = std::fmax(s.derivative_pair, std::fabs(v + r(m, k, i, j)));
          s.vector_pair = std::fmax(s.vector_pair, std::fabs(v + r(k, m, j, i)));
          s.pair_exchange = std::fmax(s.pair_exchange, std::fabs(v - r(j, i, m, k)));
          s.bianchi = std::fmax(s.bianchi, std::fabs(v + r(m, j, i, k) + r(m, i, k, j)));
        }
  return s;
}

} // namespace circq
