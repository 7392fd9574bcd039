#pragma once

#include <array>

#include "circq/connection.hpp"
#include "circq/manifolds.hpp"

namespace circq {

/// Four-index array r[l][k][j][i], zero-based.
///
/// For the (1,3) tensor the layout is (R(e_j, e_i) e_k)^l = r[l][k][j][i]
/// with R(x, y) z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z.
/// For the (0,4) tensor r[m][k][j][i] = g_ml r13[l][k][j][i], so that
/// R(x, y, z, u) = g(R(x, y) z, u) = r[m][k][j][i] u^m z^k x^j y^i.
template <class Tag>
struct Rank4 {
  std::array<double, 256> data{};

  static constexpr std::size_t index(std::size_t l, std::size_t k, std::size_t j, std::size_t i) {
    return ((l * 4 + k) * 4 + j) * 4 + i;
  }
  double& operator()(std::size_t l, std::size_t k, std::size_t j, std::size_t i) { return data[index(l, k, j, i)]; }
  double operator()(std::size_t l, std::size_t k, std::size_t j, std::size_t i) const { return data[index(l, k, j, i)]; }

  double max_abs() const {
    double m = 0.0;
    for (double x : data) m = std::fmax(m, std::fabs(x));
    return m;
  }
  double max_abs_diff(const Rank4& o) const {
    double m = 0.0;
    for (std::size_t n = 0; n < data.size(); ++n) m = std::fmax(m, std::fabs(data[n] - o.data[n]));
    return m;
  }
};

struct Riemann13Tag {};
struct Riemann04Tag {};
using RiemannArray13 = Rank4<Riemann13Tag>;
using RiemannArray04 = Rank4<Riemann04Tag>;

/// Christoffel symbols with their first partials: derivative[k](s, i, j) =
/// d_k Gamma^s_ij.
struct ChristoffelJet {
  ChristoffelArray gamma;
  std::array<ChristoffelArray, 4> derivative;
};

/// Analytic d Gamma via d g^{-1} = -g^{-1} (d g) g^{-1} and the field Hessians.
ChristoffelJet christoffel_jet(const ManifoldSpec& m, const Point4& p);

/// R^l_kji = d_j Gamma^l_ik - d_i Gamma^l_jk + Gamma^l_jm Gamma^m_ik - Gamma^l_im Gamma^m_jk
RiemannArray13 riemann_from_jet(const ChristoffelJet& jet);

RiemannArray13 riemann(const ManifoldSpec& m, const Point4& p);
RiemannArray04 riemann_lowered(const ManifoldSpec& m, const Point4& p);

RiemannArray04 lower_index(const RiemannArray13& r, const CirculantTriple& metric);
RiemannArray13 raise_index(const RiemannArray04& r, const CirculantTriple& metric);

/// R(x, y, z, u)
double contract(const RiemannArray04& r, const Vector4& x, const Vector4& y, const Vector4& z,
                const Vector4& u);

/// |R(x, y, z, q u) - R(x, y, q^3 z, u)|
double identity_31_residual(const RiemannArray04& r, const Vector4& x, const Vector4& y,
                            const Vector4& z, const Vector4& u);
double identity_31_residual(const ManifoldSpec& m, const Point4& p, const Vector4& x,
                            const Vector4& y, const Vector4& z, const Vector4& u);

/// Maximum of the identity residual over all basis 4-tuples; by
/// multilinearity this bounds it for every tuple up to norm factors.
double identity_31_basis_residual(const RiemannArray04& r);

/// max over l, k, j, i of |R^l_sji q_k^s - R^s_kji q_s^l|
double identity_32_residual(const RiemannArray13& r);
double identity_32_residual(const ManifoldSpec& m, const Point4& p);

/// Residuals of the classical algebraic symmetries of a Levi-Civita (0,4)
/// curvature tensor, absolute.
struct SymmetryResiduals {
  double derivative_pair = 0.0;  // r[m][k][j][i] + r[m][k][i][j]
  double vector_pair = 0.0;      // r[m][k][j][i] + r[k][m][j][i]
  double pair_exchange = 0.0;    // r[m][k][j][i] - r[j][i][m][k]
  double bianchi = 0.0;          // r[m][k][j][i] + r[m][j][i][k] + r[m][i][k][j]

  double max() const;
};

SymmetryResiduals classical_symmetry_residuals(const RiemannArray04& r);

} // namespace circq
