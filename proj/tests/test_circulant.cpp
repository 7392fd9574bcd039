#include <cmath>
#include <random>

#include "doctest.h"
#include "circq/circulant.hpp"
#include "circq/errors.hpp"
#include "oracles.hpp"

using circq::CirculantTriple;
using circq::Matrix4;
using circq::Vector4;

TEST_CASE("metric_components layout") {
  CHECK(circq::metric_components({1, 0, 0}) == Matrix4::identity());
  const Matrix4 g = circq::metric_components({3, 1, 2});
  const Matrix4 want{{3, 1, 2, 1, 1, 3, 1, 2, 2, 1, 3, 1, 1, 2, 1, 3}};
  CHECK(g == want);
  CHECK(g == g.transposed());
}

TEST_CASE("metric_determinant matches the brute-force determinant") {
  CHECK(circq::metric_determinant({3, 1, 2}) == 21.0);
  CHECK(oracle::leibniz_determinant(oracle::circulant(3, 1, 2)) == doctest::Approx(21.0));
  CHECK(circq::metric_determinant({1, 0, 0}) == 1.0);
  // (1.01)^2 (9.09^2 - 3.24)
  const double brute = oracle::leibniz_determinant(oracle::circulant(5.05, 0.9, 4.04));
  CHECK(brute == doctest::Approx(80.9838).epsilon(1e-6));
  CHECK(circq::metric_determinant({5.05, 0.9, 4.04}) == doctest::Approx(brute).epsilon(1e-12));
}

TEST_CASE("inverse_metric closed form") {
  const auto inv = circq::inverse_triple({3, 1, 2});
  CHECK(inv.a == doctest::Approx(13.0 / 21));
  CHECK(inv.b == doctest::Approx(-1.0 / 21));
  CHECK(inv.c == doctest::Approx(-8.0 / 21));
  const Matrix4 gj = oracle::gauss_jordan_inverse(oracle::circulant(3, 1, 2));
  CHECK(circq::inverse_metric({3, 1, 2}).max_abs_diff(gj) <= 1e-14);
  CHECK(circq::inverse_metric({1, 0, 0}) == Matrix4::identity());
  CHECK_THROWS_AS(circq::inverse_triple({2, 0, 2}), circq::SingularMetricError);
  // (a + c)^2 = 4 b^2
  CHECK_THROWS_AS(circq::inverse_metric({1, 1, 1}), circq::SingularMetricError);
  CHECK(circq::is_degenerate({2, 0, 2}));
  CHECK_FALSE(circq::is_degenerate({3, 1, 2}));
}

TEST_CASE("positive definiteness") {
  CHECK(circq::is_positive_definite_ordered({3, 1, 2}));
  const auto minors = circq::leading_principal_minors({3, 1, 2});
  // 3, 3*3 - 1, det of the leading 3x3 block, full determinant
  CHECK(minors[0] == doctest::Approx(3));
  CHECK(minors[1] == doctest::Approx(8));
  CHECK(minors[2] == doctest::Approx(oracle::leibniz_determinant(oracle::circulant(3, 1, 2), 3)));
  CHECK(minors[3] == doctest::Approx(21));
  CHECK(circq::leading_minors_positive({3, 1, 2}));
  CHECK_FALSE(circq::is_positive_definite_ordered({1, 2, 3}));
  CHECK_FALSE(circq::is_positive_definite_ordered({30, 24, 22}));
  // Ordering is sufficient, not necessary: (3, 0.5, -1) is positive definite.
  CHECK_FALSE(circq::is_positive_definite_ordered({3, 0.5, -1}));
  CHECK(circq::leading_minors_positive({3, 0.5, -1}));

  std::mt19937_64 rng(11);
  for (int n = 0; n < 500; ++n) CHECK(circq::leading_minors_positive(oracle::random_ordered_triple(rng)));
}

TEST_CASE("affinor action") {
  const Vector4 v{{1, 2, 3, 4}};
  CHECK(circq::apply_affinor(1, v) == Vector4{{4, 1, 2, 3}});
  CHECK(circq::apply_affinor(2, v) == Vector4{{3, 4, 1, 2}});
  CHECK(circq::apply_affinor(4, v) == v);
  CHECK(circq::apply_affinor(0, v) == v);
  CHECK(circq::apply_affinor(-1, v) == circq::apply_affinor(3, v));
  Vector4 w = v;
  for (int n = 0; n < 4; ++n) w = circq::apply_affinor(1, w);
  CHECK(w == v);
  const Vector4 alt{{1, -1, 1, -1}};
  CHECK(circq::apply_affinor(2, alt) == alt);
  const Vector4 e1{{1, 0, 0, 0}};
  CHECK(circq::apply_affinor(2, e1) == Vector4{{0, 0, 1, 0}});

  for (int k = 0; k < 4; ++k) CHECK(circq::apply_affinor(k, v) == oracle::affinor_by_matrix(k, v));
}

TEST_CASE("affinor matrix algebra") {
  const Matrix4 q = circq::affinor_matrix();
  CHECK(q * q * q * q == Matrix4::identity());
  const Matrix4 q2 = q * q;
  CHECK(q2 != Matrix4::identity());
  Matrix4 minus_identity;
  for (std::size_t i = 0; i < 4; ++i) minus_identity(i, i) = -1.0;
  CHECK(q2 != minus_identity);
  for (std::size_t i = 0; i < 4; ++i) {
    double row = 0.0, col = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      row += q(i, j);
      col += q(j, i);
    }
    CHECK(row == 1.0);
    CHECK(col == 1.0);
  }
  // q^i_j = q_a^t q_j^a q_t^i, where the first factor carries its indices
  // transposed (q^3 = q^T), i.e. q = q q^3 q.
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) {
      double s = 0.0;
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t t = 0; t < 4; ++t) s += q(t, a) * q(j, a) * q(t, i);
      CHECK(s == q(j, i));
    }
  CHECK(circq::affinor_matrix_power(3) * q == Matrix4::identity());
}

TEST_CASE("inner product") {
  const Vector4 v{{1, 2, 3, 4}};
  CHECK(circq::inner({1, 0, 0}, v, v) == 30.0);
  CHECK(circq::inner({3, 1, 2}, Vector4{{1, 0, 0, 0}}, Vector4{{1, 0, 0, 0}}) == 3.0);
  const Vector4 ones{{1, 1, 1, 1}};
  CHECK(circq::inner({3, 1, 2}, ones, ones) == 28.0);
  CHECK(oracle::quadratic_form(oracle::circulant(3, 1, 2), ones, ones) == 28.0);

  // Expanded quadratic form g(u, u).
  std::mt19937_64 rng(5);
  for (int n = 0; n < 100; ++n) {
    const auto t = oracle::random_ordered_triple(rng);
    const Vector4 u = oracle::random_vector(rng);
    const double expanded = t.a * (u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3]) +
                            2 * t.b * (u[0] * u[1] + u[0] * u[3] + u[1] * u[2] + u[2] * u[3]) +
                            2 * t.c * (u[0] * u[2] + u[1] * u[3]);
    CHECK(circq::inner(t, u, u) == doctest::Approx(expanded).epsilon(1e-13));
  }
}

TEST_CASE("property: q is a g-isometry") {
  std::mt19937_64 rng(99);
  for (int n = 0; n < 1000; ++n) {
    const auto t = oracle::random_ordered_triple(rng);
    const Vector4 u = oracle::random_vector(rng);
    const Vector4 v = oracle::random_vector(rng);
    const double base = circq::inner(t, u, v);
    for (int k = 1; k <= 3; ++k) {
      const double moved = circq::inner(t, circq::apply_affinor(k, u), circq::apply_affinor(k, v));
      CHECK(std::fabs(moved - base) <= 1e-12 * (1 + std::fabs(base)));
    }
  }
}

TEST_CASE("property: closed forms against generic linear algebra") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(-3, 3);
  int tested = 0;
  while (tested < 1000) {
    const CirculantTriple t{u(rng), u(rng), u(rng)};
    if (std::fabs(circq::inverse_denominator(t)) <= 1e-8) continue;
    ++tested;
    const double brute = oracle::leibniz_determinant(oracle::circulant(t.a, t.b, t.c));
    CHECK(std::fabs(circq::metric_determinant(t) - brute) <= 1e-10 * std::fmax(1.0, std::fabs(brute)));
    const Matrix4 prod = circq::inverse_metric(t) * circq::metric_components(t);
    CHECK(prod.max_abs_diff(Matrix4::identity()) <= 1e-10);
  }
}

TEST_CASE("compose is the circulant product") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int n = 0; n < 50; ++n) {
    const CirculantTriple x{u(rng), u(rng), u(rng)};
    const CirculantTriple y{u(rng), u(rng), u(rng)};
    const Matrix4 direct = oracle::circulant(x.a, x.b, x.c) * oracle::circulant(y.a, y.b, y.c);
    CHECK(circq::metric_components(circq::compose(x, y)).max_abs_diff(direct) <= 1e-14);
  }
}
