#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "circq/fields.hpp"
#include "oracles.hpp"

using circq::Point4;
using circq::ScalarField;

namespace {

const Point4 kProbe{{1.0, 0.1, 2.0, 0.2}};

} // namespace

TEST_CASE("eval of constant and polynomial fields") {
  CHECK(circq::eval(circq::parse_field("5"), kProbe) == 5.0);
  CHECK(circq::eval(circq::parse_field("5"), Point4{{-3, 7, 11, 0}}) == 5.0);
  CHECK(circq::eval(circq::parse_field("x1^2 + x2^2 + x3^2 + x4^2"), kProbe) == doctest::Approx(5.05));
  CHECK(circq::eval(circq::parse_field("(x1 + x3)*(x2 + x4)"), kProbe) == doctest::Approx(0.9));
}

TEST_CASE("analytic gradients") {
  const Point4 origin{};
  const auto zero = circq::grad(circq::parse_field("7.5"), kProbe);
  for (std::size_t i = 0; i < 4; ++i) CHECK(zero[i] == 0.0);

  const auto g = circq::grad(circq::parse_field("x1^2 + x2^2 + x3^2 + x4^2"), kProbe);
  CHECK(g[0] == doctest::Approx(2.0));
  CHECK(g[1] == doctest::Approx(0.2));
  CHECK(g[2] == doctest::Approx(4.0));
  CHECK(g[3] == doctest::Approx(0.4));

  // Example B; values cross-checked against the central-difference oracle.
  const ScalarField B = circq::parse_field("x1*x2 + x2*x3 + x1*x4 + x3*x4");
  const auto gb = circq::grad(B, kProbe);
  const auto fd = circq::fd_grad_oracle(B, kProbe, 1e-5);
  const std::array<double, 4> want{0.3, 3.0, 0.3, 3.0};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(gb[i] == doctest::Approx(want[i]).epsilon(1e-14));
    CHECK(fd[i] == doctest::Approx(want[i]).epsilon(1e-9));
  }
  CHECK(circq::grad(circq::parse_field("x1"), origin)[0] == 1.0);
}

TEST_CASE("hessian") {
  const auto h = circq::hessian(circq::parse_field("x1^2 + x2^2 + x3^2 + x4^2"), Point4{{0.3, -2, 5, 1}});
  CHECK(h == circq::Matrix4{{2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2}});
  CHECK(circq::hessian(circq::parse_field("3"), kProbe) == circq::Matrix4{});

  // Example C: constant Hessian with H13 = H24 = 2. Frozen from nested FD.
  const ScalarField C = circq::parse_field("2*x1*x3 + 2*x2*x4");
  const auto hc = circq::hessian(C, kProbe);
  const auto fd = oracle::nested_fd_hessian(C, kProbe, 1e-3);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool linked = (i == 0 && j == 2) || (i == 2 && j == 0) || (i == 1 && j == 3) || (i == 3 && j == 1);
      CHECK(hc(i, j) == (linked ? 2.0 : 0.0));
      CHECK(std::fabs(fd(i, j) - hc(i, j)) <= 1e-6);
    }
}

TEST_CASE("fd_grad_oracle") {
  std::mt19937_64 rng(7);
  const ScalarField x1 = circq::parse_field("x1");
  for (int n = 0; n < 20; ++n) {
    const Point4 p = oracle::random_point(rng, -5, 5);
    const double h = std::uniform_real_distribution<double>(1e-6, 1e-1)(rng);
    const auto g = circq::fd_grad_oracle(x1, p, h);
    CHECK(g[0] == 1.0);
    CHECK(g[1] == 0.0);
    CHECK(g[2] == 0.0);
    CHECK(g[3] == 0.0);
  }
  const auto g = circq::fd_grad_oracle(circq::parse_field("x1^2 + x2^2 + x3^2 + x4^2"), kProbe, 1e-5);
  const std::array<double, 4> want{2.0, 0.2, 4.0, 0.4};
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::fabs(g[i] - want[i]) <= 1e-8);

  const auto c = circq::fd_grad_oracle(circq::parse_field("-4"), kProbe, 1e-3);
  for (std::size_t i = 0; i < 4; ++i) CHECK(c[i] == 0.0);

  CHECK_THROWS_AS(circq::fd_grad_oracle(x1, kProbe, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(circq::fd_grad_oracle(x1, kProbe, -1e-3), std::invalid_argument);
}

TEST_CASE("property: analytic gradient agrees with finite differences") {
  const char* corpus[] = {
      "x1^2 + x2^2 + x3^2 + x4^2",
      "x1*x2 + x2*x3 + x1*x4 + x3*x4",
      "2*x1*x3 + 2*x2*x4",
      "x1^3 - 2*x2*x3^2 + 0.5*x4",
      "(x1 - x2)^4 + 3*x3*x4",
      "1/3*x1*x2*x3*x4 - 7",
      "(x1 + x2 + x3 + x4)^3",
      "x4^5 - x1^2*x2^2",
  };
  std::mt19937_64 rng(2024);
  for (const char* text : corpus) {
    CAPTURE(text);
    const ScalarField f = circq::parse_field(text);
    for (int n = 0; n < 100; ++n) {
      const Point4 p = oracle::random_point(rng, -2, 2);
      const auto g = f.gradient(p);
      const auto fd = circq::fd_grad_oracle(f, p, 1e-5);
      const double bound = 1e-6 + 1e-6 * g.max_abs();
      for (std::size_t i = 0; i < 4; ++i) CHECK(std::fabs(g[i] - fd[i]) <= bound);
      // default per-axis step
      const auto fd_default = circq::fd_grad_oracle(f, p);
      for (std::size_t i = 0; i < 4; ++i) CHECK(std::fabs(g[i] - fd_default[i]) <= bound);
      const auto h = f.hessian(p);
      CHECK(h == h.transposed());
    }
  }
}

TEST_CASE("polynomial algebra keeps canonical order") {
  using circq::Polynomial;
  const Polynomial p = circq::parse_polynomial("x4 + x1 + 3 + x1^2 + x1*x2 + x2^2 - x1");
  CHECK(p.to_string() == "x1^2 + x1*x2 + x2^2 + x4 + 3");
  CHECK(p.degree() == 2);
  CHECK((p - p).is_zero());
  CHECK((p - p).to_string() == "0");
  CHECK(Polynomial::variable(0).pow(3) == circq::parse_polynomial("x1*x1*x1"));
  CHECK(p.derivative(0) == circq::parse_polynomial("2*x1 + x2"));
}
