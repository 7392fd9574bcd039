#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "circq/monomial.hpp"
#include "circq/types.hpp"

namespace circq {

/// Real polynomial in x1..x4 kept in canonical form: monomials sorted in
/// graded-lexicographic order (highest degree first, then x1 before x2 ...),
/// duplicates merged and zero coefficients dropped. Two polynomials are equal
/// iff their canonical term lists are equal.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Monomial> terms);

  static Polynomial constant(double value);
  /// x_{axis+1}, axis in 0..3.
  static Polynomial variable(std::size_t axis);

  std::span<const Monomial> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  double evaluate(const Point4& p) const;
  Polynomial derivative(std::size_t axis) const;
  Polynomial pow(unsigned exponent) const;

  /// Canonical text in the expression grammar; parsing it yields an equal
  /// polynomial.
  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator-(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator-(const Polynomial& x);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  std::vector<Monomial> terms_;
};

/// Graded-lexicographic "comes first" relation used for canonical order.
bool graded_lex_before(const Exponents& x, const Exponents& y);

/// A polynomial scalar field with its first and second partial derivatives
/// precomputed as polynomials, so gradients and Hessians are exact.
class ScalarField {
public:
  ScalarField() : ScalarField(Polynomial{}) {}
  explicit ScalarField(Polynomial poly);

  const Polynomial& polynomial() const { return poly_; }

  double value(const Point4& p) const { return poly_.evaluate(p); }
  Covector4 gradient(const Point4& p) const;
  /// Symmetric by construction: only the upper triangle is evaluated.
  Hessian4 hessian(const Point4& p) const;

private:
  Polynomial poly_;
  std::array<Polynomial, 4> grad_;
  // upper triangle, row-major: (0,0) (0,1) (0,2) (0,3) (1,1) (1,2) ...
  std::array<Polynomial, 10> hess_;
};

double eval(const ScalarField& field, const Point4& p);
Covector4 grad(const ScalarField& field, const Point4& p);
Hessian4 hessian(const ScalarField& field, const Point4& p);

/// Central-difference gradient with a uniform step h > 0. Throws
/// std::invalid_argument when h <= 0 or h is not finite.
Covector4 fd_grad_oracle(const ScalarField& field, const Point4& p, double h);
/// Central-difference gradient with per-axis step 1e-5 * max(1, |x_i|).
Covector4 fd_grad_oracle(const ScalarField& field, const Point4& p);

/// Parses an expression in the field grammar:
///   identifiers x1..x4, operators + - * ^, non-negative integer exponents,
///   decimal (optionally with e-notation) and rational p/q literals,
///   parentheses. Implicit multiplication is rejected.
/// Throws ParseError with the byte offset of the problem.
ScalarField parse_field(std::string_view text);
Polynomial parse_polynomial(std::string_view text);

} // namespace circq
