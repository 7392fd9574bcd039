#include "circq/fields.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kernels/scalar_ops.hpp"

namespace circq {

bool graded_lex_before(const Exponents& x, const Exponents& y) {
  const int dx = x[0] + x[1] + x[2] + x[3];
  const int dy = y[0] + y[1] + y[2] + y[3];
  if (dx != dy) return dx > dy;
  return x > y;
}

Polynomial::Polynomial(std::vector<Monomial> terms) : terms_(std::move(terms)) {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Monomial& l, const Monomial& r) { return graded_lex_before(l.exps, r.exps); });
  std::vector<Monomial> merged;
  merged.reserve(terms_.size());
  for (const Monomial& t : terms_) {
    if (!merged.empty() && merged.back().exps == t.exps)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Monomial& t) { return t.coeff == 0.0; });
  terms_ = std::move(merged);
}

Polynomial Polynomial::constant(double value) { return Polynomial({Monomial{value, {0, 0, 0, 0}}}); }

Polynomial Polynomial::variable(std::size_t axis) {
  Exponents e{0, 0, 0, 0};
  e.at(axis) = 1;
  return Polynomial({Monomial{1.0, e}});
}

int Polynomial::degree() const { return terms_.empty() ? 0 : terms_.front().degree(); }

double Polynomial::evaluate(const Point4& p) const {
  return kernels::detail::poly1(terms_, p[0], p[1], p[2], p[3]);
}

Polynomial Polynomial::derivative(std::size_t axis) const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const Monomial& t : terms_) {
    if (t.exps[axis] == 0) continue;
    Monomial d = t;
    d.coeff *= t.exps[axis];
    d.exps[axis] -= 1;
    out.push_back(d);
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(1.0);
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Polynomial operator+(const Polynomial& x, const Polynomial& y) {
  std::vector<Monomial> t(x.terms_.begin(), x.terms_.end());
  t.insert(t.end(), y.terms_.begin(), y.terms_.end());
  return Polynomial(std::move(t));
}

Polynomial operator-(const Polynomial& x) {
  std::vector<Monomial> t(x.terms_.begin(), x.terms_.end());
  for (Monomial& m : t) m.coeff = -m.coeff;
  return Polynomial(std::move(t));
}

Polynomial operator-(const Polynomial& x, const Polynomial& y) { return x + (-y); }

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  std::vector<Monomial> t;
  t.reserve(x.terms_.size() * y.terms_.size());
  for (const Monomial& l : x.terms_)
    for (const Monomial& r : y.terms_) {
      Monomial m;
      m.coeff = l.coeff * r.coeff;
      for (std::size_t i = 0; i < 4; ++i) {
        const int e = l.exps[i] + r.exps[i];
        if (e > std::numeric_limits<std::uint8_t>::max())
          throw std::overflow_error("polynomial degree exceeds 255 in one variable");
        m.exps[i] = static_cast<std::uint8_t>(e);
      }
      t.push_back(m);
    }
  return Polynomial(std::move(t));
}

namespace {

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

} // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Monomial& t : terms_) {
    const bool negative = std::signbit(t.coeff);
    const double mag = std::fabs(t.coeff);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string body;
    const bool is_constant = t.degree() == 0;
    if (mag != 1.0 || is_constant) body = format_number(mag);
    for (std::size_t i = 0; i < 4; ++i) {
      if (t.exps[i] == 0) continue;
      if (!body.empty()) body += '*';
      body += 'x';
      body += static_cast<char>('1' + i);
      if (t.exps[i] > 1) body += '^' + std::to_string(t.exps[i]);
    }
    out += body;
  }
  return out;
}

ScalarField::ScalarField(Polynomial poly) : poly_(std::move(poly)) {
  for (std::size_t i = 0; i < 4; ++i) grad_[i] = poly_.derivative(i);
  std::size_t n = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) hess_[n++] = grad_[i].derivative(j);
}

Covector4 ScalarField::gradient(const Point4& p) const {
  Covector4 g;
  for (std::size_t i = 0; i < 4; ++i) g[i] = grad_[i].evaluate(p);
  return g;
}

Hessian4 ScalarField::hessian(const Point4& p) const {
  Hessian4 h;
  std::size_t n = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      const double v = hess_[n++].evaluate(p);
      h(i, j) = v;
      h(j, i) = v;
    }
  return h;
}

double eval(const ScalarField& field, const Point4& p) { return field.value(p); }
Covector4 grad(const ScalarField& field, const Point4& p) { return field.gradient(p); }
Hessian4 hessian(const ScalarField& field, const Point4& p) { return field.hessian(p); }

namespace {

Covector4 central_difference(const ScalarField& field, const Point4& p, const std::array<double, 4>& steps) {
  Covector4 g;
  for (std::size_t i = 0; i < 4; ++i) {
    Point4 hi = p;
    Point4 lo = p;
    hi[i] += steps[i];
    lo[i] -= steps[i];
    // Divide by the realized step so representation error in p +- h cancels.
    g[i] = (field.value(hi) - field.value(lo)) / (hi[i] - lo[i]);
  }
  return g;
}

} // namespace

Covector4 fd_grad_oracle(const ScalarField& field, const Point4& p, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("finite-difference step must be positive");
  return central_difference(field, p, {h, h, h, h});
}

Covector4 fd_grad_oracle(const ScalarField& field, const Point4& p) {
  std::array<double, 4> steps;
  for (std::size_t i = 0; i < 4; ++i) steps[i] = 1e-5 * std::fmax(1.0, std::fabs(p[i]));
  return central_difference(field, p, steps);
}

} // namespace circq
