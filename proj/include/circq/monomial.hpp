#pragma once

#include <array>
#include <cstdint>

namespace circq {

using Exponents = std::array<std::uint8_t, 4>;

/// coeff * x1^e1 * x2^e2 * x3^e3 * x4^e4
struct Monomial {
  double coeff = 0.0;
  Exponents exps{};

  int degree() const { return exps[0] + exps[1] + exps[2] + exps[3]; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

} // namespace circq
