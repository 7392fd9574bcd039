#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circq/circulant.hpp"
#include "circq/fields.hpp"
#include "circq/types.hpp"

namespace circq {

/// Points x * direction for every real x, where the metric is declared
/// degenerate regardless of the pointwise ordering test.
struct ExcludedLine {
  Vector4 direction;
  std::string label;
};

/// A manifold (M, g, q): the fields A, B, C generate the circulant metric at
/// each point; q is fixed.
struct ManifoldSpec {
  std::string name;
  ScalarField A;
  ScalarField B;
  ScalarField C;
  std::vector<ExcludedLine> excluded;

  CirculantTriple triple_at(const Point4& p) const;
};

/// Values, gradients and (optionally) Hessians of A, B, C at a point.
struct FieldJet {
  CirculantTriple value;
  std::array<Covector4, 3> grad;  // A, B, C
  std::array<Hessian4, 3> hess;   // zero unless requested

  /// Generator of the circulant d_k g: (A_k, B_k, C_k).
  CirculantTriple derivative_triple(std::size_t k) const {
    return {grad[0][k], grad[1][k], grad[2][k]};
  }
  /// Generator of d_k d_l g.
  CirculantTriple second_derivative_triple(std::size_t k, std::size_t l) const {
    return {hess[0](k, l), hess[1](k, l), hess[2](k, l)};
  }
};

FieldJet jet_at(const ManifoldSpec& m, const Point4& p, bool with_hessian);

/// The built-in example: A = sum of squares, B = x1x2 + x2x3 + x1x4 + x3x4,
/// C = 2x1x3 + 2x2x4, with excluded lines (x,x,x,x) and (-x,x,-x,x).
ManifoldSpec example_manifold();

struct Validity {
  bool valid = false;
  std::string reason;
};

/// Label of the first excluded line containing p, if any.
std::optional<std::string> excluded_locus(const ManifoldSpec& m, const Point4& p);

/// Valid iff p avoids every excluded line and A(p) > C(p) > B(p) > 0.
/// Reasons: "ok", "excluded locus <label>", "A > C violated",
/// "C > B violated", "B > 0 violated".
Validity domain_valid(const ManifoldSpec& m, const Point4& p);
/// Same test with A, B, C already evaluated at p.
Validity domain_valid(const ManifoldSpec& m, const Point4& p, const CirculantTriple& t);

/// Parses the line-oriented config format:
///   # comment
///   name = <text>
///   A = <expr>
///   B = <expr>
///   C = <expr>
/// Throws ConfigError ("missing field C", parse errors prefixed by the field
/// name, unknown or duplicate keys).
ManifoldSpec manifold_from_config(std::string_view text);
ManifoldSpec load_manifold_file(const std::filesystem::path& path);

} // namespace circq
