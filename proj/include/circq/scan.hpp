#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circq/circulant.hpp"
#include "circq/manifolds.hpp"
#include "circq/types.hpp"

namespace circq {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Check : std::uint8_t {
  validity = 1,
  parallel = 2,
  curvature31 = 4,
  curvature32 = 8,
};

class CheckSet {
public:
  constexpr CheckSet() = default;
  constexpr explicit CheckSet(std::uint8_t bits) : bits_(bits) {}

  static constexpr CheckSet all() { return CheckSet(0x0F); }

  constexpr bool has(Check c) const { return (bits_ & static_cast<std::uint8_t>(c)) != 0; }
  constexpr CheckSet with(Check c) const { return CheckSet(bits_ | static_cast<std::uint8_t>(c)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  /// Comma-separated names in fixed order, e.g. "validity,parallel".
  std::string to_string() const;

  friend constexpr bool operator==(CheckSet, CheckSet) = default;

private:
  std::uint8_t bits_ = 0;
};

/// "validity,parallel,curvature31,curvature32" (any subset, any order).
/// Throws std::invalid_argument on unknown names or an empty list.
CheckSet parse_checks(std::string_view text);

/// "x1,x2,x3,x4". Throws std::invalid_argument.
Point4 parse_point(std::string_view text);

struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  std::size_t steps = 1;

  /// Grid coordinate k in 0..steps-1; steps == 1 gives min.
  double at(std::size_t k) const;
  friend bool operator==(const AxisRange&, const AxisRange&) = default;
};

/// "a1:b1:n1,a2:b2:n2,a3:b3:n3,a4:b4:n4". Throws std::invalid_argument
/// unless min <= max and steps >= 1 on every axis.
std::array<AxisRange, 4> parse_box(std::string_view text);

struct PointRecord {
  Point4 point;
  CirculantTriple triple;
  bool valid = false;
  std::string reason;
  // Absent when the check was not requested or the point is invalid.
  std::optional<bool> parallel;
  std::optional<double> nabla_q_max;
  std::optional<double> condition_max;
  std::optional<double> identity31;
  std::optional<double> identity31_scale;
  std::optional<double> identity32;
  std::optional<double> identity32_scale;
  bool passed = false;

  friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

struct Summary {
  std::size_t points = 0;
  std::size_t valid = 0;
  std::size_t parallel = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double max_nabla_q = 0.0;
  double max_condition = 0.0;
  double max_identity31 = 0.0;
  double max_identity32 = 0.0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
  std::string version{kVersion};
  std::string manifold;
  double tolerance = 0.0;
  CheckSet checks;
  std::vector<PointRecord> points;
  Summary summary;

  bool all_passed() const { return summary.failed == 0; }
  friend bool operator==(const Report&, const Report&) = default;
};

Summary summarize(const std::vector<PointRecord>& records);

/// Runs the requested checks at one point. The triple overload accepts a
/// precomputed A, B, C evaluation (as produced by the batched scan path).
PointRecord evaluate_point(const ManifoldSpec& m, const Point4& p, CheckSet checks, double tol);
PointRecord evaluate_point(const ManifoldSpec& m, const Point4& p, const CirculantTriple& triple,
                           CheckSet checks, double tol);

Report check_point(const ManifoldSpec& m, const Point4& p, CheckSet checks, double tol);

struct ScanConfig {
  std::array<AxisRange, 4> axes;
  CheckSet checks = CheckSet::all();
  double tolerance = 1e-8;
  /// 0 selects CIRCQ_THREADS, falling back to the hardware concurrency.
  unsigned threads = 0;
};

/// Evaluates the Cartesian grid; records are in row-major order with x4
/// varying fastest, independent of the number of worker threads.
Report scan(const ManifoldSpec& m, const ScanConfig& cfg);

/// Worker count from CIRCQ_THREADS (integer >= 1), default hardware
/// concurrency. Throws std::invalid_argument on a malformed value.
unsigned default_thread_count();

} // namespace circq
