#include "circq/scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "circq/connection.hpp"
#include "circq/curvature.hpp"
#include "circq/errors.hpp"
#include "circq/kernels.hpp"

namespace circq {
namespace {

constexpr std::pair<Check, std::string_view> kCheckNames[] = {
    {Check::validity, "validity"},
    {Check::parallel, "parallel"},
    {Check::curvature31, "curvature31"},
    {Check::curvature32, "curvature32"},
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  for (;;) {
    const auto at = s.find(sep, begin);
    parts.push_back(s.substr(begin, at == std::string_view::npos ? std::string_view::npos : at - begin));
    if (at == std::string_view::npos) return parts;
    begin = at + 1;
  }
}

double parse_real(std::string_view text, std::string_view what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(v))
    throw std::invalid_argument("malformed " + std::string(what) + " '" + std::string(text) + "'");
  return v;
}

} // namespace

std::string CheckSet::to_string() const {
  std::string out;
  for (const auto& [check, name] : kCheckNames) {
    if (!has(check)) continue;
    if (!out.empty()) out += ',';
    out += name;
  }
  return out;
}

CheckSet parse_checks(std::string_view text) {
  CheckSet set;
  for (std::string_view part : split(text, ',')) {
    part = trim(part);
    const auto it = std::find_if(std::begin(kCheckNames), std::end(kCheckNames),
                                 [&](const auto& entry) { return entry.second == part; });
    if (it == std::end(kCheckNames)) throw std::invalid_argument("unknown check '" + std::string(part) + "'");
    set = set.with(it->first);
  }
  if (set.empty()) throw std::invalid_argument("empty check list");
  return set;
}

Point4 parse_point(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4)
    throw std::invalid_argument("point needs exactly 4 comma-separated coordinates, got " +
                                std::to_string(parts.size()));
  Point4 p;
  for (std::size_t i = 0; i < 4; ++i) p[i] = parse_real(parts[i], "coordinate");
  return p;
}

double AxisRange::at(std::size_t k) const {
  if (steps <= 1 || k == 0) return min;
  if (k + 1 == steps) return max;
  return min + (max - min) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

std::array<AxisRange, 4> parse_box(std::string_view text) {
  const auto axes = split(text, ',');
  if (axes.size() != 4) throw std::invalid_argument("box needs 4 comma-separated axes 'min:max:steps'");
  std::array<AxisRange, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto fields = split(axes[i], ':');
    if (fields.size() != 3) throw std::invalid_argument("axis " + std::to_string(i + 1) + " must be 'min:max:steps'");
    AxisRange& r = out[i];
    r.min = parse_real(fields[0], "axis bound");
    r.max = parse_real(fields[1], "axis bound");
    const std::string_view steps = trim(fields[2]);
    const auto res = std::from_chars(steps.data(), steps.data() + steps.size(), r.steps);
    if (steps.empty() || res.ec != std::errc{} || res.ptr != steps.data() + steps.size() || r.steps < 1)
      throw std::invalid_argument("axis " + std::to_string(i + 1) + ": steps must be an integer >= 1");
    if (!(r.min <= r.max)) throw std::invalid_argument("axis " + std::to_string(i + 1) + ": min exceeds max");
  }
  return out;
}

Summary summarize(const std::vector<PointRecord>& records) {
  Summary s;
  s.points = records.size();
  for (const PointRecord& r : records) {
    if (r.valid) ++s.valid;
    if (r.parallel.value_or(false)) ++s.parallel;
    if (r.passed) ++s.passed;
    if (r.nabla_q_max) s.max_nabla_q = std::fmax(s.max_nabla_q, *r.nabla_q_max);
    if (r.condition_max) s.max_condition = std::fmax(s.max_condition, *r.condition_max);
    if (r.identity31) s.max_identity31 = std::fmax(s.max_identity31, *r.identity31);
    if (r.identity32) s.max_identity32 = std::fmax(s.max_identity32, *r.identity32);
  }
  s.failed = s.points - s.passed;
  return s;
}

PointRecord evaluate_point(const ManifoldSpec& m, const Point4& p, const CirculantTriple& triple, CheckSet checks,
                           double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  PointRecord rec;
  rec.point = p;
  rec.triple = triple;
  const Validity v = domain_valid(m, p, triple);
  rec.valid = v.valid;
  rec.reason = v.reason;
  if (rec.valid && is_degenerate(triple)) {
    rec.valid = false;
    rec.reason = "singular metric";
  }
  if (!rec.valid) {
    rec.passed = !checks.has(Check::validity);
    return rec;
  }

  bool passed = true;
  if (checks.has(Check::parallel)) {
    const ParallelismVerdict verdict = parallelism_verdict(m, p, tol);
    rec.parallel = verdict.parallel;
    rec.nabla_q_max = verdict.nabla_q_max;
    rec.condition_max = verdict.conditions.max_residual();
    passed = passed && verdict.parallel;
  }
  if (checks.has(Check::curvature31) || checks.has(Check::curvature32)) {
    const RiemannArray13 r13 = riemann(m, p);
    if (checks.has(Check::curvature31)) {
      const RiemannArray04 r04 = lower_index(r13, triple);
      rec.identity31 = identity_31_basis_residual(r04);
      rec.identity31_scale = 1.0 + r04.max_abs();
      passed = passed && *rec.identity31 <= tol * *rec.identity31_scale;
    }
    if (checks.has(Check::curvature32)) {
      rec.identity32 = identity_32_residual(r13);
      rec.identity32_scale = 1.0 + r13.max_abs();
      passed = passed && *rec.identity32 <= tol * *rec.identity32_scale;
    }
  }
  rec.passed = passed;
  return rec;
}

PointRecord evaluate_point(const ManifoldSpec& m, const Point4& p, CheckSet checks, double tol) {
  return evaluate_point(m, p, m.triple_at(p), checks, tol);
}

Report check_point(const ManifoldSpec& m, const Point4& p, CheckSet checks, double tol) {
  Report r;
  r.manifold = m.name;
  r.tolerance = tol;
  r.checks = checks;
  r.points.push_back(evaluate_point(m, p, checks, tol));
  r.summary = summarize(r.points);
  return r;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("CIRCQ_THREADS"); env != nullptr && *env != '\0') {
    const std::string_view text(env);
    unsigned n = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), n);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || n < 1)
      throw std::invalid_argument("CIRCQ_THREADS must be an integer >= 1");
    return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Report scan(const ManifoldSpec& m, const ScanConfig& cfg) {
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  std::size_t total = 1;
  for (const AxisRange& axis : cfg.axes) {
    if (axis.steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (!(axis.min <= axis.max)) throw std::invalid_argument("axis min exceeds max");
    total *= axis.steps;
  }

  Report report;
  report.manifold = m.name;
  report.tolerance = cfg.tolerance;
  report.checks = cfg.checks;
  report.points.resize(total);

  auto point_at = [&](std::size_t flat) {
    Point4 p;
    for (std::size_t axis = 4; axis-- > 0;) {
      const std::size_t n = cfg.axes[axis].steps;
      p[axis] = cfg.axes[axis].at(flat % n);
      flat /= n;
    }
    return p;
  };

  constexpr std::size_t kChunk = 64;
  const std::size_t chunks = (total + kChunk - 1) / kChunk;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    std::array<std::vector<double>, 4> xs;
    std::array<std::vector<double>, 3> values;
    for (;;) {
      const std::size_t chunk = next.fetch_add(1);
      if (chunk >= chunks) return;
      const std::size_t begin = chunk * kChunk;
      const std::size_t count = std::min(kChunk, total - begin);
      try {
        for (auto& x : xs) x.resize(count);
        for (auto& v : values) v.resize(count);
        for (std::size_t n = 0; n < count; ++n) {
          const Point4 p = point_at(begin + n);
          for (std::size_t axis = 0; axis < 4; ++axis) xs[axis][n] = p[axis];
        }
        const std::array<const double*, 4> coords{xs[0].data(), xs[1].data(), xs[2].data(), xs[3].data()};
        const kernels::Table& k = kernels::active();
        k.poly_eval(m.A.polynomial().terms(), coords, values[0].data(), count);
        k.poly_eval(m.B.polynomial().terms(), coords, values[1].data(), count);
        k.poly_eval(m.C.polynomial().terms(), coords, values[2].data(), count);
        for (std::size_t n = 0; n < count; ++n) {
          const Point4 p{{xs[0][n], xs[1][n], xs[2][n], xs[3][n]}};
          const CirculantTriple t{values[0][n], values[1][n], values[2][n]};
          report.points[begin + n] = evaluate_point(m, p, t, cfg.checks, cfg.tolerance);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };

  const unsigned requested = cfg.threads != 0 ? cfg.threads : default_thread_count();
  const std::size_t workers = std::min<std::size_t>(requested, std::max<std::size_t>(chunks, 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t n = 0; n < workers; ++n) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  report.summary = summarize(report.points);
  return report;
}

} // namespace circq
