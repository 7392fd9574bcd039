#include "circq/manifolds.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "circq/errors.hpp"

namespace circq {

CirculantTriple ManifoldSpec::triple_at(const Point4& p) const { return {A.value(p), B.value(p), C.value(p)}; }

FieldJet jet_at(const ManifoldSpec& m, const Point4& p, bool with_hessian) {
  FieldJet jet;
  jet.value = m.triple_at(p);
  jet.grad = {m.A.gradient(p), m.B.gradient(p), m.C.gradient(p)};
  if (with_hessian) jet.hess = {m.A.hessian(p), m.B.hessian(p), m.C.hessian(p)};
  return jet;
}

ManifoldSpec example_manifold() {
  ManifoldSpec m;
  m.name = "example";
  m.A = parse_field("x1^2 + x2^2 + x3^2 + x4^2");
  m.B = parse_field("x1*x2 + x2*x3 + x1*x4 + x3*x4");
  m.C = parse_field("2*x1*x3 + 2*x2*x4");
  m.excluded = {
      {Vector4{{1.0, 1.0, 1.0, 1.0}}, "(x,x,x,x)"},
      {Vector4{{-1.0, 1.0, -1.0, 1.0}}, "(-x,x,-x,x)"},
  };
  return m;
}

std::optional<std::string> excluded_locus(const ManifoldSpec& m, const Point4& p) {
  const double scale = 1.0 + p.max_abs();
  for (const ExcludedLine& line : m.excluded) {
    double dd = 0.0;
    double pd = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      dd += line.direction[i] * line.direction[i];
      pd += p[i] * line.direction[i];
    }
    if (dd == 0.0) continue;
    const double x = pd / dd;
    double off = 0.0;
    for (std::size_t i = 0; i < 4; ++i) off = std::fmax(off, std::fabs(p[i] - x * line.direction[i]));
    if (off <= 1e-14 * scale) return line.label;
  }
  return std::nullopt;
}

Validity domain_valid(const ManifoldSpec& m, const Point4& p) { return domain_valid(m, p, m.triple_at(p)); }

Validity domain_valid(const ManifoldSpec& m, const Point4& p, const CirculantTriple& t) {
  if (auto locus = excluded_locus(m, p)) return {false, "excluded locus " + *locus};
  if (!(t.a > t.c)) return {false, "A > C violated"};
  if (!(t.c > t.b)) return {false, "C > B violated"};
  if (!(t.b > 0.0)) return {false, "B > 0 violated"};
  return {true, "ok"};
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

} // namespace

ManifoldSpec manifold_from_config(std::string_view text) {
  std::map<std::string, std::pair<std::string, std::size_t>> entries;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key != "name" && key != "A" && key != "B" && key != "C")
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (!entries.emplace(key, std::make_pair(value, line_no)).second)
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
  }

  ManifoldSpec m;
  m.name = entries.contains("name") ? entries["name"].first : "custom";
  ScalarField* slots[3] = {&m.A, &m.B, &m.C};
  const char* names[3] = {"A", "B", "C"};
  for (int n = 0; n < 3; ++n) {
    const auto it = entries.find(names[n]);
    if (it == entries.end()) throw ConfigError(std::string("missing field ") + names[n]);
    try {
      *slots[n] = parse_field(it->second.first);
    } catch (const ParseError& e) {
      throw ConfigError("field " + std::string(names[n]) + " (line " + std::to_string(it->second.second) +
                        "): " + e.detail() + " at position " + std::to_string(e.position()));
    }
  }
  return m;
}

ManifoldSpec load_manifold_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read manifold config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return manifold_from_config(buf.str());
}

} // namespace circq
