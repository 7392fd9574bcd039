#include "circq/report.hpp"

#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace circq {
namespace {

using json = nlohmann::ordered_json;

template <class T>
json optional_value(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> read_optional(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

std::string number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <class T>
std::string optional_cell(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_same_v<T, bool>)
    return *v ? "true" : "false";
  else
    return number(*v);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

} // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

std::string to_json(const Report& report) {
  json doc;
  doc["meta"] = {
      {"version", report.version},
      {"manifold", report.manifold},
      {"tolerance", report.tolerance},
      {"checks", report.checks.to_string()},
  };
  json points = json::array();
  for (const PointRecord& r : report.points) {
    points.push_back({
        {"point", {r.point[0], r.point[1], r.point[2], r.point[3]}},
        {"triple", {r.triple.a, r.triple.b, r.triple.c}},
        {"valid", r.valid},
        {"reason", r.reason},
        {"parallel", optional_value(r.parallel)},
        {"nabla_q_max", optional_value(r.nabla_q_max)},
        {"condition_max", optional_value(r.condition_max)},
        {"identity31", optional_value(r.identity31)},
        {"identity31_scale", optional_value(r.identity31_scale)},
        {"identity32", optional_value(r.identity32)},
        {"identity32_scale", optional_value(r.identity32_scale)},
        {"passed", r.passed},
    });
  }
  doc["points"] = std::move(points);
  const Summary& s = report.summary;
  doc["summary"] = {
      {"points", s.points},
      {"valid", s.valid},
      {"parallel", s.parallel},
      {"passed", s.passed},
      {"failed", s.failed},
      {"max_nabla_q", s.max_nabla_q},
      {"max_condition", s.max_condition},
      {"max_identity31", s.max_identity31},
      {"max_identity32", s.max_identity32},
  };
  return doc.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  const json doc = json::parse(text);
  Report r;
  const json& meta = doc.at("meta");
  r.version = meta.at("version").get<std::string>();
  r.manifold = meta.at("manifold").get<std::string>();
  r.tolerance = meta.at("tolerance").get<double>();
  const std::string checks = meta.at("checks").get<std::string>();
  r.checks = checks.empty() ? CheckSet{} : parse_checks(checks);
  for (const json& p : doc.at("points")) {
    PointRecord rec;
    const json& pt = p.at("point");
    for (std::size_t i = 0; i < 4; ++i) rec.point[i] = pt.at(i).get<double>();
    const json& tr = p.at("triple");
    rec.triple = {tr.at(0).get<double>(), tr.at(1).get<double>(), tr.at(2).get<double>()};
    rec.valid = p.at("valid").get<bool>();
    rec.reason = p.at("reason").get<std::string>();
    rec.parallel = read_optional<bool>(p, "parallel");
    rec.nabla_q_max = read_optional<double>(p, "nabla_q_max");
    rec.condition_max = read_optional<double>(p, "condition_max");
    rec.identity31 = read_optional<double>(p, "identity31");
    rec.identity31_scale = read_optional<double>(p, "identity31_scale");
    rec.identity32 = read_optional<double>(p, "identity32");
    rec.identity32_scale = read_optional<double>(p, "identity32_scale");
    rec.passed = p.at("passed").get<bool>();
    r.points.push_back(std::move(rec));
  }
  const json& s = doc.at("summary");
  r.summary.points = s.at("points").get<std::size_t>();
  r.summary.valid = s.at("valid").get<std::size_t>();
  r.summary.parallel = s.at("parallel").get<std::size_t>();
  r.summary.passed = s.at("passed").get<std::size_t>();
  r.summary.failed = s.at("failed").get<std::size_t>();
  r.summary.max_nabla_q = s.at("max_nabla_q").get<double>();
  r.summary.max_condition = s.at("max_condition").get<double>();
  r.summary.max_identity31 = s.at("max_identity31").get<double>();
  r.summary.max_identity32 = s.at("max_identity32").get<double>();
  return r;
}

std::string to_csv(const Report& report) {
  std::string out =
      "x1,x2,x3,x4,A,B,C,valid,reason,parallel,nabla_q_max,condition_max,identity31,identity31_scale,"
      "identity32,identity32_scale,passed\n";
  for (const PointRecord& r : report.points) {
    std::string row;
    for (std::size_t i = 0; i < 4; ++i) row += number(r.point[i]) + ",";
    row += number(r.triple.a) + "," + number(r.triple.b) + "," + number(r.triple.c) + ",";
    row += std::string(r.valid ? "true" : "false") + ",";
    row += csv_quote(r.reason) + ",";
    row += optional_cell(r.parallel) + ",";
    row += optional_cell(r.nabla_q_max) + ",";
    row += optional_cell(r.condition_max) + ",";
    row += optional_cell(r.identity31) + ",";
    row += optional_cell(r.identity31_scale) + ",";
    row += optional_cell(r.identity32) + ",";
    row += optional_cell(r.identity32_scale) + ",";
    row += r.passed ? "true" : "false";
    out += row + "\n";
  }
  return out;
}

std::string serialize(const Report& report, ReportFormat format) {
  return format == ReportFormat::json ? to_json(report) : to_csv(report);
}

} // namespace circq
