#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CIRCQ_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

} // namespace

TEST_CASE("check subcommand") {
  const Run ok = run("check --manifold example --point 1,0.1,2,0.2");
  CHECK(ok.status == 0);
  const auto doc = nlohmann::json::parse(ok.out);
  const auto& rec = doc.at("points").at(0);
  CHECK(rec.at("valid") == true);
  CHECK(rec.at("parallel") == true);
  CHECK(rec.at("identity31").get<double>() <= 1e-8 * rec.at("identity31_scale").get<double>());

  const Run excluded = run("check --manifold example --point 1,1,1,1");
  CHECK(excluded.status == 1);
  const auto ex = nlohmann::json::parse(excluded.out);
  CHECK(ex.at("points").at(0).at("valid") == false);
  CHECK(ex.at("points").at(0).at("parallel").is_null());

  CHECK(run("check --point 1,2").status == 2);
  CHECK(run("check --point 1,0.1,2,0.2 --tol -1").status == 2);
  CHECK(run("check --point 1,0.1,2,0.2 --format xml").status == 2);
  CHECK(run("check").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("check --manifold no-such-manifold --point 1,0.1,2,0.2").status == 3);

  const auto broken = write_temp("circq_broken.cfg", "A = x1^\nB = 1\nC = 2\n");
  CHECK(run("check --manifold " + broken.string() + " --point 1,0.1,2,0.2").status == 4);
  const auto missing = write_temp("circq_missing.cfg", "A = 3\nB = 1\n");
  CHECK(run("check --manifold " + missing.string() + " --point 1,0.1,2,0.2").status == 4);
}

TEST_CASE("config manifolds and csv output") {
  const auto flat = write_temp("circq_flat.cfg", "name = flat\nA = 3\nB = 1\nC = 2\n");
  const Run r = run("check --manifold " + flat.string() + " --point 0.3,1,-2,4 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("x1,x2,x3,x4,", 0) == 0);
}

TEST_CASE("scan subcommand") {
  const std::string box = "--box 0.5:1.5:2,0.5:1.5:2,0.5:1.5:2,0.5:1.5:2";
  const Run first = run("scan --manifold example " + box);
  const Run second = run("scan --manifold example " + box);
  CHECK(first.out == second.out);
  CHECK(first.status == second.status);
  const auto doc = nlohmann::json::parse(first.out);
  CHECK(doc.at("points").size() == 16);
  CHECK(doc.at("summary").at("points") == 16);

  const auto out = std::filesystem::temp_directory_path() / "circq_scan.csv";
  const Run csv = run("scan --manifold example " + box + " --checks parallel --format csv --out " + out.string());
  CHECK(csv.out.empty());
  std::ifstream in(out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 17);

  CHECK(run("scan --manifold example --box 0:1:2,0:1:2").status == 2);
  CHECK(run("scan --manifold example --box 1:0:2,0:1:2,0:1:2,0:1:2").status == 2);
  CHECK(run("scan --manifold example " + box + " --checks bogus").status == 2);
}
