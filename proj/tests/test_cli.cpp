#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heis/json_io.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace heis;

namespace {

struct Run {
  int status;
  std::string out;
};

Run heisym(const std::string& args) {
  std::string cmd = std::string(HEISYM_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path golden(const std::string& name) {
  return std::filesystem::path(HEIS_TEST_DIR) / "golden" / name;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "heisym-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("golden outputs") {
  CHECK(heisym("solve --metric g1 --lambda 2 --symmetry killing").out ==
        slurp(golden("solve_g1_killing.json")));
  CHECK(heisym("solve --metric g1 --lambda 2 --symmetry killing --format text").out ==
        slurp(golden("solve_g1_killing.txt")));
  CHECK(heisym("causal --metric g1 --field X3").out == slurp(golden("causal_g1_X3.json")));
  CHECK(heisym("report --metric g2 --lambda 1").out == slurp(golden("report_g2.json")));
}

TEST_CASE("report values") {
  auto r = heisym("report --metric g2 --lambda 1");
  CHECK(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["tau"] == "1/2");
  CHECK(j["signature"] == Json::array({1, 1, -1}));
  auto g0 = Json::parse(heisym("report --metric g0 --lambda 2").out);
  CHECK(g0["gamma"][0][1][2] == "1");
  CHECK(heisym("report --metric g3").status == 0);
}

TEST_CASE("solve") {
  Json a = Json::parse(heisym("solve --metric g3 --symmetry affine --max-degree 6").out);
  CHECK(a["dimension"] == 12);
  CHECK(a["stabilized"] == true);
  CHECK(a["matched_paper_family"] == true);
  Json k = Json::parse(heisym("solve --metric g3 --symmetry killing").out);
  CHECK(k["dimension"] == 6);
  CHECK(k["matched_paper_family"].is_null());
  Json r = Json::parse(heisym("solve --metric g3 --symmetry ricci --max-degree 2").out);
  CHECK(r["degenerate"] == true);
  CHECK(r["dimension_by_degree"] == Json::array({3, 12, 30}));
  Json z = Json::parse(heisym("solve --metric g0 --max-degree 0").out);
  CHECK(z["degree"] == 0);
  CHECK(z["dimension"] == 1);
  Json m = Json::parse(heisym("solve --metric g2 --lambda -1/3 --symmetry matter").out);
  CHECK(m["dimension"] == 4);
  CHECK(m["matched_paper_family"] == true);
}

TEST_CASE("verify") {
  auto ok = heisym("verify --metric g1 --lambda 2 --symmetry ricci --field X1");
  CHECK(ok.status == 0);
  CHECK(Json::parse(ok.out)["verdict"] == "PASS");
  auto path = scratch("field.json");
  std::ofstream(path) << R"({"basis": "coord", "components": ["x", "0", "0"]})";
  auto bad = heisym("verify --metric g0 --field " + path.string());
  CHECK(bad.status == 1);
  CHECK(Json::parse(bad.out)["verdict"] == "FAIL");
  auto inline_ok = heisym(
      R"(verify --metric g0 --field '{"basis":"coord","components":["0","0","1"]}')");
  CHECK(inline_ok.status == 0);
}

TEST_CASE("algebra") {
  auto r = heisym("algebra --metric g3 --max-degree 6");
  CHECK(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["algebras"]["affine"]["dimension"] == 12);
  CHECK(j["algebras"]["affine"]["closed"] == true);
  CHECK(j["algebras"]["ricci"]["degenerate"] == true);
  CHECK(j["containment"]["contains"]["affine"]["killing"] == true);
  CHECK(j["containment"]["contains"]["killing"]["affine"] == false);
  Json one = Json::parse(heisym("algebra --metric g1 --symmetry killing").out);
  CHECK(one["algebras"].size() == 1);
  CHECK_FALSE(one.contains("containment"));
}

TEST_CASE("causal") {
  Json s = Json::parse(heisym("causal --metric g2 --lambda 2 --scan").out);
  CHECK(s["scan"]["total"] == 624);
  CHECK_FALSE(s["scan"]["counts"].contains("spacelike"));
  CHECK_FALSE(s["scan"]["counts"].contains("null"));
  CHECK(s["scan"]["evidence"] == "evidence on grid");
  auto grid = scratch("grid.json");
  std::ofstream(grid) << R"([[0, 0, 0], ["1/2", 1, -2]])";
  Json g = Json::parse(heisym("causal --metric g2 --field X4 --grid " + grid.string()).out);
  CHECK(g["grid_points"] == 2);
  CHECK(g["report"]["classification"] == "timelike");
}

TEST_CASE("output file and text format") {
  auto out = scratch("report.txt");
  std::filesystem::remove(out);
  auto r = heisym("report --metric g1 --format text --out " + out.string());
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::string text = slurp(out);
  CHECK(text.find("tau:") != std::string::npos);
  CHECK(text.find("metric:") != std::string::npos);
}

TEST_CASE("invalid configuration exits with status 2") {
  CHECK(heisym("solve --metric g4").status == 2);
  CHECK(heisym("solve --metric g3 --lambda 1").status == 2);
  CHECK(heisym("solve --metric g0 --lambda -1").status == 2);
  CHECK(heisym("solve --metric g1 --lambda 0").status == 2);
  CHECK(heisym("solve --metric g1 --lambda 1/0").status == 2);
  CHECK(heisym("solve --max-degree 13").status == 2);
  CHECK(heisym("solve --symmetry conformal").status == 2);
  CHECK(heisym("solve --format xml").status == 2);
  CHECK(heisym("verify --metric g1").status == 2);
  CHECK(heisym("verify --metric g1 --field /nonexistent.json").status == 2);
  CHECK(heisym("verify --metric g3 --field X1").status == 2);
  CHECK(heisym("causal --metric g0 --field X1").status == 2);
  CHECK(heisym("causal --metric g1").status == 2);
  CHECK(heisym("").status == 2);
  CHECK(heisym("frobnicate").status == 2);
}

TEST_CASE("deterministic output") {
  for (const char* args : {"report --metric g0 --lambda 1/2",
                           "solve --metric g2 --lambda 3 --symmetry affine",
                           "algebra --metric g1 --lambda 2"})
    CHECK(heisym(args).out == heisym(args).out);
}

TEST_CASE("reproduce reports the full audit") {
  auto r = heisym("reproduce --lambda 1");
  Json j = Json::parse(r.out);
  CHECK(j["criteria"].size() == kCriterionCount);
  CHECK(j["lambdas"] == Json::array({"1"}));
  CHECK(r.status == (j["status"] == "FAIL" ? 1 : 0));
  for (const auto& c : j["criteria"]) {
    CAPTURE(c["criterion"]);
    if (c["criterion"] == 12) CHECK(c["verdict"] == "EVIDENCE-ONLY");
    else if (c["criterion"] != 9 && c["criterion"] != 13) CHECK(c["verdict"] == "PASS");
  }
  CHECK(heisym("reproduce --max-degree 4").status == 2);
}
