// End-to-end checks of the command line tool: verdicts, exit codes, report
// shape, determinism.  The binary path arrives in STRATALAB_CLI and the
// scenario directory in STRATALAB_SCENARIOS (both set by ctest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

using Json = nlohmann::json;

std::string cli() {
  const char* p = std::getenv("STRATALAB_CLI");
  REQUIRE_MESSAGE(p != nullptr, "STRATALAB_CLI must point at the binary");
  return p;
}

std::string scenario(const std::string& name) {
  const char* dir = std::getenv("STRATALAB_SCENARIOS");
  REQUIRE_MESSAGE(dir != nullptr, "STRATALAB_SCENARIOS must point at the scenario directory");
  return std::string(dir) + "/" + name;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_raw(const std::string& full_cmd) {
  RunResult r;
  std::string cmd = full_cmd + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run_cli(const std::string& args) { return run_raw(cli() + " " + args); }

Json parse_report(const RunResult& r) {
  Json j = Json::parse(r.out);
  CHECK(j.at("tool") == "stratalab");
  CHECK(j.at("version") == "0.1.0");
  std::string digest = j.at("input_digest");
  CHECK(digest.substr(0, 6) == "fnv1a:");
  CHECK(digest.size() == 22);
  return j;
}

}  // namespace

TEST_CASE("version flag") {
  RunResult r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "stratalab 0.1.0\n");
}

TEST_CASE("blp-2lines example report") {
  RunResult r = run_cli("examples run blp-2lines --max-degree 10");
  CHECK(r.exit_code == 0);
  Json j = parse_report(r);
  CHECK(j.at("command") == "examples run");
  CHECK(j.at("total_h1") == 1);
  CHECK(j.at("verdict") == "pass");
  const Json& rows = j.at("table").at("rows");
  REQUIRE(rows.size() == 11);
  for (int d = 0; d <= 10; ++d) {
    CHECK(rows[d][0] == d);
    CHECK(rows[d][1] == (d < 2 ? 0 : d - 1));  // h0
    CHECK(rows[d][2] == (d == 0 ? 1 : 0));     // h1
  }
}

TEST_CASE("pn-blowup and atiyah and cone examples pass") {
  CHECK(run_cli("examples run pn-blowup").exit_code == 0);
  RunResult at = run_cli("examples run atiyah");
  CHECK(at.exit_code == 0);
  CHECK(parse_report(at).at("total_h1") == 0);
  CHECK(run_cli("examples run cone-rationality").exit_code == 0);

  RunResult bad = run_cli("examples run cone-rationality --boundary 2,0 --max-degree 4");
  CHECK(bad.exit_code == 1);
  Json j = parse_report(bad);
  CHECK(j.at("verdict") == "fail");
  REQUIRE(j.at("failures").size() == 1);
  CHECK(j.at("failures")[0].at("d") == 0);
  CHECK(j.at("failures")[0].at("i") == 1);
  CHECK(j.at("failures")[0].at("dim") == 1);
}

TEST_CASE("cech-verify on the two-coordinate scenario is all zero") {
  RunResult r = run_cli("cech-verify " + scenario("coords2.json"));
  CHECK(r.exit_code == 0);
  Json j = parse_report(r);
  CHECK(j.at("regular_sequence") == true);
  CHECK(j.at("verdict") == "pass");
  const Json& rows = j.at("cohomology").at("rows");
  REQUIRE(rows.size() == 7);
  for (const Json& row : rows)
    for (std::size_t i = 1; i < row.size(); ++i) CHECK(row[i] == 0);
}

TEST_CASE("regseq flags the non-regular pair") {
  RunResult r = run_cli("regseq " + scenario("nonregular.json") + " --max-degree 4");
  CHECK(r.exit_code == 1);
  Json j = parse_report(r);
  CHECK(j.at("verdict") == "not_regular");
  REQUIRE(j.at("witnesses").size() >= 1);
  CHECK(j.at("witnesses")[0].at("degree") == 3);
  CHECK(j.at("witnesses")[0].at("position") == -1);
  CHECK(j.at("witnesses")[0].at("dim") == 1);
}

TEST_CASE("koszul-verify and specseq pass on coordinate scenarios") {
  CHECK(run_cli("koszul-verify " + scenario("coords2.json") + " --max-degree 4").exit_code == 0);
  RunResult r = run_cli("specseq " + scenario("coords3.json") + " --max-degree 2");
  CHECK(r.exit_code == 0);
  Json j = parse_report(r);
  CHECK(j.at("verdict") == "pass");
  const Json& deg0 = j.at("degrees")[0];
  CHECK(deg0.at("e1_row") == Json::array({3, 3, 1}));
  CHECK(deg0.at("single_row") == true);
  CHECK(deg0.at("abutment_ok") == true);
}

TEST_CASE("specseq --pages dumps page entries") {
  RunResult r = run_cli("specseq " + scenario("coords2.json") + " --max-degree 1 --pages");
  CHECK(r.exit_code == 0);
  Json j = parse_report(r);
  const Json& pages = j.at("degrees")[0].at("pages");
  REQUIRE(pages.size() >= 2);
  CHECK(pages[0].at("r") == 0);
  for (const Json& e : pages[1].at("entries")) {
    CHECK(e.contains("p"));
    CHECK(e.contains("q"));
    CHECK(e.contains("dim"));
  }
}

TEST_CASE("dualcx emits cells and faces") {
  RunResult r = run_cli("dualcx " + scenario("atiyah_up.json"));
  CHECK(r.exit_code == 0);
  Json j = parse_report(r);
  CHECK(j.at("cells").at("0") == Json::array({"D0:0", "Dinf:0"}));
  CHECK(j.at("cells").at("1") == Json::array({"D0,Dinf:0"}));
  CHECK(j.at("faces").at("D0,Dinf:0") == Json::array({"Dinf:0", "D0:0"}));
  CHECK(j.at("cell_of_stratum").at("exc") == "D0,Dinf:0");
}

TEST_CASE("thrifty verdicts and exit codes") {
  RunResult pair = run_cli("thrifty " + scenario("blp2lines_up.json") + " " +
                           scenario("blp2lines_down.json") + " --map " +
                           scenario("blp2lines_map.json"));
  CHECK(pair.exit_code == 1);
  Json j = parse_report(pair);
  CHECK(j.at("verdict") == "not_thrifty");
  CHECK(j.at("witness").at("dim") == 1);
  CHECK(j.at("witness").at("cell") == "D1,D2:0");

  // Identity label map is the default.
  RunResult nomap = run_cli("thrifty " + scenario("blp2lines_up.json") + " " +
                            scenario("blp2lines_down.json"));
  CHECK(nomap.exit_code == 1);
  CHECK(parse_report(nomap).at("verdict") == "not_thrifty");

  RunResult self = run_cli("thrifty " + scenario("coords2.json") + " " + scenario("coords2.json"));
  CHECK(self.exit_code == 0);
  Json s = parse_report(self);
  CHECK(s.at("verdict") == "thrifty");
  CHECK(s.at("iso").at("Dx,Dy:0") == "Dx,Dy:0");

  RunResult atiyah = run_cli("thrifty " + scenario("atiyah_down.json") + " " +
                             scenario("atiyah_up.json") + " --map " + scenario("atiyah_map.json"));
  CHECK(atiyah.exit_code == 1);
  CHECK(parse_report(atiyah).at("verdict") == "not_thrifty");
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  std::string args = "cech-verify " + scenario("coords3.json") + " --max-degree 4";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.out == b.out);
  // popen goes through sh, so the env var can prefix the command line.
  RunResult c = run_raw("STRATA_LAB_THREADS=1 " + cli() + " " + args);
  CHECK(a.out == c.out);
}

TEST_CASE("text format renders the header and a table") {
  RunResult r = run_cli("examples run atiyah --format text --max-degree 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 16) == "tool: stratalab\n");
  CHECK(r.out.find("d  h0  h1") != std::string::npos);
  CHECK(r.out.find("verdict: pass") != std::string::npos);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run_cli("dualcx /nonexistent/scenario.json").exit_code == 2);
  CHECK(run_cli("bogus-command").exit_code == 2);
  CHECK(run_cli("examples run unknown-example").exit_code == 2);
  CHECK(run_cli("cech-verify").exit_code == 2);

  auto tmp = std::filesystem::temp_directory_path() / "stratalab_cli_bad.json";
  {
    std::ofstream f(tmp);
    f << "{\"variables\": [\"x\"]";
  }
  CHECK(run_cli("dualcx " + tmp.string()).exit_code == 2);
  std::filesystem::remove(tmp);

  // Valid JSON, invalid arrangement: x and 2*x are proportional.
  auto tmp2 = std::filesystem::temp_directory_path() / "stratalab_cli_prop.json";
  {
    std::ofstream f(tmp2);
    f << "{\"variables\": [\"x\", \"y\"], \"divisors\": [{\"label\": \"A\", \"poly\": \"x\"},"
         " {\"label\": \"B\", \"poly\": \"2*x\"}], \"strata_mode\": \"auto\", \"d_max\": 3}";
  }
  CHECK(run_cli("regseq " + tmp2.string()).exit_code == 2);
  std::filesystem::remove(tmp2);
}

TEST_CASE("output file option writes the report") {
  auto tmp = std::filesystem::temp_directory_path() / "stratalab_cli_out.json";
  RunResult r = run_cli("examples run pn-blowup -o " + tmp.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream f(tmp);
  REQUIRE(f.good());
  Json j = Json::parse(f);
  CHECK(j.at("verdict") == "pass");
  std::filesystem::remove(tmp);
}
