#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/stat.h>
#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// run the tool with the given arguments, capturing stdout (stderr dropped)
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SUPERDIM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// weights contain '|', which the shell would read as a pipe
std::string q(const std::string& s) { return "'" + s + "'"; }

std::string temp_path(const std::string& name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("sdim prints the closed-form value") {
  auto r = run_cli("sdim " + q("1,0,0,0|1"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "8\n");
  CHECK(run_cli("sdim " + q("1,0,0|0")).out == "2\n");
  CHECK(run_cli("sdim " + q("1,0|0")).out == "1\n");
  CHECK(run_cli("sdim " + q("0,0,0|0")).out == "1\n");
  CHECK(run_cli("sdim " + q(" 1 , 0 | 0 ")).out == "1\n");
}

TEST_CASE("analyze emits the full json report") {
  auto r = run_cli("analyze " + q("1,0|0,1") + " --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["weight"] == "1,0|0,1");
  CHECK(j["m"] == 2);
  CHECK(j["n"] == 2);
  CHECK(j["rho_shifted"]["a"] == json::array({3, 1}));
  CHECK(j["rho_shifted"]["b"] == json::array({1, 3}));
  CHECK(j["diagram"]["lo"] == 1);
  CHECK(j["diagram"]["hi"] == 3);
  CHECK(j["diagram"]["symbols"] == "xox");
  REQUIRE(j["gamma"].size() == 2);
  CHECK(j["gamma"][0]["i"] == 2);
  CHECK(j["gamma"][0]["j"] == 1);
  CHECK(j["gamma"][0]["value"] == 1);
  CHECK(j["gamma"][1]["i"] == 1);
  CHECK(j["gamma"][1]["j"] == 2);
  CHECK(j["atypicality"] == 2);
  CHECK(j["maximal"] == true);
  CHECK(j["s_lambda"] == "2");
  CHECK(j["m_lambda_positive"].empty());
  CHECK(j["glambda_dim"] == "1");
  CHECK(j["sdim_abs"] == "2");
}

TEST_CASE("analyze reports non-maximal weights") {
  auto r = run_cli("analyze " + q("1,0,0|0,1") + " --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["atypicality"] == 1);
  CHECK(j["maximal"] == false);
  CHECK(j["sdim_abs"] == "0");
}

TEST_CASE("analyze text output names the key quantities") {
  auto r = run_cli("analyze " + q("0,0,0|0"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("atypicality 1 (maximal)") != std::string::npos);
  CHECK(r.out.find("s_lambda    1") != std::string::npos);
  CHECK(r.out.find("|sdim|      1") != std::string::npos);
}

TEST_CASE("analyze and sdim agree") {
  for (std::string w : {"2,1|1", "3,0,0|2", "1,1|1,1"}) {
    json j = json::parse(run_cli("analyze " + q(w) + " --format json").out);
    auto direct = run_cli("sdim " + q(w));
    CHECK(j["sdim_abs"].get<std::string>() + "\n" == direct.out);
  }
}

TEST_CASE("exit codes distinguish parse errors from invalid weights") {
  CHECK(run_cli("sdim " + q("1,0")).exit_code == 2);    // no bar
  CHECK(run_cli("sdim " + q("1,x|0")).exit_code == 2);  // not an integer
  CHECK(run_cli("sdim " + q("|1")).exit_code == 2);     // empty left side
  CHECK(run_cli("sdim " + q("0,1|0")).exit_code == 3);  // not dominant
  CHECK(run_cli("sdim " + q("1|2,3")).exit_code == 3);  // m < n unsupported
  CHECK(run_cli("analyze " + q("0,1|0")).exit_code == 3);
  CHECK(run_cli("nonsense").exit_code == 2);            // unknown command
  CHECK(run_cli("sdim").exit_code == 2);                // missing argument
}

TEST_CASE("batch processes a file line by line") {
  std::string path = temp_path("superdim_batch_ok.txt");
  {
    std::ofstream f(path);
    f << "# the five reference cases\n"
      << "0,0,0|0\n"
      << "1,0,0|0\n"
      << "\n"
      << "1,0,0,0|1   # adjoint family\n"
      << "1,0|0,1\n"
      << "1,0,0|0,1\n";
  }
  auto r = run_cli("batch --file " + path);
  REQUIRE(r.exit_code == 0);
  std::vector<json> recs;
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty()) recs.push_back(json::parse(line));
  REQUIRE(recs.size() == 5);
  CHECK(recs[0]["weight"] == "0,0,0|0");
  CHECK(recs[0]["sdim"] == "1");
  CHECK(recs[1]["sdim"] == "2");
  CHECK(recs[2]["sdim"] == "8");
  CHECK(recs[3]["sdim"] == "2");
  CHECK(recs[3]["s_lambda"] == "2");
  CHECK(recs[4]["sdim"] == "0");
  CHECK(recs[4]["maximal"] == false);
  std::remove(path.c_str());
}

TEST_CASE("batch keeps going past malformed lines and flags them in the exit code") {
  std::string path = temp_path("superdim_batch_bad.txt");
  {
    std::ofstream f(path);
    f << "0,0|0\nthis is not a weight\n1,0,0|0\n";
  }
  auto r = run_cli("batch --file " + path);
  CHECK(r.exit_code == 4);
  std::vector<std::string> lines;
  std::istringstream is(r.out);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) lines.push_back(line);
  REQUIRE(lines.size() == 2);
  CHECK(json::parse(lines[0])["sdim"] == "1");
  CHECK(json::parse(lines[1])["sdim"] == "2");
  std::remove(path.c_str());
}

TEST_CASE("batch understands tsv output") {
  std::string path = temp_path("superdim_batch_tsv.txt");
  {
    std::ofstream f(path);
    f << "1,0|0,1\n";
  }
  auto r = run_cli("batch --file " + path + " --format tsv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1,0|0,1\t2\ttrue\t2\t2\n");
  std::remove(path.c_str());
}

TEST_CASE("a missing batch file is a usage error") {
  CHECK(run_cli("batch --file /nonexistent/nowhere.txt").exit_code == 2);
}

TEST_CASE("empty batch file produces no output and exit 0") {
  std::string path = temp_path("superdim_batch_empty.txt");
  { std::ofstream f(path); }
  auto r = run_cli("batch --file " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::remove(path.c_str());
}

TEST_CASE("the composition identity command reports its sum") {
  auto r = run_cli("lemma2 --r 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n");
  CHECK(run_cli("lemma2 --r 0").exit_code == 2);
}

TEST_CASE("verify runs the identity sweep") {
  auto r = run_cli("verify --suite lemma2 --max-r 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("suite lemma2: 4/4 passed") != std::string::npos);
}

TEST_CASE("verify runs the closed-form families") {
  auto r = run_cli("verify --suite formula --max-m 4");
  CHECK(r.exit_code == 0);
  // 4 + 3 + 2 + 1 shapes, three families each
  CHECK(r.out.find("suite formula: 30/30 passed") != std::string::npos);
}

TEST_CASE("verify cross-checks the engine against the formula") {
  auto r = run_cli("verify --suite engine --shapes 1x1 --entry-bound 1");
  CHECK(r.exit_code == 0);
  // dominant weights with entries in [-1,1]: 3 x 3 grid
  CHECK(r.out.find("suite engine: 9/9 passed") != std::string::npos);
}

TEST_CASE("verify cross-checks tableaux on a small hook family") {
  auto r = run_cli("verify --suite tableaux --shapes 1x1 --max-cells 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("suite tableaux:") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify dump writes one character file per engine case") {
  std::string dir = temp_path("superdim_dump");
  mkdir(dir.c_str(), 0755);
  auto r = run_cli("verify --suite engine --shapes 1x1 --entry-bound 0 --dump " + dir);
  CHECK(r.exit_code == 0);
  std::ifstream f(dir + "/sch_0_0.json");
  REQUIRE(f.good());
  json j = json::parse(f);
  REQUIRE(j.is_array());
  CHECK(j[0].contains("weight"));
  CHECK(j[0].contains("coeff"));
}

TEST_CASE("oversized shapes are refused by the guard") {
  auto r = run_cli("verify --suite engine --shapes 8x8 --entry-bound 0");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("guard") != std::string::npos);
}
