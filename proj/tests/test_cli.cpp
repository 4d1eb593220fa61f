#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gpiverify/cli.hpp"
#include "gpiverify/report.hpp"

using namespace gpiv;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  nlohmann::json report() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("gpiv_cli_" + name); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("report shape") {
  const Result r = run({"params", "show", "--m2", "2", "--m3", "3"});
  REQUIRE(r.code == cli::kExitPass);
  const auto j = r.report();
  CHECK(j["schema"] == 1);
  CHECK(j["tool"]["name"] == "gpiverify");
  CHECK(j["run"]["command"] == "params show");
  CHECK(j["run"]["m2"] == 2);
  CHECK(j["run"]["width"] == "1/1000000");
  CHECK_FALSE(j["run"].contains("jobs"));
  CHECK(j["timing"]["recorded"] == false);
  CHECK(j["summary"]["pass"] == 1);
  const auto& d = j["checks"][0]["details"];
  CHECK(d["r"] == "36");
  CHECK(d["t"] == "24/899");
  CHECK(d["H_at_one"] == "12/37");
  CHECK(d["in_S"] == true);
}

TEST_CASE("sos verify --all") {
  const Result r = run({"sos", "verify", "--all"});
  CHECK(r.code == cli::kExitPass);
  const auto j = r.report();
  CHECK(j["checks"].size() == 7);
  for (const auto& c : j["checks"]) CHECK(c["status"] == "verified");
  CHECK(j["summary"]["pass"] == 7);
}

TEST_CASE("violation witness for (1,1)") {
  const Result r = run({"check", "mri", "--m2", "1", "--m3", "1", "--find-violation"});
  CHECK(r.code == cli::kExitPass);
  const auto j = r.report();
  CHECK(j["checks"][0]["status"] == "verified");
  CHECK(j["checks"][0]["details"]["violations"].back() == "1");
  CHECK_FALSE(j["checks"][0]["witnesses"].empty());
}

TEST_CASE("expand g --compare-appendix") {
  const Result r = run({"expand", "g", "--compare-appendix"});
  CHECK(r.code == cli::kExitPass);
  const auto d = r.report()["checks"][0]["details"];
  CHECK(d["appendix_over_g"] == "1/960751264112640000");
  CHECK(d.contains("min_coefficient"));
}

TEST_CASE("other commands") {
  CHECK(run({"expand", "h", "--m2", "3"}).code == cli::kExitPass);
  CHECK(run({"expand", "s", "--m2", "2", "--m3", "3"}).code == cli::kExitPass);
  CHECK(run({"check", "gpi", "--m2", "1", "--m3", "1", "--a", "-1", "--x", "1/2"}).report()["checks"][0]["margin"] == "1/2");
  const Result grid = run({"check", "gpi", "--m2", "2", "--m3", "3"});
  CHECK(grid.code == cli::kExitPass);
  CHECK(grid.report()["checks"].size() == 7 * 21);
  CHECK(run({"check", "hfri", "--m2", "1", "--m3", "5", "--z", "1/2"}).code == cli::kExitPass);
  CHECK(run({"check", "gpi-real", "--y2", "13", "--y3", "13", "--a", "-1", "--x", "0.5"}).code == cli::kExitPass);
  CHECK(run({"check", "mri-real", "--y2", "4", "--y3", "4.3", "--find-violation", "--grid", "100"}).code == cli::kExitPass);
  CHECK(run({"scan", "hfri", "--m2", "2", "--m3", "3"}).code == cli::kExitPass);
  const Result oracle = run({"oracle", "compare", "--m2", "3", "--m3", "3"});
  CHECK(oracle.code == cli::kExitPass);
  CHECK(oracle.report()["checks"][0]["details"]["comparisons"] == 4 * 4 * 25 * 2);
}

TEST_CASE("exit code contract") {
  // fail
  const auto out = temp_file("fail.json");
  Result r = run({"check", "mri", "--m2", "1", "--m3", "1", "--x", "1", "--out", out.string()});
  CHECK(r.code == cli::kExitFail);
  CHECK(nlohmann::json::parse(slurp(out))["summary"]["fail"] == 1);
  fs::remove(out);
  // indeterminate: G_{1,1} changes sign near z = 0.16282173273182088193, so
  // points within 1e-18 of the root cannot be decided without refinement.
  const auto ind = temp_file("indet.json");
  r = run({"scan", "g_negative", "--m2", "1", "--m3", "1", "--grid", "2", "--z-lo", "0.162821732731820881",
           "--z-hi", "0.162821732731820882", "--refine-max", "0", "--out", ind.string()});
  CHECK(r.code == cli::kExitIndeterminate);
  CHECK(nlohmann::json::parse(slurp(ind))["summary"]["indeterminate"] == 1);
  fs::remove(ind);
  // usage
  r = run({"check", "bogus"});
  CHECK(r.code == cli::kExitUsage);
  CHECK_FALSE(r.err.empty());
  CHECK(r.out.empty());
  CHECK(run({"params", "show", "--m2", "0"}).code == cli::kExitUsage);
  CHECK(run({"check", "gpi", "--x", "2"}).code == cli::kExitUsage);
  CHECK(run({"check", "gpi", "--x", "one"}).code == cli::kExitUsage);
  CHECK(run({"scan", "nonsense"}).code == cli::kExitUsage);
  CHECK(run({"scan"}).code == cli::kExitUsage);
  CHECK(run({"check", "hfri", "--m2", "1", "--m3", "1", "--z", "1"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  // I/O
  CHECK(run({"sos", "verify", "--all", "--data-dir", "/nonexistent/gpiv"}).code == cli::kExitIo);
  CHECK(run({"params", "show", "--out", "/nonexistent/dir/report.json"}).code == cli::kExitIo);
  CHECK(run({"params", "show", "--config", "/nonexistent/config.json"}).code == cli::kExitIo);
}

TEST_CASE("summary helpers") {
  const Summary empty = summarize({});
  CHECK(empty.pass == 0);
  CHECK(empty.fail == 0);
  CHECK(empty.indeterminate == 0);
  CHECK(exit_code_for(empty) == cli::kExitPass);
  CheckReport bad;
  bad.status = Status::fails;
  const Summary one = summarize({bad});
  CHECK(one.fail == 1);
  CHECK(exit_code_for(one) == cli::kExitFail);
}

TEST_CASE("config file with command-line overrides") {
  const auto cfg = temp_file("config.json");
  {
    std::ofstream f(cfg);
    f << R"({"m2": 2, "m3": 5, "a": "3/2", "x": "-3/4"})";
  }
  Result r = run({"check", "gpi", "--config", cfg.string()});
  CHECK(r.code == cli::kExitPass);
  auto j = r.report();
  CHECK(j["run"]["m2"] == 2);
  CHECK(j["run"]["m3"] == 5);
  CHECK(j["checks"].size() == 1);
  r = run({"check", "gpi", "--config", cfg.string(), "--m3", "3"});
  CHECK(r.report()["run"]["m3"] == 3);
  {
    std::ofstream f(cfg);
    f << "{not json";
  }
  CHECK(run({"check", "gpi", "--config", cfg.string()}).code == cli::kExitUsage);
  fs::remove(cfg);
}

TEST_CASE("exact reports are byte-identical across runs and worker counts") {
  const Result a = run({"scan", "g_negative", "--m2", "8", "--m3", "8", "--grid", "31", "--jobs", "1"});
  const Result b = run({"scan", "g_negative", "--m2", "8", "--m3", "8", "--grid", "31", "--jobs", "4"});
  const Result c = run({"scan", "g_negative", "--m2", "8", "--m3", "8", "--grid", "31", "--jobs", "4"});
  CHECK(a.code == cli::kExitPass);
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
  const Result s1 = run({"sos", "verify", "--all", "--jobs", "1"});
  const Result s2 = run({"sos", "verify", "--all", "--jobs", "7"});
  CHECK(s1.out == s2.out);
}

TEST_CASE("timing is recorded only on request") {
  const Result r = run({"params", "show", "--timing"});
  const auto j = r.report();
  CHECK(j["timing"]["recorded"] == true);
  CHECK(j["timing"].contains("seconds"));
}

TEST_CASE("help and version") {
  const Result h = run({"--help"});
  CHECK(h.code == cli::kExitPass);
  CHECK(h.out.find("scan") != std::string::npos);
  CHECK(run({"--version"}).out == "1.0.0\n");
}
