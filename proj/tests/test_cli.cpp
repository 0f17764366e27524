#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli/cli.hpp"
#include "disclab/constructions.hpp"
#include "disclab/csv.hpp"
#include "disclab/json_io.hpp"

namespace fs = std::filesystem;
using disclab::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "disclab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = disclab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("disclab_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_matrix(const std::string& name, const disclab::IntMatrix& m) {
  const auto p = (scratch() / name).string();
  disclab::write_csv_file(m, p);
  return p;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("construct") {
  auto r = run({"construct", "--family", "haar", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,1,1,0\n1,-1,0,1\n1,1,-1,0\n1,-1,0,-1\n");
  r = run({"construct", "--family", "hadamard01", "--n", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("NotPowerOfTwo") != std::string::npos);
  r = run({"construct", "--family", "haar", "--k", "200"});
  CHECK(r.code == 3);
  r = run({"construct", "--family", "nope", "--k", "1"});
  CHECK(r.code == 2);
  r = run({"construct", "--family", "haar"});
  CHECK(r.code == 2);

  const auto out = (scratch() / "gap.csv").string();
  r = run({"construct", "--family", "gap", "--m", "200", "--n", "16", "--eps", "0.5", "--out", out});
  CHECK(r.code == 0);
  const auto m = disclab::read_csv_file(out);
  CHECK((m.rows() == 200 && m.cols() == 16));
  const auto side = Json::parse(slurp(out + ".json"));
  CHECK(side["branch"] == "small-m");
  CHECK(side["degenerate"] == false);
}

TEST_CASE("solve") {
  const auto h2 = write_matrix("h2.csv", disclab::haar(2));
  auto r = run({"solve", "disc", h2, "--norm", "inf"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["command"] == "solve");
  CHECK(j["result"]["value"] == "3");
  CHECK(j.contains("wall_time_ms"));
  CHECK(j["tool_version"] == DISCLAB_VERSION);

  const auto h1 = write_matrix("h1.csv", disclab::haar(1));
  r = run({"solve", "detlb", h1});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["result"]["value_float"].get<double>() == doctest::Approx(1.41421356).epsilon(1e-8));

  const auto pos = write_matrix("pos.csv", disclab::haar_pos(2));
  r = run({"solve", "tum", pos});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["result"]["tum"] == true);

  r = run({"solve", "vollb", h1});
  CHECK(r.code == 2);  // --seed is required
  r = run({"solve", "vollb", h1, "--seed", "1", "--samples", "1000", "--max-k", "1"});
  CHECK(r.code == 0);
  r = run({"solve", "disc", (scratch() / "missing.csv").string()});
  CHECK(r.code == 2);
  r = run({"solve", "disc", h2, "--norm", "p"});
  CHECK(r.code == 2);
  r = run({"solve", "disc", h2, "--norm", "p", "--p", "2"});
  CHECK(r.code == 0);
  r = run({"solve", "herdisc", h1});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["result"]["value"] == "2");
  r = run({"solve", "vcdim", pos});
  CHECK(r.code == 0);
}

TEST_CASE("config file raises limits") {
  const auto h2 = write_matrix("h2c.csv", disclab::haar(2));
  const auto cfg = (scratch() / "limits.conf").string();
  std::ofstream(cfg) << "det_budget = 3\n";
  ::setenv("DISCLAB_CONFIG", cfg.c_str(), 1);
  auto r = run({"solve", "detlb", h2});
  CHECK(r.code == 3);
  CHECK(Json::parse(r.out)["result"]["partial"] == true);
  std::ofstream(cfg) << "bogus = 1\n";
  r = run({"solve", "detlb", h2});
  CHECK(r.code == 2);
  ::unsetenv("DISCLAB_CONFIG");
}

TEST_CASE("verify") {
  auto a = run({"verify", "--suite", "paper-claims", "--max-k", "2", "--seed", "1"});
  auto b = run({"verify", "--suite", "paper-claims", "--max-k", "2", "--seed", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find(" 0 FAIL, 1 INFO") != std::string::npos);
  auto r = run({"verify", "--suite", "paper-claims", "--max-k", "1", "--seed", "1"});
  CHECK(r.code == 0);
  r = run({"verify", "--suite", "paper-claims", "--max-k", "4", "--seed", "1"});
  CHECK(r.code == 2);
  r = run({"verify", "--suite", "other", "--seed", "1"});
  CHECK(r.code == 2);
  r = run({"verify", "--suite", "paper-claims"});
  CHECK(r.code == 2);
}

TEST_CASE("experiment") {
  auto a = run({"experiment", "random-coloring", "--family", "haar-pm", "--k", "2", "--trials", "100", "--seed", "7"});
  auto b = run({"experiment", "random-coloring", "--family", "haar-pm", "--k", "2", "--trials", "100", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("m,n,d,mean,max,stddev,normalized_ratio\n8,4,2,", 0) == 0);

  auto r = run({"experiment", "ratio-scan", "--count", "10", "--rows", "3", "--cols", "3", "--seed", "2"});
  CHECK(r.code == 0);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 11);
  r = run({"experiment", "ratio-scan", "--rows", "20", "--seed", "2"});
  CHECK(r.code == 2);
  r = run({"experiment", "random-coloring", "--family", "haar", "--k", "1"});
  CHECK(r.code == 2);
}

TEST_CASE("binary runs") {
  const auto out = (scratch() / "bin_out.txt").string();
  const std::string cmd = std::string(DISCLAB_BIN) + " construct --family haar --k 1 > " + out;
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(slurp(out) == "1,1\n1,-1\n");
}
