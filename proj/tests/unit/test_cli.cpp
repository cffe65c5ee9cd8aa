#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <sys/wait.h>

#include "bargmann/grid_io.hpp"
#include "cli.hpp"

using namespace bargmann;
using cli::run_cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "bargmann_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("coeffs examples") {
  SUBCASE("trivial level") {
    const Run r = run({"coeffs", "--n", "1", "--m", "0"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["gamma"] == nlohmann::json::array({"1"}));
    for (const auto& f : j["convention_report"]) CHECK(f["verdict"] == "EXACT_MATCH");
  }
  SUBCASE("first level") {
    const Run r = run({"coeffs", "--n", "1", "--m", "1"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["gamma"] == nlohmann::json::array({"1", "-2", "2"}));
    CHECK(j["kappa"] == nlohmann::json::array({"1", "1/2", "1/16"}));
    bool found = false;
    for (const auto& f : j["convention_report"]) {
      if (f["family"] == "sigma") {
        found = true;
        CHECK(f["verdict"] == "MATCH_UP_TO_CONVENTION");
        CHECK(f["adjustment"] == "(-1)^j");
      }
    }
    CHECK(found);
  }
  SUBCASE("csv shape") {
    const Run r = run({"coeffs", "--n", "2", "--m", "3", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "j,gamma,sigma,c,kappa,verdict");
    int rows = 0;
    for (std::string l; std::getline(in, l);) {
      if (!l.empty()) ++rows;
    }
    CHECK(rows == 7);
  }
  CHECK(run({"coeffs", "--n", "0", "--m", "1"}).code == 2);
  CHECK(run({"coeffs", "--n", "1", "--m", "65"}).code == 2);
  CHECK(run({"coeffs", "--n", "1", "--m", "-1"}).code == 2);
}

TEST_CASE("kernel and symbol values") {
  const Run k = run({"kernel", "--n", "1", "--m", "0", "--z", "0", "0", "--w", "0", "0"});
  REQUIRE(k.code == 0);
  std::istringstream ks(k.out);
  double re = 0, im = 1;
  ks >> re >> im;
  CHECK(re == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-15));
  CHECK(im == 0.0);

  const Run s = run({"symbol", "--n", "1", "--m", "1", "--xi-norm", "2"});
  REQUIRE(s.code == 0);
  CHECK(std::abs(std::stod(s.out)) < 1e-15);
  const Run s0 = run({"symbol", "--n", "3", "--m", "0", "--xi-norm", "0"});
  REQUIRE(s0.code == 0);
  CHECK(std::stod(s0.out) == 1.0);
  // at least 15 significant digits
  CHECK(s0.out.find("1.0000000000000000e+00") == 0);
}

TEST_CASE("exit code matrix") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"kernel", "--n", "2", "--m", "0", "--z", "0", "0", "--w", "0", "0", "0", "0"}).code == 2);
  CHECK(run({"kernel", "--n", "1", "--m", "0", "--z", "0", "0", "0", "--w", "0", "0"}).code == 2);
  CHECK(run({"symbol", "--n", "1", "--m", "1"}).code == 2);
  CHECK(run({"symbol", "--n", "1", "--m", "1", "--xi-norm", "-1"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "kernel", "--n", "1", "--m", "1"}).code == 2);
  CHECK(run({"verify", "--suite", "symbols", "--n", "1", "--m", "1"}).code == 0);
  CHECK(run({"verify", "--suite", "kernel", "--n", "2", "--m", "1"}).code == 0);
  CHECK(run({"verify", "--suite", "addition", "--n", "2", "--m", "2"}).code == 0);
  // an impossible tolerance turns passing cases into failures
  CHECK(run({"verify", "--suite", "addition", "--n", "2", "--m", "2", "--tol", "1e-300"}).code == 1);
  CHECK(run({"transform", "--input", "/nonexistent/x.json", "--output", "/tmp/y.json", "--m", "1"}).code == 2);
}

TEST_CASE("verify report shape") {
  const Run r = run({"verify", "--suite", "symbols", "--n", "1", "--m", "1"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "symbols");
  CHECK(j["pass"] == true);
  REQUIRE(j["cases"].size() > 0);
  for (const auto& c : j["cases"]) {
    CHECK(c.contains("name"));
    CHECK(c["status"] == "pass");
    CHECK(c.contains("measured"));
    CHECK(c.contains("tol"));
  }
}

TEST_CASE("outputs are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"coeffs", "--n", "2", "--m", "2"},
           {"coeffs", "--n", "3", "--m", "2", "--format", "csv"},
           {"verify", "--suite", "kernel", "--n", "2", "--m", "1"},
           {"kernel", "--n", "2", "--m", "1", "--z", "0.1", "0.2", "0.3", "0.4", "--w", "-0.5", "0.6", "0.7", "0.8"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("transform through files") {
  const fs::path dir = scratch_dir();
  const GridFunction2D constant =
      GridFunction2D::sample(64, 64, -8, 8, -8, 8, [](Complex) { return Complex(1.0, 0.0); });
  write_grid(constant, dir / "const.json");

  SUBCASE("spectral fixed point") {
    const Run r = run({"transform", "--input", (dir / "const.json").string(), "--output",
                       (dir / "const_out.json").string(), "--m", "2"});
    REQUIRE(r.code == 0);
    const GridFunction2D out = read_grid(dir / "const_out.json");
    CHECK(out.metadata["method"] == "spectral");
    CHECK(out.metadata["m"] == 2);
    double worst = 0;
    for (int i = 0; i < out.nx; ++i) {
      for (int j = 0; j < out.ny; ++j) {
        if (std::abs(out.point(i, j)) <= 2.0) worst = std::max(worst, std::abs(out.at(i, j) - 1.0));
      }
    }
    CHECK(worst < 1e-6);
  }
  SUBCASE("direct needs a margin") {
    write_grid(GridFunction2D::sample(32, 32, -4, 4, -4, 4, [](Complex) { return Complex(1.0, 0.0); }),
               dir / "small.json");
    const Run r = run({"transform", "--input", (dir / "small.json").string(), "--output",
                       (dir / "const_direct.json").string(), "--m", "1", "--method", "direct"});
    CHECK(r.code == 1);
  }
  SUBCASE("malformed manifest") {
    std::ofstream(dir / "broken.json") << "[1, 2";
    const Run r = run({"transform", "--input", (dir / "broken.json").string(), "--output",
                       (dir / "broken_out.json").string(), "--m", "1"});
    CHECK(r.code == 2);
  }
}

TEST_CASE("installed executable honours the contract") {
  const std::string exe = BARGMANN_EXE;
  CHECK(std::system((exe + " symbol --n 1 --m 1 --xi-norm 2 > /dev/null").c_str()) == 0);
  CHECK(WEXITSTATUS(std::system((exe + " kernel --n 1 --m 0 --z 0 --w 0 0 > /dev/null 2>&1").c_str())) == 2);
  CHECK(WEXITSTATUS(std::system((exe + " verify --suite addition --n 2 --m 2 --tol 1e-300 > /dev/null").c_str())) == 1);
}
