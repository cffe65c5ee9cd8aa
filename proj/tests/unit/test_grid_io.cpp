#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bargmann/grid_io.hpp"

using namespace bargmann;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "bargmann_grid_io_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("round trip is bit exact") {
  GridFunction2D g = GridFunction2D::sample(9, 10, -1.5, 2.0, -3.0, 0.25, [](Complex z) {
    return Complex(std::sin(z.real()) / 3.0, std::exp(z.imag()) * 1e-7);
  });
  g.metadata["m"] = 2;
  const fs::path manifest = scratch("rt.json");
  write_grid(g, manifest);
  const GridFunction2D back = read_grid(manifest);
  CHECK(back.nx == 9);
  CHECK(back.ny == 10);
  CHECK(back.xmin == -1.5);
  CHECK(back.ymax == 0.25);
  CHECK(back.values == g.values);
  CHECK(back.metadata["m"] == 2);

  const std::string text = slurp(manifest);
  CHECK(text.find("\"csv\": \"rt.csv\"") != std::string::npos);
  const std::string csv = slurp(scratch("rt.csv"));
  std::istringstream rows(csv);
  std::string first;
  std::getline(rows, first);
  // row-major: index 0 is (i, j) = (0, 0), index 1 is (0, 1)
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.16e,%.16e", g.at(0, 0).real(), g.at(0, 0).imag());
  CHECK(first == buf);
  std::size_t lines = 1;
  for (std::string l; std::getline(rows, l);) ++lines;
  CHECK(lines == 90);
}

TEST_CASE("malformed input") {
  const fs::path bad_json = scratch("bad.json");
  std::ofstream(bad_json) << "{ not json";
  CHECK_THROWS_AS(read_grid(bad_json), GridFormatError);

  const fs::path missing = scratch("missing.json");
  std::ofstream(missing) << R"({"nx": 8, "ny": 8, "xmin": 0, "xmax": 1, "ymin": 0, "ymax": 1})";
  CHECK_THROWS_AS(read_grid(missing), GridFormatError);

  const fs::path small = scratch("small.json");
  std::ofstream(small) << R"({"nx": 4, "ny": 8, "xmin": 0, "xmax": 1, "ymin": 0, "ymax": 1, "csv": "small.csv"})";
  CHECK_THROWS_AS(read_grid(small), GridFormatError);

  const fs::path short_rows = scratch("short.json");
  std::ofstream(short_rows) << R"({"nx": 8, "ny": 8, "xmin": 0, "xmax": 1, "ymin": 0, "ymax": 1, "csv": "short.csv"})";
  std::ofstream(scratch("short.csv")) << "1,0\n2,0\n";
  CHECK_THROWS_AS(read_grid(short_rows), GridFormatError);

  const fs::path junk = scratch("junk.json");
  std::ofstream(junk) << R"({"nx": 8, "ny": 8, "xmin": 0, "xmax": 1, "ymin": 0, "ymax": 1, "csv": "junk.csv"})";
  {
    std::ofstream out(scratch("junk.csv"));
    for (int k = 0; k < 64; ++k) out << (k == 10 ? "1;0" : "1,0") << '\n';
  }
  CHECK_THROWS_AS(read_grid(junk), GridFormatError);
  CHECK_THROWS_AS(read_grid(scratch("does_not_exist.json")), GridFormatError);
}
