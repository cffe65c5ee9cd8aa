#include "bargmann/grid_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace bargmann {

namespace {

double require_number(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw GridFormatError(std::string("grid manifest: missing numeric field '") + key + "'");
  }
  return j[key].get<double>();
}

int require_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw GridFormatError(std::string("grid manifest: missing integer field '") + key + "'");
  }
  return j[key].get<int>();
}

}  // namespace

GridFunction2D read_grid(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw GridFormatError("grid manifest: cannot open " + manifest.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw GridFormatError(std::string("grid manifest: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw GridFormatError("grid manifest: top level must be an object");

  const int nx = require_int(j, "nx");
  const int ny = require_int(j, "ny");
  const double xmin = require_number(j, "xmin");
  const double xmax = require_number(j, "xmax");
  const double ymin = require_number(j, "ymin");
  const double ymax = require_number(j, "ymax");
  if (!j.contains("csv") || !j["csv"].is_string()) throw GridFormatError("grid manifest: missing 'csv' path");
  if (nx < 8 || ny < 8 || !(xmax > xmin) || !(ymax > ymin)) {
    throw GridFormatError("grid manifest: need nx, ny >= 8 and positive extents");
  }

  GridFunction2D grid(nx, ny, xmin, xmax, ymin, ymax);
  if (j.contains("metadata") && j["metadata"].is_object()) {
    grid.metadata = nlohmann::ordered_json::parse(j["metadata"].dump());
  }

  std::filesystem::path csv = j["csv"].get<std::string>();
  if (csv.is_relative()) csv = manifest.parent_path() / csv;
  std::ifstream data(csv);
  if (!data) throw GridFormatError("grid csv: cannot open " + csv.string());

  std::string line;
  std::size_t idx = 0;
  while (std::getline(data, line)) {
    if (line.empty() || line == "\r") continue;
    if (idx >= grid.values.size()) throw GridFormatError("grid csv: more than nx*ny rows");
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw GridFormatError("grid csv: row " + std::to_string(idx + 1) + " lacks 're,im'");
    try {
      std::size_t used_re = 0;
      std::size_t used_im = 0;
      const std::string re_text = line.substr(0, comma);
      const std::string im_text = line.substr(comma + 1);
      const double re = std::stod(re_text, &used_re);
      const double im = std::stod(im_text, &used_im);
      if (used_re != re_text.size() || im_text.find_first_not_of(" \r", used_im) != std::string::npos) {
        throw std::invalid_argument("trailing characters");
      }
      grid.values[idx] = {re, im};
    } catch (const std::exception&) {
      throw GridFormatError("grid csv: row " + std::to_string(idx + 1) + " is not 're,im'");
    }
    ++idx;
  }
  if (idx != grid.values.size()) {
    throw GridFormatError("grid csv: expected " + std::to_string(grid.values.size()) + " rows, got " +
                          std::to_string(idx));
  }
  return grid;
}

void write_grid(const GridFunction2D& grid, const std::filesystem::path& manifest) {
  grid.validate();
  std::filesystem::path csv_name = manifest.stem();
  csv_name += ".csv";
  const std::filesystem::path csv_path = manifest.parent_path() / csv_name;

  std::ofstream data(csv_path);
  if (!data) throw GridFormatError("grid csv: cannot write " + csv_path.string());
  char buf[96];
  for (const Complex& v : grid.values) {
    std::snprintf(buf, sizeof buf, "%.16e,%.16e\n", v.real(), v.imag());
    data << buf;
  }
  if (!data) throw GridFormatError("grid csv: write failed for " + csv_path.string());

  nlohmann::ordered_json j;
  j["nx"] = grid.nx;
  j["ny"] = grid.ny;
  j["xmin"] = grid.xmin;
  j["xmax"] = grid.xmax;
  j["ymin"] = grid.ymin;
  j["ymax"] = grid.ymax;
  j["csv"] = csv_name.string();
  if (!grid.metadata.empty()) j["metadata"] = grid.metadata;
  std::ofstream out(manifest);
  if (!out) throw GridFormatError("grid manifest: cannot write " + manifest.string());
  out << j.dump(2) << '\n';
}

}  // namespace bargmann
