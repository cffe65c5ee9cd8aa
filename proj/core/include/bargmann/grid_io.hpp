#pragma once

// Grid file format: a JSON manifest
//   {"nx", "ny", "xmin", "xmax", "ymin", "ymax", "csv"[, "metadata"]}
// and a headerless CSV of nx*ny lines "re,im" in index order i*ny + j.

#include <filesystem>
#include <stdexcept>

#include "bargmann/transform.hpp"

namespace bargmann {

class GridFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The csv path is resolved relative to the manifest's directory.
GridFunction2D read_grid(const std::filesystem::path& manifest);

/// Writes the manifest and, next to it, <stem>.csv. Numbers use 17
/// significant digits.
void write_grid(const GridFunction2D& grid, const std::filesystem::path& manifest);

}  // namespace bargmann
