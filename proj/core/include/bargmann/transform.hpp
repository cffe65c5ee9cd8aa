#pragma once

// Berezin transform B_m on uniform 2D grids (n = 1), by direct convolution
// with h_m and by an FFT multiplier, plus a finite-difference tilde-Delta.

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bargmann/kernel.hpp"
#include "bargmann/symbols.hpp"

namespace bargmann {

/// Complex samples on a uniform grid; sample (i, j) sits at
/// (xmin + i hx, ymin + j hy) and is stored at index i * ny + j.
struct GridFunction2D {
  int nx = 0;
  int ny = 0;
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  std::vector<Complex> values;
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
  /// Width of the outer ring whose samples are not meaningful.
  int invalid_border = 0;

  GridFunction2D() = default;
  GridFunction2D(int nx, int ny, double xmin, double xmax, double ymin, double ymax);

  static GridFunction2D sample(int nx, int ny, double xmin, double xmax, double ymin, double ymax,
                               const std::function<Complex(Complex)>& f);

  double hx() const { return (xmax - xmin) / (nx - 1); }
  double hy() const { return (ymax - ymin) / (ny - 1); }
  double x(int i) const { return xmin + i * hx(); }
  double y(int j) const { return ymin + j * hy(); }
  Complex point(int i, int j) const { return {x(i), y(j)}; }

  Complex& at(int i, int j) { return values[static_cast<std::size_t>(i) * ny + j]; }
  const Complex& at(int i, int j) const { return values[static_cast<std::size_t>(i) * ny + j]; }

  bool is_valid(int i, int j) const {
    return i >= invalid_border && j >= invalid_border && i < nx - invalid_border && j < ny - invalid_border;
  }

  /// Throws std::invalid_argument unless nx, ny >= 8, spacings > 0 and the
  /// sample count is nx * ny.
  void validate() const;

  /// Same geometry, zero samples, empty metadata.
  GridFunction2D congruent() const;

  void add_warning(const std::string& message);
  std::vector<std::string> warnings() const;
};

/// h_m(z) = m!/((n)_m pi^n) e^{-|z|^2} L_m^{(n-1)}(|z|^2)^2.
double h_kernel(SpaceParams params, const CPoint& z);

/// Raised when a direct-method evaluation point is closer than the Gaussian
/// support margin to the grid boundary.
class BoundaryMarginError : public std::domain_error {
 public:
  BoundaryMarginError(double margin, const std::string& what)
      : std::domain_error(what), margin_(margin) {}
  double margin() const noexcept { return margin_; }

 private:
  double margin_;
};

struct DirectConfig {
  int radial_nodes = 64;    // Gauss-Laguerre in |w - z|^2
  int angular_nodes = 128;  // trapezoid
  double margin = 6.0;      // required distance to the grid boundary
};

/// Reads phi off the grid by 6-point tensor Lagrange interpolation; positions
/// outside the grid take the nearest boundary value.
Complex interpolate(const GridFunction2D& phi, double x, double y);

/// B_m[phi] at each point by polar quadrature centered there.
std::vector<Complex> berezin_direct(const GridFunction2D& phi, int m, const std::vector<Complex>& eval_points,
                                    DirectConfig cfg = {});

/// Largest |phi| on the outermost ring above which berezin_spectral warns.
inline constexpr double kBoundaryDecayThreshold = 1e-10;

/// Inverse DFT of DFT(phi) * hhat_m(xi) on a grid zero-padded 2x per axis,
/// xi_k = 2 pi k / (N h). Output carries metadata {method, rep, m, warnings}.
GridFunction2D berezin_spectral(const GridFunction2D& phi, int m, SymbolRep rep = SymbolRep::Oracle);

/// Forward then inverse DFT with the same padding and normalization as
/// berezin_spectral, multiplier 1. Exposed for normalization tests.
GridFunction2D spectral_round_trip(const GridFunction2D& phi);

/// -(1/4)(psi_xx + psi_yy) + conj(z) (1/2)(psi_x + i psi_y) with second-order
/// central differences. The outer ring is set to 0 and flagged invalid.
GridFunction2D tilde_delta_apply(const GridFunction2D& psi);

}  // namespace bargmann
