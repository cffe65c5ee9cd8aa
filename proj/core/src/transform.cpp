#include "bargmann/transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <memory>
#include <mutex>
#include <numbers>

#include "bargmann/quadrature.hpp"
#include "bargmann/specfun.hpp"

namespace bargmann {

GridFunction2D::GridFunction2D(int nx_, int ny_, double xmin_, double xmax_, double ymin_, double ymax_)
    : nx(nx_), ny(ny_), xmin(xmin_), xmax(xmax_), ymin(ymin_), ymax(ymax_) {
  if (nx < 8 || ny < 8) throw std::invalid_argument("GridFunction2D: nx and ny must be >= 8");
  values.assign(static_cast<std::size_t>(nx) * ny, Complex{0.0, 0.0});
  validate();
}

GridFunction2D GridFunction2D::sample(int nx, int ny, double xmin, double xmax, double ymin, double ymax,
                                      const std::function<Complex(Complex)>& f) {
  GridFunction2D g(nx, ny, xmin, xmax, ymin, ymax);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) g.at(i, j) = f(g.point(i, j));
  }
  return g;
}

void GridFunction2D::validate() const {
  if (nx < 8 || ny < 8) throw std::invalid_argument("GridFunction2D: nx and ny must be >= 8");
  if (!(xmax > xmin) || !(ymax > ymin)) throw std::invalid_argument("GridFunction2D: spacing must be > 0");
  if (values.size() != static_cast<std::size_t>(nx) * ny) {
    throw std::invalid_argument("GridFunction2D: sample count differs from nx * ny");
  }
}

GridFunction2D GridFunction2D::congruent() const { return GridFunction2D(nx, ny, xmin, xmax, ymin, ymax); }

void GridFunction2D::add_warning(const std::string& message) {
  if (!metadata.contains("warnings")) metadata["warnings"] = nlohmann::ordered_json::array();
  metadata["warnings"].push_back(message);
}

std::vector<std::string> GridFunction2D::warnings() const {
  std::vector<std::string> out;
  if (metadata.contains("warnings")) {
    for (const auto& w : metadata["warnings"]) out.push_back(w.get<std::string>());
  }
  return out;
}

double h_kernel(SpaceParams params, const CPoint& z) {
  if (z.dim() != params.n()) throw std::invalid_argument("h_kernel: dimension mismatch");
  const double u = z.norm_sq();
  const double lag = laguerre(params.m(), params.n() - 1, u);
  return params.mass_factor().to_double() * std::exp(-u) * lag * lag / std::pow(std::numbers::pi, params.n());
}

namespace {

constexpr int kStencil = 6;

// Start index and Lagrange weights for a 6-point stencil at fractional grid
// coordinate s in [0, count-1].
int lagrange_stencil(double s, int count, std::array<double, kStencil>& weights) {
  s = std::clamp(s, 0.0, static_cast<double>(count - 1));
  const int base = static_cast<int>(std::floor(s));
  const int start = std::clamp(base - kStencil / 2 + 1, 0, count - kStencil);
  for (int k = 0; k < kStencil; ++k) {
    double w = 1.0;
    for (int l = 0; l < kStencil; ++l) {
      if (l != k) w *= (s - (start + l)) / static_cast<double>(k - l);
    }
    weights[k] = w;
  }
  return start;
}

}  // namespace

Complex interpolate(const GridFunction2D& phi, double x, double y) {
  std::array<double, kStencil> wx{};
  std::array<double, kStencil> wy{};
  const int ix = lagrange_stencil((x - phi.xmin) / phi.hx(), phi.nx, wx);
  const int iy = lagrange_stencil((y - phi.ymin) / phi.hy(), phi.ny, wy);
  Complex sum{0.0, 0.0};
  for (int a = 0; a < kStencil; ++a) {
    Complex row{0.0, 0.0};
    for (int b = 0; b < kStencil; ++b) row += wy[b] * phi.at(ix + a, iy + b);
    sum += wx[a] * row;
  }
  return sum;
}

std::vector<Complex> berezin_direct(const GridFunction2D& phi, int m, const std::vector<Complex>& eval_points,
                                    DirectConfig cfg) {
  phi.validate();
  if (m < 0) throw std::invalid_argument("berezin_direct: m must be >= 0");
  for (const Complex& z : eval_points) {
    const double dist = std::min({z.real() - phi.xmin, phi.xmax - z.real(), z.imag() - phi.ymin,
                                  phi.ymax - z.imag()});
    if (dist < cfg.margin) {
      throw BoundaryMarginError(cfg.margin, "berezin_direct: evaluation point within the Gaussian margin " +
                                                std::to_string(cfg.margin) + " of the grid boundary");
    }
  }

  const QuadratureRule& rule = gauss_laguerre_cached(cfg.radial_nodes);
  const double dtheta = 2.0 * std::numbers::pi / cfg.angular_nodes;
  std::vector<Complex> dirs(cfg.angular_nodes);
  for (int k = 0; k < cfg.angular_nodes; ++k) dirs[k] = std::polar(1.0, k * dtheta);
  std::vector<double> radial_weight(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double lag = laguerre(m, 0.0, rule.nodes[i]);
    radial_weight[i] = rule.weights[i] * lag * lag / cfg.angular_nodes;
  }

  std::vector<Complex> out;
  out.reserve(eval_points.size());
  for (const Complex& z : eval_points) {
    Complex total{0.0, 0.0};
    for (std::size_t i = 0; i < rule.size(); ++i) {
      if (rule.weights[i] < 1e-200) continue;
      const double rho = std::sqrt(rule.nodes[i]);
      Complex ring{0.0, 0.0};
      for (const Complex& d : dirs) {
        const Complex w = z + rho * d;
        ring += interpolate(phi, w.real(), w.imag());
      }
      total += radial_weight[i] * ring;
    }
    out.push_back(total);
  }
  return out;
}

namespace {

// FFTW's planner is not reentrant.
std::mutex& fftw_planner_mutex() {
  static std::mutex mutex;
  return mutex;
}

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};

// Zero-pads to 2x per axis, applies multiplier(|xi|^2) in frequency space and
// crops back.
GridFunction2D apply_multiplier(const GridFunction2D& phi, const std::function<double(double)>& multiplier) {
  phi.validate();
  const int px = 2 * phi.nx;
  const int py = 2 * phi.ny;
  const std::size_t total = static_cast<std::size_t>(px) * py;
  std::unique_ptr<fftw_complex, FftwFree> buf(fftw_alloc_complex(total));
  if (!buf) throw std::bad_alloc();
  auto* data = reinterpret_cast<Complex*>(buf.get());
  std::fill(data, data + total, Complex{0.0, 0.0});
  for (int i = 0; i < phi.nx; ++i) {
    for (int j = 0; j < phi.ny; ++j) data[static_cast<std::size_t>(i) * py + j] = phi.at(i, j);
  }

  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    forward = fftw_plan_dft_2d(px, py, buf.get(), buf.get(), FFTW_FORWARD, FFTW_ESTIMATE);
    backward = fftw_plan_dft_2d(px, py, buf.get(), buf.get(), FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(forward);

  const double ex = px * phi.hx();
  const double ey = py * phi.hy();
  const double two_pi = 2.0 * std::numbers::pi;
  for (int a = 0; a < px; ++a) {
    const int ka = a <= px / 2 ? a : a - px;
    const double xi_x = two_pi * ka / ex;
    for (int b = 0; b < py; ++b) {
      const int kb = b <= py / 2 ? b : b - py;
      const double xi_y = two_pi * kb / ey;
      data[static_cast<std::size_t>(a) * py + b] *= multiplier(xi_x * xi_x + xi_y * xi_y) / static_cast<double>(total);
    }
  }
  fftw_execute(backward);
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
  }

  GridFunction2D out = phi.congruent();
  for (int i = 0; i < phi.nx; ++i) {
    for (int j = 0; j < phi.ny; ++j) out.at(i, j) = data[static_cast<std::size_t>(i) * py + j];
  }
  return out;
}

double boundary_max(const GridFunction2D& phi) {
  double mx = 0.0;
  for (int i = 0; i < phi.nx; ++i) {
    mx = std::max({mx, std::abs(phi.at(i, 0)), std::abs(phi.at(i, phi.ny - 1))});
  }
  for (int j = 0; j < phi.ny; ++j) {
    mx = std::max({mx, std::abs(phi.at(0, j)), std::abs(phi.at(phi.nx - 1, j))});
  }
  return mx;
}

}  // namespace

GridFunction2D berezin_spectral(const GridFunction2D& phi, int m, SymbolRep rep) {
  if (m < 0) throw std::invalid_argument("berezin_spectral: m must be >= 0");
  const SymbolEvaluator symbol(SpaceParams(1, m), rep);
  GridFunction2D out = apply_multiplier(phi, [&symbol](double xi_sq) { return symbol(xi_sq); });
  out.metadata["method"] = "spectral";
  out.metadata["rep"] = to_string(rep);
  out.metadata["m"] = m;
  out.metadata["warnings"] = nlohmann::ordered_json::array();
  const double edge = boundary_max(phi);
  if (edge > kBoundaryDecayThreshold) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "boundary decay: max |phi| on boundary = %.3e exceeds %.0e", edge,
                  kBoundaryDecayThreshold);
    out.add_warning(buf);
  }
  return out;
}

GridFunction2D spectral_round_trip(const GridFunction2D& phi) {
  return apply_multiplier(phi, [](double) { return 1.0; });
}

GridFunction2D tilde_delta_apply(const GridFunction2D& psi) {
  psi.validate();
  GridFunction2D out = psi.congruent();
  out.invalid_border = 1;
  out.metadata["invalid_border"] = 1;
  const double hx = psi.hx();
  const double hy = psi.hy();
  const Complex iunit{0.0, 1.0};
  for (int i = 1; i < psi.nx - 1; ++i) {
    for (int j = 1; j < psi.ny - 1; ++j) {
      const Complex c = psi.at(i, j);
      const Complex dxx = (psi.at(i + 1, j) - 2.0 * c + psi.at(i - 1, j)) / (hx * hx);
      const Complex dyy = (psi.at(i, j + 1) - 2.0 * c + psi.at(i, j - 1)) / (hy * hy);
      const Complex dx = (psi.at(i + 1, j) - psi.at(i - 1, j)) / (2.0 * hx);
      const Complex dy = (psi.at(i, j + 1) - psi.at(i, j - 1)) / (2.0 * hy);
      out.at(i, j) = -0.25 * (dxx + dyy) + std::conj(psi.point(i, j)) * 0.5 * (dx + iunit * dy);
    }
  }
  return out;
}

}  // namespace bargmann
