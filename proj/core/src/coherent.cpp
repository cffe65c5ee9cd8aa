#include "bargmann/coherent.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bargmann/quadrature.hpp"
#include "bargmann/specfun.hpp"

namespace bargmann {

namespace {

double binom_nm(SpaceParams params) {
  return binomial_general(static_cast<long>(params.n() + params.m() - 1), static_cast<long>(params.m()))
      .to_double();
}

void require_plane(const CPoint& z, const char* who) {
  if (z.dim() != 1) throw std::invalid_argument(std::string(who) + ": defined for n = 1 only");
}

double radial_disk_integral(int m, Complex z, double radius, int radial_nodes, int angular_nodes) {
  const QuadratureRule rule = gauss_legendre(radial_nodes, 0.0, radius);
  const double dtheta = 2.0 * std::numbers::pi / angular_nodes;
  double total = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double rho = rule.nodes[i];
    double ring = 0.0;
    for (int k = 0; k < angular_nodes; ++k) {
      const Complex w = std::polar(rho, k * dtheta);
      const double d2 = std::norm(z - w);
      const double lag = laguerre(m, 0.0, d2);
      ring += std::exp(-d2) * lag * lag;
    }
    total += rule.weights[i] * rho * ring * dtheta;
  }
  return total / std::numbers::pi;
}

}  // namespace

double normalization_factor(SpaceParams params, const CPoint& z) {
  if (z.dim() != params.n()) throw std::invalid_argument("normalization_factor: dimension mismatch");
  return binom_nm(params) * std::exp(z.norm_sq()) / std::pow(std::numbers::pi, params.n());
}

Complex overlap(SpaceParams params, const CPoint& z, const CPoint& w) {
  if (z.dim() != params.n() || w.dim() != params.n()) {
    throw std::invalid_argument("overlap: dimension mismatch");
  }
  const Complex phase = hermitian_inner(z, w) - 0.5 * (z.norm_sq() + w.norm_sq());
  return std::exp(phase) * laguerre(params.m(), params.n() - 1, (z - w).norm_sq()) / binom_nm(params);
}

double resolution_check(int m, const CPoint& z, double quad_radius) {
  require_plane(z, "resolution_check");
  if (m < 0) throw std::invalid_argument("resolution_check: m must be >= 0");
  const double gap = quad_radius - z.norm();
  if (!(gap > 0.0)) throw std::invalid_argument("resolution_check: z lies outside the quadrature disk");
  // Crude majorant of the mass of e^{-u} L_m(u)^2 beyond u = gap^2.
  const double u = gap * gap;
  const double tail = std::exp(-u) * std::pow(1.0 + u, 2 * m + 1);
  if (tail > 1e-12) {
    throw std::invalid_argument("resolution_check: quad_radius too small, Gaussian tail above 1e-12");
  }
  const double fine = radial_disk_integral(m, z[0], quad_radius, 160, 128);
  const double coarse = radial_disk_integral(m, z[0], quad_radius, 120, 128);
  if (std::abs(fine - coarse) > 1e-9) {
    throw AccuracyError("resolution_check: radial quadrature did not converge");
  }
  return fine;
}

Complex expectation_quadrature(int m, const ScalarField& phi, const CPoint& z, ExpectationConfig cfg) {
  require_plane(z, "expectation_quadrature");
  if (m < 0) throw std::invalid_argument("expectation_quadrature: m must be >= 0");
  const QuadratureRule& rule = gauss_laguerre_cached(cfg.radial_nodes);
  const double dtheta = 2.0 * std::numbers::pi / cfg.angular_nodes;
  Complex total{0.0, 0.0};
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (rule.weights[i] < 1e-200) continue;
    const double lag = laguerre(m, 0.0, rule.nodes[i]);
    const double rho = std::sqrt(rule.nodes[i]);
    Complex ring{0.0, 0.0};
    for (int k = 0; k < cfg.angular_nodes; ++k) ring += phi(z[0] + std::polar(rho, k * dtheta));
    total += rule.weights[i] * lag * lag * ring / static_cast<double>(cfg.angular_nodes);
  }
  return total;
}

}  // namespace bargmann
