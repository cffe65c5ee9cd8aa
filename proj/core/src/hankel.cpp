#include <cmath>
#include <stdexcept>

#include "bargmann/quadrature.hpp"
#include "bargmann/specfun.hpp"
#include "bargmann/symbols.hpp"

namespace bargmann {

namespace {

void check_indices(int s, int nu, double arg, const char* who) {
  if (s < 0 || nu < 0) throw std::invalid_argument(std::string(who) + ": s and nu must be >= 0");
  if (!(arg >= 0.0)) throw std::invalid_argument(std::string(who) + ": argument must be >= 0");
}

// Nodes below this weight contribute nothing representable.
constexpr double kNegligibleWeight = 1e-200;

}  // namespace

// With t = x^2 both integrands become (1/2) e^{-t} t^{nu} (smooth in t), which
// Gauss-Laguerre integrates spectrally.
double hankel_moment_quadrature(int s, int nu, double z, int nodes) {
  check_indices(s, nu, z, "hankel_moment_quadrature");
  const QuadratureRule& rule = gauss_laguerre_cached(nodes);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (rule.weights[i] < kNegligibleWeight) continue;
    const double t = rule.nodes[i];
    sum += rule.weights[i] * std::pow(t, s + 0.5 * nu) * bessel_j(nu, 2.0 * std::sqrt(t * z));
  }
  return 0.5 * sum;
}

double hankel_moment_closed(int s, int nu, double z) {
  check_indices(s, nu, z, "hankel_moment_closed");
  return 0.5 * factorial(s).to_double() * std::exp(-z) * std::pow(z, 0.5 * nu) * laguerre(s, nu, z);
}

double hankel_laguerre_quadrature(int s, int nu, double u, int nodes) {
  check_indices(s, nu, u, "hankel_laguerre_quadrature");
  const QuadratureRule& rule = gauss_laguerre_cached(nodes);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (rule.weights[i] < kNegligibleWeight) continue;
    const double t = rule.nodes[i];
    sum += rule.weights[i] * std::pow(t, 0.5 * nu) * laguerre(s, nu, t) *
           bessel_j(nu, u * std::sqrt(t));
  }
  return 0.5 * sum;
}

double hankel_laguerre_closed(int s, int nu, double u) {
  check_indices(s, nu, u, "hankel_laguerre_closed");
  return std::pow(0.5 * u, 2 * s + nu) * std::exp(-0.25 * u * u) / (2.0 * factorial(s).to_double());
}

}  // namespace bargmann
