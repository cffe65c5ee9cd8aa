#include "bargmann/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace bargmann {

namespace {

struct LaguerrePair {
  long double value;     // L_n(x) / scale
  long double previous;  // L_{n-1}(x) / scale
  long double log_scale;  // log of the common scale factor
};

// L_n^{alpha}(x) and L_{n-1}^{alpha}(x) sharing a rescaling factor, so n in
// the hundreds does not overflow. Extended precision: the double recurrence
// leaves nodes ~1e-14 off, which shows up in the weights.
LaguerrePair laguerre_scaled(int n, long double alpha, long double x) {
  long double prev = 0.0L;
  long double cur = 1.0L;
  long double log_scale = 0.0L;
  for (int k = 0; k < n; ++k) {
    const long double next = ((2.0L * k + 1.0L + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0L);
    prev = cur;
    cur = next;
    if (std::abs(cur) > 1e150L) {
      cur /= 1e150L;
      prev /= 1e150L;
      log_scale += std::log(1e150L);
    }
  }
  return {cur, prev, log_scale};
}

}  // namespace

QuadratureRule gauss_laguerre(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: need at least one node");
  if (!(alpha > -1.0)) throw std::invalid_argument("gauss_laguerre: alpha must be > -1");

  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < n; ++i) sub(i - 1) = std::sqrt(i * (i + alpha));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("gauss_laguerre: eigensolver failed");

  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const long double log_norm = std::lgamma(n + alpha + 1.0L) - std::lgamma(n + 1.0L);
  for (int i = 0; i < n; ++i) {
    long double x = solver.eigenvalues()(i);
    for (int it = 0; it < 6; ++it) {
      const LaguerrePair p = laguerre_scaled(n, alpha, x);
      // L_n' = (n L_n - (n+alpha) L_{n-1}) / x
      const long double deriv = (n * p.value - (n + alpha) * p.previous) / x;
      if (deriv == 0.0L) break;
      const long double step = p.value / deriv;
      x -= step;
      if (std::abs(step) <= 1e-19L * x) break;
    }
    rule.nodes[i] = static_cast<double>(x);
    const LaguerrePair next = laguerre_scaled(n + 1, alpha, x);
    // w = Gamma(n+alpha+1)/n! * x / ((n+1)^2 L_{n+1}(x)^2)
    const long double log_w = log_norm + std::log(x) - 2.0L * std::log(n + 1.0L) -
                              2.0L * (std::log(std::abs(next.value)) + next.log_scale);
    rule.weights[i] = static_cast<double>(std::exp(log_w));
  }
  return rule;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

const QuadratureRule& gauss_laguerre_cached(int n) {
  static std::mutex mutex;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gauss_laguerre(n)).first;
  return it->second;
}

}  // namespace bargmann
