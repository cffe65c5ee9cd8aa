#pragma once

#include <vector>

namespace bargmann {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Laguerre rule for \int_0^\infty x^alpha e^{-x} f(x) dx.
/// Nodes come from the Golub-Welsch eigenproblem, then get a Newton polish;
/// weights are formed in log space so the far nodes underflow cleanly.
QuadratureRule gauss_laguerre(int n, double alpha = 0.0);

/// n-point Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Cached read-only copy of gauss_laguerre(n, 0). Thread-safe.
const QuadratureRule& gauss_laguerre_cached(int n);

}  // namespace bargmann
