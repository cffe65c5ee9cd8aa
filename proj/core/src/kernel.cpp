#include "bargmann/kernel.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bargmann/specfun.hpp"

namespace bargmann {

CPoint CPoint::from_reals(std::span<const double> reals) {
  if (reals.size() % 2 != 0) throw std::invalid_argument("CPoint: need an even number of reals");
  std::vector<Complex> coords(reals.size() / 2);
  for (std::size_t j = 0; j < coords.size(); ++j) coords[j] = {reals[2 * j], reals[2 * j + 1]};
  return CPoint(std::move(coords));
}

double CPoint::norm_sq() const {
  double s = 0.0;
  for (const Complex& c : coords_) s += std::norm(c);
  return s;
}

double CPoint::norm() const { return std::sqrt(norm_sq()); }

namespace {

void require_same_dim(const CPoint& a, const CPoint& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("CPoint: dimension mismatch");
}

void require_dim(SpaceParams params, const CPoint& z) {
  if (z.dim() != params.n()) {
    throw std::invalid_argument("point has " + std::to_string(z.dim()) +
                                " complex coordinates, expected n = " + std::to_string(params.n()));
  }
}

Rational coefficient_C(int n, int m, int p, int q) {
  const Rational g = factorial(n + p + q - 1);
  return factorial(n - 1) * dimension_hpq_exact(n, p, q) * factorial(m + n + p - 1) /
         (factorial(m - q) * g * g);
}

}  // namespace

CPoint operator-(const CPoint& a, const CPoint& b) {
  require_same_dim(a, b);
  CPoint out = a;
  for (int j = 0; j < a.dim(); ++j) out[j] -= b[j];
  return out;
}

CPoint operator+(const CPoint& a, const CPoint& b) {
  require_same_dim(a, b);
  CPoint out = a;
  for (int j = 0; j < a.dim(); ++j) out[j] += b[j];
  return out;
}

CPoint operator*(double s, const CPoint& a) {
  CPoint out = a;
  for (int j = 0; j < a.dim(); ++j) out[j] *= s;
  return out;
}

Complex hermitian_inner(const CPoint& z, const CPoint& w) {
  require_same_dim(z, w);
  Complex s{0.0, 0.0};
  for (int j = 0; j < z.dim(); ++j) s += z[j] * std::conj(w[j]);
  return s;
}

Complex reproducing_kernel(SpaceParams params, const CPoint& z, const CPoint& w) {
  require_dim(params, z);
  require_dim(params, w);
  const double lag = laguerre(params.m(), params.n() - 1, (z - w).norm_sq());
  return std::exp(hermitian_inner(z, w)) * lag / std::pow(std::numbers::pi, params.n());
}

CoeffIdentity coeff_identity_C(SpaceParams params, int p, int q) {
  const int n = params.n();
  const int m = params.m();
  if (n < 2) throw std::invalid_argument("coeff_identity_C: requires n >= 2 (d(n;p,q) undefined)");
  if (p < 0 || q < 0 || q > m) throw std::invalid_argument("coeff_identity_C: need p >= 0, 0 <= q <= m");

  Rational lhs = coefficient_C(n, m, p, q);

  const Rational sigma(n - 1);
  Rational rhs = factorial(n + m - 1) / (factorial(n - 2) * factorial(m) * sigma);
  rhs *= sigma / (sigma + Rational(p + q));
  rhs *= binomial_general(static_cast<long>(m), static_cast<long>(q));
  rhs *= pochhammer(sigma + Rational(m + 1), p);
  rhs /= factorial(p) * pochhammer(sigma + Rational(q), p) * pochhammer(sigma + Rational(p), q);

  const bool equal = lhs == rhs;
  return {std::move(lhs), std::move(rhs), equal};
}

Complex kernel_series(SpaceParams params, const CPoint& z, const CPoint& w, int p_max) {
  const int n = params.n();
  const int m = params.m();
  if (n < 2) {
    throw std::invalid_argument(
        "kernel_series: requires n >= 2 (disk-polynomial parameter gamma = n-2 must be > -1)");
  }
  require_dim(params, z);
  require_dim(params, w);
  if (p_max < 0) throw std::invalid_argument("kernel_series: p_max must be >= 0");
  const double rz = z.norm();
  const double rw = w.norm();
  if (rz == 0.0 || rw == 0.0) throw std::invalid_argument("kernel_series: z and w must be nonzero");

  Complex xi = hermitian_inner(z, w) / (rz * rw);
  const double mod = std::abs(xi);
  if (mod > 1.0) {
    if (mod > 1.0 + 1e-14) throw std::domain_error("kernel_series: |<z^, w^>| exceeds 1");
    xi /= mod;
  }

  const double sigma = n - 1;
  const double uz = rz * rz;
  const double uw = rw * rw;
  Complex sum{0.0, 0.0};
  for (int q = 0; q <= m; ++q) {
    for (int p = 0; p <= p_max; ++p) {
      const double c = coefficient_C(n, m, p, q).to_double();
      const double alpha = sigma + p + q;
      const double radial = std::pow(rz * rw, p + q) * script_laguerre(m - q, alpha, uz) *
                            script_laguerre(m - q, alpha, uw);
      sum += c * radial * disk_polynomial(p, q, n - 2, xi);
    }
  }
  return std::exp(0.5 * (uz + uw)) / std::pow(std::numbers::pi, n) * sum;
}

double addition_formula_residual(double sigma, int s, double x, double y, double r, double psi,
                                 int k_max) {
  if (!(sigma > 0.0)) throw std::invalid_argument("addition formula: sigma must be > 0");
  if (s < 0) throw std::invalid_argument("addition formula: s must be >= 0");
  if (!(x >= 0.0) || !(y >= 0.0)) throw std::invalid_argument("addition formula: need x, y >= 0");
  if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("addition formula: need 0 <= r <= 1");
  if (!(psi >= 0.0 && psi < 2.0 * std::numbers::pi)) {
    throw std::invalid_argument("addition formula: need 0 <= psi < 2 pi");
  }
  if (k_max < 0) throw std::invalid_argument("addition formula: k_max must be >= 0");

  const Complex lhs = std::exp(Complex(0.0, x * y * r * std::sin(psi))) *
                      script_laguerre(s, sigma, x * x + y * y - 2.0 * x * y * r * std::cos(psi));

  const Complex disk_arg = std::polar(r, psi);
  Complex rhs{0.0, 0.0};
  for (int l = 0; l <= s; ++l) {
    const double binom = binomial_general(static_cast<long>(s), static_cast<long>(l)).to_double();
    // (sigma+s+1)_k / (k! (sigma+l)_k), built up in k
    double ratio = 1.0;
    for (int k = 0; k <= k_max; ++k) {
      if (k > 0) ratio *= (sigma + s + k) / (k * (sigma + l + k - 1));
      const double alpha = sigma + k + l;
      const double coef = sigma / alpha * binom * ratio / pochhammer(sigma + k, l);
      const double radial = std::pow(x * y, k + l) * script_laguerre(s - l, alpha, x * x) *
                            script_laguerre(s - l, alpha, y * y);
      rhs += coef * radial * disk_polynomial(k, l, sigma - 1.0, disk_arg);
    }
  }
  return std::abs(lhs - rhs);
}

GramSpectrum gram_spectrum(SpaceParams params, const std::vector<CPoint>& points) {
  const auto size = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXcd gram(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) gram(i, j) = reproducing_kernel(params, points[i], points[j]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("gram_spectrum: eigensolver failed");
  GramSpectrum out;
  out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + size);
  out.trace = gram.trace().real();
  return out;
}

}  // namespace bargmann
