#pragma once

// Reproducing kernel K_m of the generalized Bargmann space A^2_m(C^n), its
// series form through disk polynomials, and the Koornwinder addition formula
// for Laguerre functions.

#include <complex>
#include <span>
#include <vector>

#include "bargmann/rational.hpp"
#include "bargmann/symbols.hpp"

namespace bargmann {

using Complex = std::complex<double>;

/// A point of C^n.
class CPoint {
 public:
  CPoint() = default;
  explicit CPoint(std::vector<Complex> coords) : coords_(std::move(coords)) {}
  CPoint(std::initializer_list<Complex> coords) : coords_(coords) {}

  /// Builds from 2n reals (x_1, y_1, ..., x_n, y_n). Throws on odd length.
  static CPoint from_reals(std::span<const double> reals);

  int dim() const { return static_cast<int>(coords_.size()); }
  const Complex& operator[](int j) const { return coords_[j]; }
  Complex& operator[](int j) { return coords_[j]; }
  const std::vector<Complex>& coords() const { return coords_; }

  double norm_sq() const;
  double norm() const;

  friend CPoint operator-(const CPoint& a, const CPoint& b);
  friend CPoint operator+(const CPoint& a, const CPoint& b);
  friend CPoint operator*(double s, const CPoint& a);

 private:
  std::vector<Complex> coords_;
};

/// <z, w> = sum_j z_j conj(w_j).
Complex hermitian_inner(const CPoint& z, const CPoint& w);

/// pi^{-n} e^{<z,w>} L_m^{(n-1)}(|z-w|^2). Throws if dim(z), dim(w) != n.
Complex reproducing_kernel(SpaceParams params, const CPoint& z, const CPoint& w);

/// Truncated double series over p <= p_max, q <= m with disk polynomials in
/// <z/|z|, w/|w|>. Requires n >= 2 and z, w != 0.
Complex kernel_series(SpaceParams params, const CPoint& z, const CPoint& w, int p_max);

/// |LHS - RHS_{k <= k_max}| for the Koornwinder addition formula
///   e^{i x y r sin psi} Lscript_s^{(sigma)}(x^2 + y^2 - 2 x y r cos psi)
///     = sum_k sum_{l<=s} ... x^{k+l} Lscript(x^2) y^{k+l} Lscript(y^2) R_{k,l}^{sigma-1}(r e^{i psi}).
double addition_formula_residual(double sigma, int s, double x, double y, double r, double psi,
                                 int k_max);

struct CoeffIdentity {
  Rational lhs;  // Gamma(n) d(n,p,q) Gamma(m+n+p) / ((m-q)! Gamma(n+p+q)^2)
  Rational rhs;  // Pochhammer form
  bool equal;
};

/// Both closed forms of the series coefficient C_{n,p,q}. Requires n >= 2 and
/// 0 <= q <= m.
CoeffIdentity coeff_identity_C(SpaceParams params, int p, int q);

struct GramSpectrum {
  std::vector<double> eigenvalues;  // ascending
  double trace;
};

/// Eigenvalues of the Hermitian matrix [K_m(z_i, z_j)].
GramSpectrum gram_spectrum(SpaceParams params, const std::vector<CPoint>& points);

}  // namespace bargmann
