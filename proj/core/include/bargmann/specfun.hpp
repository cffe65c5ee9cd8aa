#pragma once

// Classical special functions: Laguerre, normalized Jacobi and disk
// polynomials, Bessel J, Pochhammer/binomial symbols, the H(p,q) dimension
// count and terminating hypergeometric series. Floating-point routines use
// stable recurrences; exact routines return Rational / RationalPoly.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "bargmann/rational.hpp"

namespace bargmann {

/// Raised by hyp3f2_terminating when a bottom-parameter Pochhammer symbol
/// vanishes before the series terminates.
class PoleError : public std::domain_error {
 public:
  PoleError(int term_index, const std::string& what)
      : std::domain_error(what), term_index_(term_index) {}
  int term_index() const noexcept { return term_index_; }

 private:
  int term_index_;
};

/// L_k^{(alpha)}(x) by the three-term recurrence in k. Requires alpha > -1.
double laguerre(int k, double alpha, double x);

/// Exact coefficients of L_k^{(alpha)}, built by the same recurrence in
/// rational arithmetic.
RationalPoly laguerre_exact(int k, const Rational& alpha);

/// Rescaled Laguerre function k! Gamma(alpha+1) / Gamma(k+alpha+1) e^{-u/2} L_k^{(alpha)}(u).
/// Equals 1 at u = 0.
double script_laguerre(int k, double alpha, double u);

/// P_k^{(alpha,beta)}(x) / P_k^{(alpha,beta)}(1).
double jacobi_normalized(int k, double alpha, double beta, double x);

/// Disk polynomial R^{gamma}_{p,q}(xi) on the closed unit disk.
std::complex<double> disk_polynomial(int p, int q, double gamma, std::complex<double> xi);

/// Rising factorial (a)_k.
Rational pochhammer(const Rational& a, int k);
double pochhammer(double a, int k);

Rational factorial(int n);

/// Binomial coefficient with the finite-sum convention: 0 for k < 0 and for
/// a >= 0 with k > a. Negative a uses the falling-factorial extension.
Rational binomial_general(long a, long k);
/// Rational top argument; integral values defer to the integer overload.
Rational binomial_general(const Rational& a, long k);

/// d(n; p, q), the dimension of the bigraded spherical-harmonic space H(p,q)
/// on S^{2n-1}. Requires n >= 2.
std::uint64_t dimension_hpq(int n, int p, int q);
Rational dimension_hpq_exact(int n, int p, int q);

/// J_nu(x) for integer nu >= 0 and x >= 0. Ascending series accumulated in
/// multiprecision floating point so the cancellation at larger x is exact to
/// double precision.
double bessel_j(int nu, double x);

/// 1F1(-k; b; u) as a finite sum. Throws std::domain_error when b is a
/// non-positive integer in [-k+1, 0].
double hyp1f1_terminating(int k, double b, double u);

/// 3F2(a1, a2, a3; b1, b2; 1), terminating. At least one top parameter must
/// be a non-positive integer. Throws PoleError when (b1)_j (b2)_j = 0 for a
/// term j that is still inside the series.
Rational hyp3f2_terminating(const Rational& a1, const Rational& a2, const Rational& a3,
                            const Rational& b1, const Rational& b2);

}  // namespace bargmann
