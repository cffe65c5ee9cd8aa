#include "bargmann/specfun.hpp"

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bargmann {

namespace {

void require_alpha(double alpha, const char* who) {
  if (!(alpha > -1.0)) throw std::invalid_argument(std::string(who) + ": parameter must be > -1");
}

// Points whose modulus exceeds 1 by no more than this are treated as lying on
// the unit circle.
constexpr double kUnitDiskSlack = 1e-14;

std::complex<double> ipow(std::complex<double> z, int e) {
  std::complex<double> r(1.0, 0.0);
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

}  // namespace

double laguerre(int k, double alpha, double x) {
  if (k < 0) throw std::invalid_argument("laguerre: negative degree");
  require_alpha(alpha, "laguerre");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int j = 1; j < k; ++j) {
    const double next = ((2.0 * j + 1.0 + alpha - x) * cur - (j + alpha) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

RationalPoly laguerre_exact(int k, const Rational& alpha) {
  if (k < 0) throw std::invalid_argument("laguerre_exact: negative degree");
  RationalPoly prev = RationalPoly::constant(1);
  if (k == 0) return prev;
  RationalPoly cur({alpha + 1, Rational(-1)});
  const RationalPoly t = RationalPoly::monomial(1);
  for (int j = 1; j < k; ++j) {
    RationalPoly next = cur * (Rational(2 * j + 1) + alpha) - t * cur - prev * (Rational(j) + alpha);
    next *= Rational(1, j + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double script_laguerre(int k, double alpha, double u) {
  // k! / (alpha+1)_k, formed as a running product to stay in range.
  double scale = 1.0;
  for (int i = 1; i <= k; ++i) scale *= i / (alpha + i);
  return scale * std::exp(-0.5 * u) * laguerre(k, alpha, u);
}

double jacobi_normalized(int k, double alpha, double beta, double x) {
  if (k < 0) throw std::invalid_argument("jacobi_normalized: negative degree");
  require_alpha(alpha, "jacobi_normalized");
  require_alpha(beta, "jacobi_normalized");
  if (k == 0 || x == 1.0) return 1.0;

  const double ab = alpha + beta;
  double prev = 1.0;
  double cur = (alpha + 1.0) + 0.5 * (ab + 2.0) * (x - 1.0);
  for (int n = 1; n < k; ++n) {
    const double c2n = 2.0 * n + ab;
    const double a1 = 2.0 * (n + 1) * (n + ab + 1.0) * c2n;
    const double a2 = (c2n + 1.0) * (alpha * alpha - beta * beta);
    const double a3 = c2n * (c2n + 1.0) * (c2n + 2.0);
    const double a4 = 2.0 * (n + alpha) * (n + beta) * (c2n + 2.0);
    const double next = ((a2 + a3 * x) * cur - a4 * prev) / a1;
    prev = cur;
    cur = next;
  }
  // P_k(1) = (alpha+1)_k / k!
  double at_one = 1.0;
  for (int i = 1; i <= k; ++i) at_one *= (alpha + i) / i;
  return cur / at_one;
}

std::complex<double> disk_polynomial(int p, int q, double gamma, std::complex<double> xi) {
  if (p < 0 || q < 0) throw std::invalid_argument("disk_polynomial: negative index");
  const double r = std::abs(xi);
  if (!(r <= 1.0 + kUnitDiskSlack)) {
    throw std::domain_error("disk_polynomial: |xi| > 1 is outside the closed unit disk");
  }
  const double r2 = std::min(r * r, 1.0);
  const std::complex<double> phase = p >= q ? ipow(xi, p - q) : ipow(std::conj(xi), q - p);
  return phase * jacobi_normalized(std::min(p, q), gamma, std::abs(p - q), 2.0 * r2 - 1.0);
}

Rational pochhammer(const Rational& a, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational result(1);
  Rational f = a;
  for (int i = 0; i < k; ++i) {
    result *= f;
    f += 1;
  }
  return result;
}

double pochhammer(double a, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative length");
  double result = 1.0;
  for (int i = 0; i < k; ++i) result *= a + i;
  return result;
}

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

Rational binomial_general(long a, long k) {
  if (k < 0) return Rational(0);
  if (a >= 0) {
    if (k > a) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
    return Rational(mpq_class(b));
  }
  // a < 0: a(a-1)...(a-k+1)/k! = (-1)^k C(k-a-1, k)
  Rational b = binomial_general(k - a - 1, k);
  return (k % 2 == 0) ? b : -b;
}

Rational binomial_general(const Rational& a, long k) {
  if (a.is_integer()) return binomial_general(a.to_long(), k);
  if (k < 0) return Rational(0);
  Rational num(1);
  for (long i = 0; i < k; ++i) num *= a - Rational(i);
  return num / factorial(static_cast<int>(k));
}

Rational dimension_hpq_exact(int n, int p, int q) {
  if (n < 2) {
    throw std::invalid_argument("dimension_hpq: n >= 2 required (the count contains (n-2)!)");
  }
  if (p < 0 || q < 0) throw std::invalid_argument("dimension_hpq: negative bidegree");
  return Rational(p + q + n - 1) * factorial(p + n - 2) * factorial(q + n - 2) /
         (factorial(p) * factorial(q) * factorial(n - 1) * factorial(n - 2));
}

std::uint64_t dimension_hpq(int n, int p, int q) {
  const Rational d = dimension_hpq_exact(n, p, q);
  const mpz_class num = d.numerator();
  if (!d.is_integer() || !num.fits_ulong_p()) {
    throw std::overflow_error("dimension_hpq: value does not fit in 64 bits");
  }
  return num.get_ui();
}

double bessel_j(int nu, double x) {
  if (nu < 0) throw std::invalid_argument("bessel_j: order must be >= 0");
  if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument("bessel_j: x must be finite and >= 0");
  if (x == 0.0) return nu == 0 ? 1.0 : 0.0;

  // The largest series term is about e^x; keep 2x + 96 bits so the alternating
  // sum retains full double precision after cancellation.
  const auto bits = static_cast<mp_bitcnt_t>(96.0 + 2.0 * x);
  mpf_class half_x(x, bits);
  half_x /= 2;
  mpf_class q(0, bits);
  q = half_x * half_x;

  mpf_class term(1, bits);
  for (int i = 1; i <= nu; ++i) {
    term *= half_x;
    term /= static_cast<unsigned long>(i);
  }
  mpf_class sum(term, bits);
  mpf_class mag(0, bits);
  mpf_class bound(0, bits);

  const long past_peak = static_cast<long>(x / 2.0) + 2;
  for (long k = 1; k < 100000; ++k) {
    term *= q;
    term /= static_cast<unsigned long>(k) * static_cast<unsigned long>(k + nu);
    term = -term;
    sum += term;
    if (k > past_peak) {
      mag = abs(term);
      bound = abs(sum);
      mpf_div_2exp(bound.get_mpf_t(), bound.get_mpf_t(), 80);
      if (mag <= bound || sgn(term) == 0) break;
    }
  }
  return sum.get_d();
}

double hyp1f1_terminating(int k, double b, double u) {
  if (k < 0) throw std::invalid_argument("hyp1f1_terminating: k must be >= 0");
  if (b <= 0.0 && b == std::floor(b) && b >= -(k - 1.0)) {
    throw std::domain_error("hyp1f1_terminating: bottom parameter hits a pole inside the series");
  }
  double term = 1.0;
  double sum = 1.0;
  for (int i = 0; i < k; ++i) {
    term *= (-k + i) / (b + i) * u / (i + 1.0);
    sum += term;
  }
  return sum;
}

Rational hyp3f2_terminating(const Rational& a1, const Rational& a2, const Rational& a3,
                            const Rational& b1, const Rational& b2) {
  long last = std::numeric_limits<long>::max();
  for (const Rational* a : {&a1, &a2, &a3}) {
    if (a->is_integer() && a->sign() <= 0) last = std::min(last, -a->to_long());
  }
  if (last == std::numeric_limits<long>::max()) {
    throw std::invalid_argument("hyp3f2_terminating: no top parameter is a non-positive integer");
  }

  Rational term(1);
  Rational sum(1);
  for (long j = 1; j <= last; ++j) {
    const Rational s(j - 1);
    const Rational d1 = b1 + s;
    const Rational d2 = b2 + s;
    if (d1.is_zero() || d2.is_zero()) {
      throw PoleError(static_cast<int>(j), "hyp3f2_terminating: bottom Pochhammer vanishes at term " +
                                               std::to_string(j));
    }
    term *= (a1 + s) * (a2 + s) * (a3 + s) / (d1 * d2 * Rational(j));
    sum += term;
  }
  return sum;
}

}  // namespace bargmann
