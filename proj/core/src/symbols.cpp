#include "bargmann/symbols.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "bargmann/quadrature.hpp"
#include "bargmann/specfun.hpp"

namespace bargmann {

SpaceParams::SpaceParams(int n, int m) : n_(n), m_(m) {
  if (n < 1) throw std::invalid_argument("SpaceParams: n must be >= 1");
  if (m < 0) throw std::invalid_argument("SpaceParams: m must be >= 0");
}

Rational SpaceParams::mass_factor() const { return factorial(m_) / pochhammer(Rational(n_), m_); }

std::string to_string(SymbolRep rep) {
  switch (rep) {
    case SymbolRep::Oracle: return "oracle";
    case SymbolRep::SigmaForm: return "sigma";
    case SymbolRep::KappaForm: return "kappa";
    case SymbolRep::FactoredForm: return "factored";
  }
  return "unknown";
}

SymbolRep symbol_rep_from_string(const std::string& name) {
  if (name == "oracle") return SymbolRep::Oracle;
  if (name == "sigma") return SymbolRep::SigmaForm;
  if (name == "kappa") return SymbolRep::KappaForm;
  if (name == "factored") return SymbolRep::FactoredForm;
  throw std::invalid_argument("unknown symbol representation '" + name + "'");
}

namespace {

RationalPoly squared_laguerre(SpaceParams params) {
  const RationalPoly l = laguerre_exact(params.m(), Rational(params.n() - 1));
  return l * l;
}

// sum_j coeffs[j] * L_j^{(alpha)}(t)
RationalPoly laguerre_combination(const std::vector<Rational>& coeffs, const Rational& alpha) {
  RationalPoly out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    out += laguerre_exact(static_cast<int>(j), alpha) * coeffs[j];
  }
  return out;
}

}  // namespace

std::vector<Rational> gamma_coeffs(SpaceParams params) {
  const RationalPoly sq = squared_laguerre(params);
  const int top = 2 * params.m();
  std::vector<Rational> gamma(static_cast<std::size_t>(top) + 1);
  for (int j = 0; j <= top; ++j) gamma[j] = sq.coeff(j) * factorial(j);
  return gamma;
}

std::vector<Rational> linearization_coeffs(SpaceParams params) {
  const Rational alpha(params.n() - 1);
  const int top = 2 * params.m();
  RationalPoly rest = squared_laguerre(params);
  std::vector<Rational> c(static_cast<std::size_t>(top) + 1);
  // The Laguerre basis is degree-triangular: peel off the top degree each step.
  for (int j = top; j >= 0; --j) {
    const RationalPoly basis = laguerre_exact(j, alpha);
    c[j] = rest.coeff(j) / basis.coeff(j);
    rest -= basis * c[j];
  }
  if (!rest.is_zero()) throw std::logic_error("linearization_coeffs: nonzero remainder");
  return c;
}

std::vector<Rational> sigma_coeffs_printed(SpaceParams params) {
  const int n = params.n();
  const int m = params.m();
  const Rational mass = params.mass_factor();
  std::vector<Rational> sigma(2 * static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= 2 * m; ++j) {
    Rational sum(0);
    for (int s = 0; s <= j; ++s) {
      sum += binomial_general(j, s) * binomial_general(m + n - 1, m - j + s) *
             binomial_general(m + n - 1, m - s);
    }
    sigma[j] = mass * sum;
  }
  return sigma;
}

std::vector<Rational> kappa_coeffs(SpaceParams params) {
  const Rational mass = params.mass_factor();
  std::vector<Rational> kappa = linearization_coeffs(params);
  for (std::size_t j = 0; j < kappa.size(); ++j) {
    const int jj = static_cast<int>(j);
    Rational f = mass / (factorial(jj) * pow(Rational(4), jj));
    if (j % 2 == 1) f = -f;
    kappa[j] *= f;
  }
  return kappa;
}

const CoeffTable& coeff_table(SpaceParams params) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<const CoeffTable>> memo;
  const auto key = std::make_pair(params.n(), params.m());
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return *it->second;
  }
  auto table = std::make_unique<const CoeffTable>(CoeffTable{params, gamma_coeffs(params),
                                                             sigma_coeffs_printed(params),
                                                             linearization_coeffs(params),
                                                             kappa_coeffs(params)});
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = memo.emplace(key, std::move(table));
  return *it->second;
}

namespace {

RationalPoly factored_form(SpaceParams params, bool literal_sign) {
  const int n = params.n();
  const int m = params.m();
  const Rational denom_n = pochhammer(Rational(n), m);
  RationalPoly out;
  for (int k = 0; k <= m; ++k) {
    const Rational coef =
        pochhammer(Rational(n - 1), k) * factorial(m - k) / (denom_n * factorial(k));
    if (coef.is_zero()) continue;
    const Rational sign = (literal_sign && k % 2 == 1) ? Rational(-1) : Rational(1);
    RationalPoly term = RationalPoly::monomial(k, sign * coef) *
                        laguerre_exact(m - k, Rational(k)) *
                        laguerre_exact(m - k, Rational(n - 1 + k));
    out += term;
  }
  return out;
}

}  // namespace

RationalPoly symbol_poly(SpaceParams params, SymbolRep rep) {
  const Rational alpha(params.n() - 1);
  switch (rep) {
    case SymbolRep::Oracle: {
      return laguerre_combination(gamma_coeffs(params), alpha) * params.mass_factor();
    }
    case SymbolRep::SigmaForm: {
      return laguerre_combination(sigma_coeffs_printed(params), alpha);
    }
    case SymbolRep::KappaForm: {
      const std::vector<Rational> kappa = kappa_coeffs(params);
      std::vector<Rational> coeffs(kappa.size());
      for (std::size_t j = 0; j < kappa.size(); ++j) {
        coeffs[j] = kappa[j] * pow(Rational(-4), static_cast<int>(j));
      }
      return RationalPoly(std::move(coeffs));
    }
    case SymbolRep::FactoredForm: return factored_form(params, false);
  }
  throw std::invalid_argument("symbol_poly: unknown representation");
}

RationalPoly factored_symbol_literal(SpaceParams params) { return factored_form(params, true); }

double SymbolEvaluator::operator()(double xi_norm_sq) const {
  const double t = 0.25 * xi_norm_sq;
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return std::exp(-t) * acc;
}

double hhat(SpaceParams params, double xi_norm_sq) {
  if (!(xi_norm_sq >= 0.0)) throw std::invalid_argument("hhat: |xi|^2 must be >= 0");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, SymbolEvaluator> memo;
  const auto key = std::make_pair(params.n(), params.m());
  std::unique_lock<std::mutex> lock(mutex);
  auto it = memo.find(key);
  if (it == memo.end()) {
    lock.unlock();
    SymbolEvaluator eval(params, SymbolRep::Oracle);
    lock.lock();
    it = memo.emplace(key, std::move(eval)).first;
  }
  const SymbolEvaluator eval = it->second;
  lock.unlock();
  return eval(xi_norm_sq);
}

double hhat_quadrature_oracle(int m, std::array<double, 2> xi, FourierQuadratureConfig cfg) {
  if (m < 0) throw std::invalid_argument("hhat_quadrature_oracle: m must be >= 0");
  const double norm = std::hypot(xi[0], xi[1]);
  if (norm > 10.0) {
    throw AccuracyError("hhat_quadrature_oracle: |xi| = " + std::to_string(norm) +
                        " exceeds 10, where the 1e-8 accuracy guarantee ends");
  }
  const QuadratureRule& rule = gauss_laguerre_cached(cfg.radial_nodes);
  const int na = cfg.angular_nodes;
  std::vector<double> cos_t(na);
  std::vector<double> sin_t(na);
  for (int k = 0; k < na; ++k) {
    const double th = 2.0 * std::numbers::pi * k / na;
    cos_t[k] = std::cos(th);
    sin_t[k] = std::sin(th);
  }
  // h_1,m(z) = pi^{-1} e^{-u} L_m(u)^2 with u = |z|^2; dz = (1/2) du dtheta.
  std::complex<double> total(0.0, 0.0);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double w = rule.weights[i];
    if (w == 0.0) continue;
    const double u = rule.nodes[i];
    const double l = laguerre(m, 0.0, u);
    const double r = std::sqrt(u);
    std::complex<double> ring(0.0, 0.0);
    for (int k = 0; k < na; ++k) {
      const double phase = -(xi[0] * r * cos_t[k] + xi[1] * r * sin_t[k]);
      ring += std::polar(1.0, phase);
    }
    total += w * l * l * ring / static_cast<double>(na);
  }
  return total.real();
}

Rational feldheim_A(int j, int k, int l, const Rational& alpha, const Rational& beta) {
  if (k < 0 || l < 0 || j < 0 || j > k + l) {
    throw std::invalid_argument("feldheim_A: need 0 <= j <= k + l");
  }
  Rational sum(0);
  for (int s = 0; s <= j; ++s) {
    sum += binomial_general(j, s) * binomial_general(Rational(k) + alpha, l - j + s) *
           binomial_general(Rational(l) + beta, k - s);
  }
  return ((k + l + j) % 2 == 0) ? sum : -sum;
}

std::vector<Rational> gamma_coeffs_printed(SpaceParams params) {
  const int m = params.m();
  const Rational a(params.n() - 1);
  std::vector<Rational> out(2 * static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= 2 * m; ++j) {
    const Rational v = feldheim_A(j, m, m, a, a);
    out[j] = (j % 2 == 0) ? v : -v;
  }
  return out;
}

namespace {

// Shared 3F2(j/2 - m, (j+1)/2 - m, j + n; j - m + 1, j - m + 1; 1); nullopt at
// poles, including the Gamma(j - m + 1) prefactor poles for j < m.
std::optional<Rational> printed_hyp(SpaceParams params, int j) {
  const int n = params.n();
  const int m = params.m();
  if (j - m + 1 <= 0) return std::nullopt;
  try {
    return hyp3f2_terminating(Rational(j, 2) - Rational(m), Rational(j + 1, 2) - Rational(m),
                              Rational(j + n), Rational(j - m + 1), Rational(j - m + 1));
  } catch (const PoleError&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<std::optional<Rational>> linearization_coeffs_printed(SpaceParams params) {
  const int m = params.m();
  std::vector<std::optional<Rational>> out(2 * static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= 2 * m; ++j) {
    const auto f = printed_hyp(params, j);
    if (!f) continue;
    const Rational gamma_sq = pow(factorial(j - m), 2);
    out[j] = pow(Rational(2), 2 * m - j) * pow(factorial(m), 2) * *f /
             (factorial(2 * m - j) * gamma_sq);
  }
  return out;
}

std::vector<std::optional<Rational>> kappa_coeffs_printed(SpaceParams params) {
  const int n = params.n();
  const int m = params.m();
  std::vector<std::optional<Rational>> out(2 * static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= 2 * m; ++j) {
    const auto f = printed_hyp(params, j);
    if (!f) continue;
    const Rational gamma_sq = pow(factorial(j - m), 2);
    Rational v = pow(Rational(2), 2 * m) * pow(factorial(m), 3) * *f /
                 (pochhammer(Rational(n), m) * factorial(j) * pow(Rational(2), 3 * j) *
                  factorial(2 * m - j) * gamma_sq);
    out[j] = (j % 2 == 0) ? v : -v;
  }
  return out;
}

}  // namespace bargmann
