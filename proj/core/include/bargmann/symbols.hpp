#pragma once

// Fourier multiplier of the Landau-level Berezin transform B_m.
//
// With t = |xi|^2 / 4 the multiplier is hhat_m(xi) = e^{-t} P_{n,m}(t) for a
// degree-2m polynomial P_{n,m} with P_{n,m}(0) = 1. The coefficient families
// that describe P are defined here by exact polynomial algebra (the oracle);
// the printed closed forms are evaluated separately and reconciled in
// convention_report().

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bargmann/rational.hpp"

namespace bargmann {

/// Complex dimension n >= 1 and Landau level m >= 0.
class SpaceParams {
 public:
  SpaceParams(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }

  /// m! / (n)_m, the normalizing constant of h_m.
  Rational mass_factor() const;

  friend auto operator<=>(const SpaceParams&, const SpaceParams&) = default;

 private:
  int n_;
  int m_;
};

enum class SymbolRep {
  Oracle,        // sum_j gamma_j L_j^{(n-1)}(t) from the monomial expansion
  SigmaForm,     // printed sigma_j in the Laguerre basis, literal
  KappaForm,     // powers of the Laplacian, Delta -> -4t
  FactoredForm,  // product-of-Laguerre form with (-Delta/4)^k -> t^k
};

std::string to_string(SymbolRep rep);
SymbolRep symbol_rep_from_string(const std::string& name);

struct CoeffTable {
  SpaceParams params;
  std::vector<Rational> gamma;  // (L_m^{(n-1)}(u))^2 = sum gamma_j u^j / j!
  std::vector<Rational> sigma;  // printed Laguerre-basis coefficients, literal
  std::vector<Rational> c;      // (L_m^{(n-1)})^2 = sum c_j L_j^{(n-1)}
  std::vector<Rational> kappa;  // multiplier = e^{-|xi|^2/4} sum kappa_j (-|xi|^2)^j
};

std::vector<Rational> gamma_coeffs(SpaceParams params);
std::vector<Rational> linearization_coeffs(SpaceParams params);
std::vector<Rational> sigma_coeffs_printed(SpaceParams params);
std::vector<Rational> kappa_coeffs(SpaceParams params);

/// Built once per (n, m) and memoized; the returned reference stays valid for
/// the life of the process.
const CoeffTable& coeff_table(SpaceParams params);

/// Exact P_{n,m}(t) under the requested representation.
RationalPoly symbol_poly(SpaceParams params, SymbolRep rep);

/// The product-of-Laguerre form read with (Delta/4)^k -> (-t)^k. Differs from
/// the oracle whenever n >= 2 and m >= 1; kept for the convention report.
RationalPoly factored_symbol_literal(SpaceParams params);

/// e^{-t} P_{n,m}(t) at t = xi_norm_sq / 4, oracle polynomial.
double hhat(SpaceParams params, double xi_norm_sq);

/// Evaluates e^{-t} P(t) for a fixed polynomial; cheap to copy.
class SymbolEvaluator {
 public:
  explicit SymbolEvaluator(const RationalPoly& poly) : coeffs_(poly.to_doubles()) {}
  SymbolEvaluator(SpaceParams params, SymbolRep rep) : SymbolEvaluator(symbol_poly(params, rep)) {}

  double operator()(double xi_norm_sq) const;

 private:
  std::vector<double> coeffs_;
};

/// Raised when a numerical oracle is asked for a value outside the range
/// where its accuracy is guaranteed.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FourierQuadratureConfig {
  int radial_nodes = 200;   // Gauss-Laguerre in rho^2
  int angular_nodes = 256;  // trapezoid in angle
};

/// \int_{R^2} e^{-i<xi, z>} h_m(z) dz by polar quadrature (n = 1).
/// Throws AccuracyError for |xi| > 10.
double hhat_quadrature_oracle(int m, std::array<double, 2> xi, FourierQuadratureConfig cfg = {});

/// Feldheim coefficient A_j(k, l, alpha, beta), evaluated literally.
Rational feldheim_A(int j, int k, int l, const Rational& alpha, const Rational& beta);

/// Printed companions of the oracle families. Entries are nullopt where the
/// closed form has a pole (Gamma(j-m+1) factors or a vanishing 3F2 bottom
/// Pochhammer).
std::vector<Rational> gamma_coeffs_printed(SpaceParams params);
std::vector<std::optional<Rational>> linearization_coeffs_printed(SpaceParams params);
std::vector<std::optional<Rational>> kappa_coeffs_printed(SpaceParams params);

// --- Convention report -----------------------------------------------------

enum class Verdict { ExactMatch, MatchUpToConvention, Mismatch, PoleUndefined };

std::string to_string(Verdict v);

/// oracle_j = scale * (alternating ? (-1)^j : 1) * printed_j
struct Adjustment {
  bool alternating = false;
  Rational scale{1};

  std::string describe() const;
  friend bool operator==(const Adjustment&, const Adjustment&) = default;
};

struct FamilyReport {
  std::string family;
  std::vector<Rational> oracle;
  std::vector<std::optional<Rational>> printed;
  std::vector<bool> pole_flags;
  std::optional<Adjustment> adjustment;
  Verdict verdict = Verdict::Mismatch;
  std::vector<Verdict> entry_verdicts;
};

struct ConventionReport {
  SpaceParams params;
  std::vector<FamilyReport> families;

  const FamilyReport& family(const std::string& name) const;
};

/// Families: "gamma", "sigma", "c", "kappa", "factored".
ConventionReport convention_report(SpaceParams params);

/// {params, family, oracle, printed, adjustment, verdict, pole_flags,
///  entry_verdicts}; rationals as "p/q" strings, poles as null.
nlohmann::ordered_json to_json(const FamilyReport& report, SpaceParams params);
nlohmann::ordered_json to_json(const ConventionReport& report);

// --- Hankel-type integrals behind the multiplier ---------------------------

/// \int_0^\infty x^{2s+nu+1} e^{-x^2} J_nu(2 x sqrt(z)) dx by Gauss-Laguerre
/// quadrature in x^2.
double hankel_moment_quadrature(int s, int nu, double z, int nodes = 200);
/// (s!/2) e^{-z} z^{nu/2} L_s^{(nu)}(z)
double hankel_moment_closed(int s, int nu, double z);

/// \int_0^\infty e^{-x^2} x^{nu+1} L_s^{(nu)}(x^2) J_nu(x u) dx by quadrature.
double hankel_laguerre_quadrature(int s, int nu, double u, int nodes = 200);
/// (1/(2 s!)) (u/2)^{2s+nu} e^{-u^2/4}
double hankel_laguerre_closed(int s, int nu, double u);

}  // namespace bargmann
