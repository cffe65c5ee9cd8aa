#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "bargmann/coherent.hpp"
#include "bargmann/specfun.hpp"
#include "bargmann/transform.hpp"
#include "cli.hpp"

namespace bargmann::cli {

namespace {

constexpr int kMaxVerifyLevel = 6;
constexpr std::uint64_t kSeed = 20240611;

struct Case {
  std::string name;
  double measured;
  double tol;
  bool lower_bound = false;  // pass iff measured >= tol
};

using Cases = std::vector<Case>;

CPoint random_point(std::mt19937_64& rng, int n, double r_min, double r_max) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> radius(r_min, r_max);
  std::vector<Complex> c(n);
  for (auto& v : c) v = {gauss(rng), gauss(rng)};
  CPoint p(std::move(c));
  return (radius(rng) / p.norm()) * p;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

Cases kernel_suite(SpaceParams params) {
  const int n = params.n();
  const int m = params.m();
  std::mt19937_64 rng(kSeed);
  double series = 0.0;
  double herm = 0.0;
  double diag = 0.0;
  for (int k = 0; k < 20; ++k) {
    const CPoint z = random_point(rng, n, 0.2, 1.5);
    const CPoint w = random_point(rng, n, 0.2, 1.5);
    const Complex closed = reproducing_kernel(params, z, w);
    series = std::max(series, rel(kernel_series(params, z, w, 80), closed));
    herm = std::max(herm, rel(std::conj(reproducing_kernel(params, w, z)), closed));
    const double expected = std::exp(z.norm_sq()) * laguerre(m, n - 1, 0.0) / std::pow(std::numbers::pi, n);
    diag = std::max(diag, rel(kernel_series(params, z, z, 80), expected));
  }
  int unequal = 0;
  for (int p = 0; p <= 6; ++p) {
    for (int q = 0; q <= m; ++q) unequal += coeff_identity_C(params, p, q).equal ? 0 : 1;
  }
  std::vector<CPoint> pts;
  for (int k = 0; k < 6; ++k) pts.push_back(random_point(rng, n, 0.0, 1.5));
  const GramSpectrum g = gram_spectrum(params, pts);
  const double psd = std::max(0.0, -g.eigenvalues.front() / g.trace);
  return {{"series_vs_closed_form", series, 1e-7},
          {"series_diagonal", diag, 1e-7},
          {"coeff_identity_C_mismatches", static_cast<double>(unequal), 0.0},
          {"hermitian_symmetry", herm, 1e-13},
          {"gram_negative_eigenvalue", psd, 1e-10}};
}

Cases addition_suite(SpaceParams params) {
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw = [&](double sigma, int s) {
    const double x = 2.0 * unit(rng);
    const double y = 2.0 * unit(rng);
    const double r = unit(rng);
    const double psi = 2.0 * std::numbers::pi * unit(rng);
    return addition_formula_residual(sigma, s, x, y, r, psi, 80);
  };
  double worst = 0.0;
  for (int s = 0; s <= 3; ++s) {
    for (double sigma : {1.0, 2.0}) {
      for (int k = 0; k < 10; ++k) worst = std::max(worst, draw(sigma, s));
    }
  }
  Cases out{{"koornwinder_residual_kmax80", worst, 1e-8}};
  if (params.n() >= 2) {
    double own_level = 0.0;
    for (int k = 0; k < 10; ++k) own_level = std::max(own_level, draw(params.n() - 1.0, params.m()));
    out.push_back({"koornwinder_residual_s_eq_m", own_level, 1e-8});
  }
  return out;
}

double fourier_consistency(int m) {
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double r = 8.0 * k / 49.0;
    const double th = 2.399963 * k;  // golden-angle spread of directions
    worst = std::max(worst, std::abs(hhat(SpaceParams(1, m), r * r) -
                                     hhat_quadrature_oracle(m, {r * std::cos(th), r * std::sin(th)})));
  }
  return worst;
}

Cases symbols_suite(SpaceParams params) {
  const RationalPoly oracle = symbol_poly(params, SymbolRep::Oracle);
  const bool reps = oracle == symbol_poly(params, SymbolRep::KappaForm) &&
                    oracle == symbol_poly(params, SymbolRep::FactoredForm);
  const Rational mass0 = oracle(Rational(0));

  const CoeffTable& table = coeff_table(params);
  Rational mass_sum;
  for (std::size_t j = 0; j < table.gamma.size(); ++j) {
    mass_sum += table.gamma[j] * binomial_general(static_cast<long>(params.n() - 1 + j), static_cast<long>(j));
  }
  const bool mass_identity = mass_sum * params.mass_factor() == Rational(1);

  // sum_j m!/(n)_m c_j (-1)^j / (j! 4^j) (-u)^j with u = 4t must be the oracle P(t).
  RationalPoly rearranged;
  for (std::size_t j = 0; j < table.c.size(); ++j) {
    const int jj = static_cast<int>(j);
    const Rational kappa = params.mass_factor() * table.c[j] * pow(Rational(-1), jj) /
                           (factorial(jj) * pow(Rational(4), jj));
    rearranged += RationalPoly::monomial(jj, kappa * pow(Rational(-4), jj));
  }
  const RationalPoly lag = laguerre_exact(params.m(), Rational(params.n() - 1));
  RationalPoly linearized;
  for (std::size_t j = 0; j < table.c.size(); ++j) {
    linearized += table.c[j] * laguerre_exact(static_cast<int>(j), Rational(params.n() - 1));
  }

  Cases out{{"representation_equivalence_mismatches", reps ? 0.0 : 1.0, 0.0},
            {"unit_mass_abs_err", std::abs((mass0 - Rational(1)).to_double()), 0.0},
            {"mass_identity_mismatches", mass_identity ? 0.0 : 1.0, 0.0},
            {"degree_deficit", std::abs(oracle.degree() - 2.0 * params.m()), 0.0},
            {"linearization_mismatches", linearized == lag * lag ? 0.0 : 1.0, 0.0},
            {"kappa_rearrangement_mismatches", rearranged == oracle ? 0.0 : 1.0, 0.0}};
  if (params.n() == 1) out.push_back({"fourier_consistency", fourier_consistency(params.m()), 1e-7});
  return out;
}

double interior_dev(const GridFunction2D& g, const std::function<Complex(Complex)>& expected, double radius) {
  double worst = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.ny; ++j) {
      const Complex z = g.point(i, j);
      if (std::abs(z) <= radius) worst = std::max(worst, std::abs(g.at(i, j) - expected(z)));
    }
  }
  return worst;
}

Cases fourier_suite(SpaceParams params) {
  const int m = params.m();
  double h519 = 0.0;
  double h529 = 0.0;
  for (int s = 0; s <= 3; ++s) {
    for (int nu = 0; nu <= 2; ++nu) {
      for (double z : {0.5, 1.0, 2.0}) {
        h519 = std::max(h519, std::abs(hankel_moment_quadrature(s, nu, z) - hankel_moment_closed(s, nu, z)));
        h529 = std::max(h529, std::abs(hankel_laguerre_quadrature(s, nu, 2 * z) - hankel_laguerre_closed(s, nu, 2 * z)));
      }
    }
  }

  const auto one = [](Complex) { return Complex(1.0); };
  const GridFunction2D constant = GridFunction2D::sample(128, 128, -8, 8, -8, 8, one);
  const double fixed = interior_dev(berezin_spectral(constant, m), one, 1.0);

  const auto gauss = [](Complex w) { return Complex(std::exp(-std::norm(w))); };
  const GridFunction2D bump = GridFunction2D::sample(128, 128, -8, 8, -8, 8, gauss);
  const double heat = interior_dev(berezin_spectral(bump, 0),
                                   [](Complex w) { return Complex(0.5 * std::exp(-0.5 * std::norm(w))); }, 1e9);

  const GridFunction2D big = GridFunction2D::sample(161, 161, -10, 10, -10, 10, gauss);
  const GridFunction2D spectral = berezin_spectral(big, m);
  std::vector<Complex> pts;
  std::vector<Complex> ref;
  for (int k = 0; k < 20; ++k) {
    const int i = 56 + (k * 7) % 48;
    const int j = 56 + (k * 13) % 48;
    pts.push_back(big.point(i, j));
    ref.push_back(spectral.at(i, j));
  }
  const std::vector<Complex> direct = berezin_direct(big, m, pts);
  double agree = 0.0;
  for (std::size_t k = 0; k < pts.size(); ++k) agree = std::max(agree, std::abs(direct[k] - ref[k]));

  return {{"hhat_vs_quadrature", fourier_consistency(m), 1e-7},
          {"hankel_moment_identity", h519, 1e-8},
          {"hankel_laguerre_identity", h529, 1e-8},
          {"fixed_point_constant", fixed, 1e-6},
          {"heat_flow_m0", heat, 1e-6},
          {"backend_agreement", agree, 1e-5}};
}

Cases coherent_suite(SpaceParams params) {
  const int n = params.n();
  const int m = params.m();
  std::mt19937_64 rng(kSeed + 2);
  double self = 0.0;
  double bound = 0.0;
  double herm = 0.0;
  double squared_overlap = 0.0;
  for (int k = 0; k < 100; ++k) {
    const CPoint z = random_point(rng, n, 0.0, 2.0);
    const CPoint w = random_point(rng, n, 0.0, 2.0);
    const Complex ov = overlap(params, z, w);
    self = std::max(self, std::abs(overlap(params, z, z) - 1.0));
    bound = std::max(bound, std::abs(ov) - 1.0);
    herm = std::max(herm, std::abs(ov - std::conj(overlap(params, w, z))));
    const double lag = laguerre(m, n - 1, (z - w).norm_sq());
    const double rhs = std::exp(2.0 * hermitian_inner(z, w).real()) * lag * lag / std::pow(std::numbers::pi, 2 * n);
    const double lhs = std::norm(ov) * normalization_factor(params, z) * normalization_factor(params, w);
    squared_overlap = std::max(squared_overlap, std::abs(lhs - rhs) / std::max(rhs, 1e-300));
  }
  Cases out{{"overlap_self", self, 1e-12},
            {"overlap_modulus_excess", std::max(bound, 0.0), 1e-12},
            {"overlap_hermitian", herm, 1e-13},
            {"squared_overlap_identity", squared_overlap, 1e-12}};
  if (n != 1) return out;

  double res = 0.0;
  for (Complex z : {Complex(0, 0), Complex(1.0, 0.5), Complex(-0.3, 1.4), Complex(1.5, 0)}) {
    res = std::max(res, std::abs(resolution_check(m, CPoint{z}, std::abs(z) + 10.0) - 1.0));
  }
  out.push_back({"resolution_of_identity", res, 1e-6});
  out.push_back({"expectation_unit_mass",
                 std::abs(expectation_quadrature(m, [](Complex) { return Complex(1.0); }, CPoint{Complex(0.4, -0.2)}) - 1.0),
                 1e-10});

  const auto bump = [](Complex w) { return Complex(std::exp(-0.5 * std::norm(w - Complex(0.3, -0.2)))); };
  const GridFunction2D grid = GridFunction2D::sample(128, 128, -8, 8, -8, 8, bump);
  const GridFunction2D spectral = berezin_spectral(grid, m);
  double agree = 0.0;
  for (int k = 0; k < 10; ++k) {
    const int i = 52 + 3 * k;
    const int j = 70 - 2 * k;
    agree = std::max(agree, std::abs(expectation_quadrature(m, bump, CPoint{grid.point(i, j)}) - spectral.at(i, j)));
  }
  out.push_back({"expectation_vs_spectral", agree, 1e-6});
  return out;
}

Cases eigen_suite(SpaceParams params) {
  const int m = params.m();
  const Complex w0(0.4, -0.3);
  std::vector<double> errs;
  for (int nodes : {41, 81, 161}) {
    const GridFunction2D psi = GridFunction2D::sample(nodes, nodes, -2, 2, -2, 2, [&](Complex z) {
      return reproducing_kernel(params, CPoint{z}, CPoint{w0});
    });
    const GridFunction2D out = tilde_delta_apply(psi);
    double num = 0.0;
    double den = 0.0;
    for (int i = 0; i < nodes; ++i) {
      for (int j = 0; j < nodes; ++j) {
        const Complex z = psi.point(i, j);
        if (std::abs(z.real()) > 1.0 || std::abs(z.imag()) > 1.0) continue;
        num = std::max(num, std::abs(out.at(i, j) - static_cast<double>(m) * psi.at(i, j)));
        den = std::max(den, std::abs(psi.at(i, j)));
      }
    }
    errs.push_back(num / den);
  }
  // For m = 0 the stencil error can sit at rounding level, where an observed
  // order means nothing; the order case only applies above that floor.
  const double order = std::log2(errs[1] / errs[2]);
  const GridFunction2D ones = GridFunction2D::sample(16, 16, -1, 1, -1, 1, [](Complex) { return Complex(1.0); });
  const GridFunction2D lap = tilde_delta_apply(ones);
  double constant = 0.0;
  for (const Complex& v : lap.values) constant = std::max(constant, std::abs(v));

  Cases out{{"eigen_rel_err_finest", errs[2], 5e-3}, {"constant_annihilated", constant, 1e-12}};
  if (errs[2] > 1e-10) out.push_back({"observed_order", order, 1.8, true});
  return out;
}

nlohmann::ordered_json to_json_cases(const Cases& cases, const std::string& prefix, double tol_override,
                                     bool& pass) {
  auto arr = nlohmann::ordered_json::array();
  for (const Case& c : cases) {
    const double tol = (!c.lower_bound && tol_override >= 0.0) ? tol_override : c.tol;
    const bool ok = c.lower_bound ? c.measured >= tol : c.measured <= tol;
    pass = pass && ok;
    nlohmann::ordered_json j;
    j["name"] = prefix + c.name;
    j["status"] = ok ? "pass" : "fail";
    j["measured"] = c.measured;
    j["tol"] = tol;
    j["bound"] = c.lower_bound ? "lower" : "upper";
    arr.push_back(std::move(j));
  }
  return arr;
}

using SuiteFn = Cases (*)(SpaceParams);

struct Suite {
  const char* name;
  SuiteFn fn;
  bool needs_plane;     // n = 1 only
  bool needs_sphere;    // n >= 2 only
};

constexpr Suite kSuites[] = {
    {"kernel", kernel_suite, false, true},      {"addition", addition_suite, false, false},
    {"symbols", symbols_suite, false, false},   {"fourier", fourier_suite, true, false},
    {"coherent", coherent_suite, false, false}, {"eigen", eigen_suite, true, false},
};

}  // namespace

nlohmann::ordered_json run_verify(const VerifyOptions& opts) {
  if (opts.n < 1 || opts.n > 6) throw UsageError("verify: n must be in [1, 6]");
  if (opts.m < 0 || opts.m > kMaxVerifyLevel) {
    throw UsageError("verify: m must be in [0, " + std::to_string(kMaxVerifyLevel) + "]");
  }
  const SpaceParams params(opts.n, opts.m);

  nlohmann::ordered_json report;
  report["suite"] = opts.suite;
  report["params"] = {{"n", opts.n}, {"m", opts.m}};
  auto cases = nlohmann::ordered_json::array();
  bool pass = true;
  const bool all = opts.suite == "all";
  bool matched = false;
  for (const Suite& s : kSuites) {
    if (!all && opts.suite != s.name) continue;
    matched = true;
    const bool applicable = !(s.needs_plane && opts.n != 1) && !(s.needs_sphere && opts.n < 2);
    if (!applicable) {
      if (all) continue;
      throw UsageError(std::string("verify: suite '") + s.name + "' requires " +
                       (s.needs_plane ? "n = 1" : "n >= 2"));
    }
    for (auto& c : to_json_cases(s.fn(params), all ? std::string(s.name) + "/" : "", opts.tol, pass)) {
      cases.push_back(std::move(c));
    }
  }
  if (!matched) throw UsageError("verify: unknown suite '" + opts.suite + "'");
  report["cases"] = std::move(cases);
  report["pass"] = pass;
  return report;
}

}  // namespace bargmann::cli
