#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "bargmann/coherent.hpp"
#include "bargmann/grid_io.hpp"
#include "bargmann/transform.hpp"

namespace bargmann::cli {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

namespace {

constexpr int kMaxExactLevel = 64;

SpaceParams checked_params(int n, int m, int max_m = kMaxExactLevel) {
  if (n < 1) throw UsageError("n must be >= 1");
  if (m < 0) throw UsageError("m must be >= 0");
  if (m > max_m) throw UsageError("m must be <= " + std::to_string(max_m));
  return SpaceParams(n, m);
}

nlohmann::ordered_json rational_array(const std::vector<Rational>& v) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& r : v) a.push_back(r.to_string());
  return a;
}

void cmd_coeffs(int n, int m, const std::string& format, std::ostream& out) {
  const SpaceParams params = checked_params(n, m);
  const CoeffTable& table = coeff_table(params);
  const ConventionReport report = convention_report(params);
  if (format == "csv") {
    const FamilyReport& sigma = report.family("sigma");
    out << "j,gamma,sigma,c,kappa,verdict\n";
    for (std::size_t j = 0; j < table.gamma.size(); ++j) {
      out << j << ',' << table.gamma[j] << ',' << table.sigma[j] << ',' << table.c[j] << ','
          << table.kappa[j] << ',' << to_string(sigma.entry_verdicts[j]) << '\n';
    }
    return;
  }
  nlohmann::ordered_json j;
  j["params"] = {{"n", n}, {"m", m}};
  j["gamma"] = rational_array(table.gamma);
  j["sigma"] = rational_array(table.sigma);
  j["c"] = rational_array(table.c);
  j["kappa"] = rational_array(table.kappa);
  j["convention_report"] = to_json(report)["families"];
  out << j.dump(2) << '\n';
}

void cmd_symbol(int n, int m, double xi_norm, const std::string& rep, std::ostream& out) {
  const SpaceParams params = checked_params(n, m);
  if (!(xi_norm >= 0.0)) throw UsageError("--xi-norm must be >= 0");
  const SymbolEvaluator symbol(params, symbol_rep_from_string(rep));
  out << format_double(symbol(xi_norm * xi_norm)) << '\n';
}

void cmd_kernel(int n, int m, const std::vector<double>& z, const std::vector<double>& w, std::ostream& out) {
  const SpaceParams params = checked_params(n, m, 1000);
  const auto expected = static_cast<std::size_t>(2 * n);
  if (z.size() != expected || w.size() != expected) {
    throw UsageError("--z and --w need exactly 2n = " + std::to_string(expected) + " reals each");
  }
  const Complex k = reproducing_kernel(params, CPoint::from_reals(z), CPoint::from_reals(w));
  out << format_double(k.real()) << ' ' << format_double(k.imag()) << '\n';
}

int cmd_transform(const std::string& input, const std::string& output, int m, const std::string& method,
                  const std::string& rep_name, std::ostream& out) {
  checked_params(1, m);
  const SymbolRep rep = symbol_rep_from_string(rep_name);
  const GridFunction2D phi = read_grid(input);

  GridFunction2D result;
  if (method == "spectral") {
    result = berezin_spectral(phi, m, rep);
  } else {
    const DirectConfig cfg;
    std::vector<Complex> points;
    std::vector<std::pair<int, int>> where;
    for (int i = 0; i < phi.nx; ++i) {
      for (int j = 0; j < phi.ny; ++j) {
        const Complex z = phi.point(i, j);
        const double dist = std::min({z.real() - phi.xmin, phi.xmax - z.real(), z.imag() - phi.ymin,
                                      phi.ymax - z.imag()});
        if (dist >= cfg.margin) {
          points.push_back(z);
          where.emplace_back(i, j);
        }
      }
    }
    if (points.empty()) {
      throw BoundaryMarginError(cfg.margin, "direct method: no grid point lies at distance >= " +
                                                format_double(cfg.margin) + " from the boundary");
    }
    const std::vector<Complex> values = berezin_direct(phi, m, points, cfg);
    result = phi.congruent();
    for (std::size_t k = 0; k < values.size(); ++k) result.at(where[k].first, where[k].second) = values[k];
    result.metadata["method"] = "direct";
    result.metadata["rep"] = to_string(rep);
    result.metadata["m"] = m;
    result.metadata["warnings"] = nlohmann::ordered_json::array();
    result.metadata["direct_margin"] = cfg.margin;
    result.metadata["evaluated_points"] = values.size();
  }
  write_grid(result, output);
  const auto warnings = result.warnings();
  for (const auto& w : warnings) out << "warning: " << w << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Bargmann space toolkit: kernels, symbols and Berezin transforms"};
  app.require_subcommand(1);

  int n = 1;
  int m = 0;

  auto* coeffs = app.add_subcommand("coeffs", "Exact coefficient tables and convention report");
  std::string format = "json";
  coeffs->add_option("--n", n, "complex dimension")->required();
  coeffs->add_option("--m", m, "Landau level")->required();
  coeffs->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  VerifyOptions vopts;
  verify->add_option("--suite", vopts.suite)
      ->required()
      ->check(CLI::IsMember({"kernel", "addition", "symbols", "fourier", "coherent", "eigen", "all"}));
  verify->add_option("--n", vopts.n);
  verify->add_option("--m", vopts.m);
  verify->add_option("--tol", vopts.tol, "override every upper-bound tolerance")->check(CLI::PositiveNumber);

  auto* transform = app.add_subcommand("transform", "Apply B_m to a grid file");
  std::string input;
  std::string output;
  std::string method = "spectral";
  std::string rep = "oracle";
  transform->add_option("--input", input)->required();
  transform->add_option("--output", output)->required();
  transform->add_option("--m", m)->required();
  transform->add_option("--method", method)->check(CLI::IsMember({"spectral", "direct"}));
  transform->add_option("--rep", rep)->check(CLI::IsMember({"oracle", "sigma", "kappa", "factored"}));

  auto* kernel = app.add_subcommand("kernel", "Evaluate K_m(z, w)");
  std::vector<double> z;
  std::vector<double> w;
  kernel->add_option("--n", n)->required();
  kernel->add_option("--m", m)->required();
  kernel->add_option("--z", z, "2n reals")->required();
  kernel->add_option("--w", w, "2n reals")->required();

  auto* symbol = app.add_subcommand("symbol", "Evaluate the multiplier hhat_m at |xi|");
  double xi_norm = 0.0;
  std::string symbol_rep = "oracle";
  symbol->add_option("--n", n)->required();
  symbol->add_option("--m", m)->required();
  symbol->add_option("--xi-norm", xi_norm)->required();
  symbol->add_option("--rep", symbol_rep)->check(CLI::IsMember({"oracle", "sigma", "kappa", "factored"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (coeffs->parsed()) {
      cmd_coeffs(n, m, format, out);
      return kExitOk;
    }
    if (verify->parsed()) {
      const nlohmann::ordered_json report = run_verify(vopts);
      out << report.dump(2) << '\n';
      return report["pass"].get<bool>() ? kExitOk : kExitFailure;
    }
    if (transform->parsed()) return cmd_transform(input, output, m, method, rep, out);
    if (kernel->parsed()) {
      cmd_kernel(n, m, z, w, out);
      return kExitOk;
    }
    if (symbol->parsed()) {
      cmd_symbol(n, m, xi_norm, symbol_rep, out);
      return kExitOk;
    }
  } catch (const BoundaryMarginError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const AccuracyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const GridFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace bargmann::cli
