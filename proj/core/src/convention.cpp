#include <stdexcept>
#include <utility>

#include "bargmann/symbols.hpp"

namespace bargmann {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ExactMatch: return "EXACT_MATCH";
    case Verdict::MatchUpToConvention: return "MATCH_UP_TO_CONVENTION";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::PoleUndefined: return "POLE_UNDEFINED";
  }
  return "UNKNOWN";
}

std::string Adjustment::describe() const {
  std::string out;
  if (alternating) out = "(-1)^j";
  if (scale != Rational(1)) {
    if (!out.empty()) out += " * ";
    out += scale.to_string();
  }
  return out.empty() ? "identity" : out;
}

const FamilyReport& ConventionReport::family(const std::string& name) const {
  for (const auto& f : families) {
    if (f.family == name) return f;
  }
  throw std::out_of_range("ConventionReport: no family '" + name + "'");
}

namespace {

Rational apply(const Adjustment& adj, const Rational& printed, std::size_t j) {
  Rational v = adj.scale * printed;
  return (adj.alternating && j % 2 == 1) ? -v : v;
}

bool fits_at(const Adjustment& adj, const FamilyReport& f, std::size_t j) {
  return f.printed[j] && apply(adj, *f.printed[j], j) == f.oracle[j];
}

// Only the shapes the derivation chain can produce: identity or (-1)^j,
// times 1 or m!/(n)_m.
std::vector<Adjustment> candidate_adjustments(SpaceParams params) {
  const Rational mass = params.mass_factor();
  std::vector<Adjustment> out{{false, Rational(1)}};
  if (mass != Rational(1)) out.push_back({false, mass});
  out.push_back({true, Rational(1)});
  if (mass != Rational(1)) out.push_back({true, mass});
  return out;
}

FamilyReport build_family(std::string name, std::vector<Rational> oracle,
                          std::vector<std::optional<Rational>> printed, SpaceParams params) {
  FamilyReport f;
  f.family = std::move(name);
  f.oracle = std::move(oracle);
  f.printed = std::move(printed);
  const std::size_t len = f.oracle.size();
  if (f.printed.size() != len) throw std::logic_error("convention_report: family length mismatch");

  f.pole_flags.resize(len);
  bool any_pole = false;
  bool any_value = false;
  for (std::size_t j = 0; j < len; ++j) {
    f.pole_flags[j] = !f.printed[j].has_value();
    any_pole = any_pole || f.pole_flags[j];
    any_value = any_value || !f.pole_flags[j];
  }

  if (any_value) {
    for (const Adjustment& adj : candidate_adjustments(params)) {
      bool ok = true;
      for (std::size_t j = 0; j < len && ok; ++j) {
        if (!f.pole_flags[j]) ok = fits_at(adj, f, j);
      }
      if (ok) {
        f.adjustment = adj;
        break;
      }
    }
  }

  if (any_pole) {
    f.verdict = (f.adjustment || !any_value) ? Verdict::PoleUndefined : Verdict::Mismatch;
  } else if (!f.adjustment) {
    f.verdict = Verdict::Mismatch;
  } else {
    f.verdict = (*f.adjustment == Adjustment{}) ? Verdict::ExactMatch : Verdict::MatchUpToConvention;
  }

  f.entry_verdicts.resize(len);
  for (std::size_t j = 0; j < len; ++j) {
    if (f.pole_flags[j]) {
      f.entry_verdicts[j] = Verdict::PoleUndefined;
    } else if (*f.printed[j] == f.oracle[j]) {
      f.entry_verdicts[j] = Verdict::ExactMatch;
    } else if (f.adjustment && fits_at(*f.adjustment, f, j)) {
      f.entry_verdicts[j] = Verdict::MatchUpToConvention;
    } else {
      f.entry_verdicts[j] = Verdict::Mismatch;
    }
  }
  return f;
}

std::vector<std::optional<Rational>> wrap(const std::vector<Rational>& v) {
  return {v.begin(), v.end()};
}

std::vector<Rational> padded_coeffs(const RationalPoly& p, std::size_t len) {
  std::vector<Rational> out(len);
  for (std::size_t j = 0; j < len; ++j) out[j] = p.coeff(static_cast<int>(j));
  return out;
}

}  // namespace

ConventionReport convention_report(SpaceParams params) {
  const CoeffTable& table = coeff_table(params);
  const std::size_t len = table.gamma.size();
  const Rational mass = params.mass_factor();

  ConventionReport report{params, {}};
  report.families.push_back(
      build_family("gamma", table.gamma, wrap(gamma_coeffs_printed(params)), params));

  // sigma must reproduce P(t) = sum sigma_j L_j^{(n-1)}(t).
  std::vector<Rational> sigma_required(len);
  for (std::size_t j = 0; j < len; ++j) sigma_required[j] = mass * table.gamma[j];
  report.families.push_back(build_family("sigma", sigma_required, wrap(table.sigma), params));

  report.families.push_back(
      build_family("c", table.c, linearization_coeffs_printed(params), params));
  report.families.push_back(
      build_family("kappa", table.kappa, kappa_coeffs_printed(params), params));
  report.families.push_back(
      build_family("factored", padded_coeffs(symbol_poly(params, SymbolRep::Oracle), len),
                   wrap(padded_coeffs(factored_symbol_literal(params), len)), params));
  return report;
}

nlohmann::ordered_json to_json(const FamilyReport& f, SpaceParams params) {
  nlohmann::ordered_json j;
  j["params"] = {{"n", params.n()}, {"m", params.m()}};
  j["family"] = f.family;
  auto oracle = nlohmann::ordered_json::array();
  for (const auto& v : f.oracle) oracle.push_back(v.to_string());
  j["oracle"] = std::move(oracle);
  auto printed = nlohmann::ordered_json::array();
  for (const auto& v : f.printed) {
    if (v) printed.push_back(v->to_string());
    else printed.push_back(nullptr);
  }
  j["printed"] = std::move(printed);
  if (f.adjustment) j["adjustment"] = f.adjustment->describe();
  else j["adjustment"] = nullptr;
  j["verdict"] = to_string(f.verdict);
  auto poles = nlohmann::ordered_json::array();
  for (bool b : f.pole_flags) poles.push_back(b);
  j["pole_flags"] = std::move(poles);
  auto entries = nlohmann::ordered_json::array();
  for (Verdict v : f.entry_verdicts) entries.push_back(to_string(v));
  j["entry_verdicts"] = std::move(entries);
  return j;
}

nlohmann::ordered_json to_json(const ConventionReport& report) {
  nlohmann::ordered_json j;
  j["params"] = {{"n", report.params.n()}, {"m", report.params.m()}};
  auto fams = nlohmann::ordered_json::array();
  for (const auto& f : report.families) fams.push_back(to_json(f, report.params));
  j["families"] = std::move(fams);
  return j;
}

}  // namespace bargmann
