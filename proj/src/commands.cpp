#include "sigmalab/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "sigmalab/error.hpp"
#include "sigmalab/experiments.hpp"
#include "sigmalab/profiles.hpp"
#include "sigmalab/report_io.hpp"
#include "sigmalab/verify.hpp"

namespace sigmalab {

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

// Golden comparisons use t in {1, 10, 100} and 20 radii log-spaced over [ε*/1000, ε*].
constexpr double golden_tolerance = 1e-12;

double golden_deviation(const ModalSum& g0, const ModalSum& g1, int k, RateCase c, const ModelParams& p) {
  const double eps = cutoff_radius(p);
  double worst = 0.0;
  for (double t : {1.0, 10.0, 100.0}) {
    for (int i = 0; i < 20; ++i) {
      const double r = eps * std::pow(10.0, -3.0 * (19 - i) / 19.0);
      const ProfilePair jet = profile(k, c, p, t, r);
      const double e0 = g0.evaluate(t, r);
      const double e1 = g1.evaluate(t, r);
      worst = std::max(worst, std::abs(jet.p0 - e0) / (1.0 + std::abs(e0)));
      worst = std::max(worst, std::abs(jet.p1 - e1) / (1.0 + std::abs(e1)));
    }
  }
  return worst;
}

// Tail fits start at t = 100; shorter grids get no fit.
std::optional<FitResult> tail_fit(const ErrorCurve& curve) {
  std::size_t first = 0;
  while (first < curve.times.size() && curve.times[first] < 100.0) ++first;
  if (curve.times.size() - first < 5) return std::nullopt;
  try {
    return fit_slope(curve, first, curve.times.size());
  } catch (const Error& e) {
    if (e.code() == Errc::DegenerateFit) return std::nullopt;
    throw;
  }
}

}  // namespace

int cmd_validate(const RunConfig& config, std::ostream& out) {
  const ModelParams& p = config.params;
  const RateCase c = config.effective_case();
  const auto band = oscillation_band(p);
  if (config.json) {
    JsonWriter json(out);
    json.begin_object().key("schema_version").value(1).key("params");
    write_params(json, p);
    json.key("case").value(to_string(c))
        .key("delta").value(delta(p))
        .key("exponent_step").value(exponent_step(p, c))
        .key("eps_star").value(cutoff_radius(p))
        .key("band");
    if (band) {
      json.begin_object().key("r_low").value(band->r_low).key("r_high").value(band->r_high).end_object();
    } else {
      json.null();
    }
    json.key("data").value(config.data().name()).key("valid").value(true).end_object();
    out << '\n';
    return ExitOk;
  }
  out << "config valid\n";
  out << "  n=" << p.n << " sigma=" << format_number(p.sigma) << " sigma1=" << format_number(p.sigma1)
      << " sigma2=" << format_number(p.sigma2) << " s=" << format_number(p.s) << '\n';
  out << "  case " << to_string(c) << ", delta " << format_number(delta(p)) << ", step "
      << format_number(exponent_step(p, c)) << '\n';
  out << "  eps_star " << format_number(cutoff_radius(p)) << ", oscillation band ";
  if (band) {
    out << "[" << format_number(band->r_low) << ", " << format_number(band->r_high) << "]\n";
  } else {
    out << "empty\n";
  }
  out << "  data " << config.data().name() << ", k " << config.k_min << ".." << config.k_max << '\n';
  return ExitOk;
}

int cmd_rates(const RunConfig& config, std::ostream& out) {
  const RateCase c = config.effective_case();
  if (config.json) {
    JsonWriter json(out);
    json.begin_object().key("schema_version").value(1).key("params");
    write_params(json, config.params);
    json.key("case").value(to_string(c)).key("rates").begin_array();
    for (int k = config.k_min; k <= config.k_max; ++k) {
      json.begin_object().key("k").value(k).key("exponent").value(error_exponent(config.params, k, c)).end_object();
    }
    json.end_array().end_object();
    out << '\n';
    return ExitOk;
  }
  out << "k,exponent\n";
  for (int k = config.k_min; k <= config.k_max; ++k) {
    out << k << ',' << format_number(error_exponent(config.params, k, c)) << '\n';
  }
  return ExitOk;
}

int cmd_goldens(const RunConfig& config, std::ostream& out) {
  if (config.k_min < 1 || config.k_max > 2) {
    throw Error(Errc::ConfigError, "closed-form profiles exist for k = 1 and k = 2 only");
  }
  const RateCase c = config.effective_case();
  bool all_ok = true;
  std::optional<JsonWriter> json;
  if (config.json) {
    json.emplace(out);
    json->begin_object().key("schema_version").value(1).key("case").value(to_string(c)).key("checks").begin_array();
  }
  for (int k = config.k_min; k <= config.k_max; ++k) {
    const auto [g0, g1] = golden_modal(k, c, config.params);
    const double dev = golden_deviation(g0, g1, k, c, config.params);
    const bool ok = dev <= golden_tolerance;
    all_ok = all_ok && ok;
    const int flags = g0.corrected_count() + g1.corrected_count();
    if (json) {
      json->begin_object().key("k").value(k).key("max_deviation").value(dev).key("tolerance").value(golden_tolerance)
          .key("corrected_terms").value(flags).key("passed").value(ok).end_object();
      continue;
    }
    out << (ok ? "PASS" : "FAIL") << " k=" << k << ' ' << to_string(c) << " max_deviation " << fmt("%.3e", dev)
        << " corrected_terms " << flags << '\n';
    for (int index = 0; index < 2; ++index) {
      const ModalSum& sum = index == 0 ? g0 : g1;
      for (std::size_t i = 0; i < sum.terms.size(); ++i) {
        const ModalTerm& term = sum.terms[i];
        if (term.provenance != Provenance::Corrected) continue;
        out << "  corrected: u" << index << " term " << i << " coef " << format_number(term.coef) << " r^"
            << format_number(term.r_power) << " t^" << term.t_power << " exp(-r^" << format_number(term.decay_power)
            << " t)\n";
      }
    }
  }
  if (json) {
    json->end_array().key("passed").value(all_ok).end_object();
    out << '\n';
  }
  return all_ok ? ExitOk : ExitSuiteFailure;
}

int cmd_curve(const RunConfig& config, std::ostream& out) {
  const RateCase c = config.effective_case();
  const SpectralDataSpec data = config.data();
  const std::vector<double> times = geometric_grid(config.t_min, config.t_max, config.per_decade);

  // Curves are independent; results are written in ascending k.
  std::vector<std::future<ErrorCurve>> jobs;
  for (int k = config.k_min; k <= config.k_max; ++k) {
    jobs.push_back(std::async(std::launch::async, [&config, &data, &times, c, k] {
      return error_curve(config.params, c, k, data, times, config.tol);
    }));
  }

  std::filesystem::create_directories(config.out_dir);
  for (auto& job : jobs) {
    const ErrorCurve curve = job.get();
    const std::optional<FitResult> fit = tail_fit(curve);
    const std::string stem = "curve_k" + std::to_string(curve.k) + "_" + data.name();
    const std::filesystem::path dir(config.out_dir);
    std::ofstream csv(dir / (stem + ".csv"));
    std::ofstream js(dir / (stem + ".json"));
    if (!csv || !js) throw Error(Errc::InvalidArgument, "cannot write into '" + config.out_dir + "'");
    write_curve_csv(csv, curve, fit);
    write_curve_json(js, curve, fit);
    out << "wrote " << (dir / (stem + ".csv")).string() << " and .json";
    if (fit) out << ", slope " << fmt("%.4f", fit->slope) << " target " << fmt("%.4f", fit->target);
    out << '\n';
  }
  return ExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const std::vector<CriterionResult> results = run_criteria(config.criteria, config.tol);
  bool all_ok = true;
  for (const CriterionResult& r : results) all_ok = all_ok && r.passed;
  if (config.json) {
    JsonWriter json(out);
    json.begin_object().key("schema_version").value(1).key("criteria").begin_array();
    for (const CriterionResult& r : results) {
      json.begin_object().key("id").value(r.id).key("title").value(r.title).key("passed").value(r.passed)
          .key("detail").value(r.detail).end_object();
    }
    json.end_array().key("passed").value(all_ok).end_object();
    out << '\n';
  } else {
    for (const CriterionResult& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.title << ": " << r.detail << '\n';
    }
  }
  return all_ok ? ExitOk : ExitSuiteFailure;
}

int run_command(std::string_view name, const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate_config(config);
    if (name == "validate") return cmd_validate(config, out);
    if (name == "rates") return cmd_rates(config, out);
    if (name == "goldens") return cmd_goldens(config, out);
    if (name == "curve") return cmd_curve(config, out);
    if (name == "verify") return cmd_verify(config, out);
    err << "unknown command '" << name << "'\n";
    return ExitConfigError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == Errc::ConfigError ? ExitConfigError : ExitComputationError;
  } catch (const std::exception& e) {
    err << "ComputationError: " << e.what() << '\n';
    return ExitComputationError;
  }
}

}  // namespace sigmalab
