#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigmalab/experiments.hpp"
#include "sigmalab/model.hpp"

namespace sigmalab {

/// Everything a CLI command needs. Defaults match the acceptance configuration
/// with σ₁ > 0.
struct RunConfig {
  ModelParams params{3, 1.0, 0.25, 0.75, 0.0};
  std::optional<RateCase> rate_case;  ///< natural_case(params) when unset
  int k_min = 0;
  int k_max = 2;
  std::string data_preset = "gaussian";
  double data_c = 1.0;
  double data_alpha = 1.0;
  double t_min = 10.0;
  double t_max = 1e4;
  int per_decade = 25;
  double tol = 1e-8;
  std::string out_dir = ".";
  std::vector<int> criteria;  ///< empty selects every criterion
  bool json = false;

  RateCase effective_case() const { return rate_case.value_or(natural_case(params)); }
  SpectralDataSpec data() const;
};

/// Parses a JSON document. Unknown keys and mistyped values raise Error{ConfigError}.
///
/// {"params": {"n", "sigma", "sigma1", "sigma2", "s"}, "case", "k" | "k_range": [lo, hi],
///  "data": {"preset", "c", "alpha"}, "t_grid": {"t_min", "t_max", "per_decade"},
///  "tol", "out", "criteria": [ids], "json"}
RunConfig parse_config(std::string_view json_text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Raises Error{ConfigError} naming the first invalid field.
void validate_config(const RunConfig& config);

}  // namespace sigmalab
