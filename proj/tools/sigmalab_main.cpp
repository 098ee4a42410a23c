#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sigmalab/commands.hpp"
#include "sigmalab/config.hpp"
#include "sigmalab/error.hpp"
#include "sigmalab/model.hpp"

namespace {

// Flags left unset keep the file or default value.
struct Overrides {
  std::string config_path;
  std::optional<int> dim;
  std::optional<double> sigma, sigma1, sigma2, s;
  std::optional<std::string> rate_case;
  std::optional<int> k, k_max;
  std::optional<std::string> data;
  std::optional<double> data_c, data_alpha;
  std::optional<double> t_min, t_max;
  std::optional<int> per_decade;
  std::optional<double> tol;
  std::optional<std::string> out;
  std::vector<int> criteria;
  bool json = false;
};

template <class T>
void apply(const std::optional<T>& flag, T& field) {
  if (flag) field = *flag;
}

sigmalab::RunConfig build_config(const Overrides& o, const CLI::App& app) {
  sigmalab::RunConfig c;
  if (!o.config_path.empty()) c = sigmalab::load_config_file(o.config_path);
  apply(o.dim, c.params.n);
  apply(o.sigma, c.params.sigma);
  apply(o.sigma1, c.params.sigma1);
  apply(o.sigma2, c.params.sigma2);
  apply(o.s, c.params.s);
  if (o.rate_case) {
    try {
      c.rate_case = sigmalab::parse_rate_case(*o.rate_case);
    } catch (const sigmalab::Error& e) {
      throw sigmalab::Error(sigmalab::Errc::ConfigError, e.what());
    }
  }
  if (o.k) c.k_min = c.k_max = *o.k;
  apply(o.k_max, c.k_max);
  apply(o.data, c.data_preset);
  apply(o.data_c, c.data_c);
  apply(o.data_alpha, c.data_alpha);
  apply(o.t_min, c.t_min);
  apply(o.t_max, c.t_max);
  apply(o.per_decade, c.per_decade);
  apply(o.tol, c.tol);
  apply(o.out, c.out_dir);
  if (app.count("--criteria") > 0) c.criteria = o.criteria;
  if (o.json) c.json = true;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asymptotic profiles and decay rates for doubly damped sigma-evolution equations"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Overrides o;
  app.add_option("--config", o.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--dim", o.dim, "space dimension n");
  app.add_option("--sigma", o.sigma, "order sigma of the elastic term");
  app.add_option("--sigma1", o.sigma1, "exponent of the parabolic-like damping");
  app.add_option("--sigma2", o.sigma2, "exponent of the sigma-evolution-like damping");
  app.add_option("--s", o.s, "Sobolev weight of the measured norm");
  app.add_option("--case", o.rate_case, "PositiveSigma1 or ZeroSigma1");
  app.add_option("--k", o.k, "profile order (sets k_min and k_max)");
  app.add_option("--k-max", o.k_max, "largest profile order");
  app.add_option("--data", o.data, "data preset: gaussian or moment_free");
  app.add_option("--data-c", o.data_c, "data amplitude");
  app.add_option("--data-alpha", o.data_alpha, "data width");
  app.add_option("--t-min", o.t_min, "first time of the grid");
  app.add_option("--t-max", o.t_max, "last time of the grid");
  app.add_option("--per-decade", o.per_decade, "grid points per decade");
  app.add_option("--tol", o.tol, "relative quadrature tolerance");
  app.add_option("--out", o.out, "output directory");
  app.add_option("--criteria", o.criteria, "criterion ids for verify")->delimiter(',');
  app.add_flag("--json", o.json, "machine-readable output");

  app.add_subcommand("validate", "check a configuration and print derived quantities");
  app.add_subcommand("rates", "print the error exponent for each k");
  app.add_subcommand("goldens", "compare jet profiles with the closed forms for k = 1, 2");
  app.add_subcommand("curve", "write error curves as CSV and JSON");
  app.add_subcommand("verify", "run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : sigmalab::ExitConfigError;
  }

  sigmalab::RunConfig config;
  try {
    config = build_config(o, app);
  } catch (const sigmalab::Error& e) {
    std::cerr << e.what() << '\n';
    return sigmalab::ExitConfigError;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  return sigmalab::run_command(command, config, std::cout, std::cerr);
}
