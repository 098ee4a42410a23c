#include "sigmalab/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "sigmalab/error.hpp"
#include "sigmalab/jet2.hpp"
#include "sigmalab/verify.hpp"

namespace sigmalab {

namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& what) { throw Error(Errc::ConfigError, what); }

void reject_unknown(const json& object, std::string_view where, std::initializer_list<std::string_view> known) {
  if (!object.is_object()) config_error(std::string(where) + " must be an object");
  for (const auto& [key, value] : object.items()) {
    bool found = false;
    for (std::string_view k : known) found = found || key == k;
    if (!found) config_error("unknown key '" + key + "' in " + std::string(where));
  }
}

double get_number(const json& object, const char* key, double fallback) {
  if (!object.contains(key)) return fallback;
  const json& v = object.at(key);
  if (!v.is_number()) config_error(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

int get_int(const json& object, const char* key, int fallback) {
  if (!object.contains(key)) return fallback;
  const json& v = object.at(key);
  if (!v.is_number_integer()) config_error(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

std::string get_string(const json& object, const char* key, const std::string& fallback) {
  if (!object.contains(key)) return fallback;
  const json& v = object.at(key);
  if (!v.is_string()) config_error(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

SpectralDataSpec RunConfig::data() const { return parse_data_preset(data_preset, data_c, data_alpha); }

RunConfig parse_config(std::string_view json_text, RunConfig base) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    config_error(std::string("malformed JSON: ") + e.what());
  }
  reject_unknown(doc, "config",
                 {"params", "case", "k", "k_range", "data", "t_grid", "tol", "out", "criteria", "json"});

  RunConfig c = std::move(base);
  if (doc.contains("params")) {
    const json& p = doc["params"];
    reject_unknown(p, "params", {"n", "sigma", "sigma1", "sigma2", "s"});
    c.params.n = get_int(p, "n", c.params.n);
    c.params.sigma = get_number(p, "sigma", c.params.sigma);
    c.params.sigma1 = get_number(p, "sigma1", c.params.sigma1);
    c.params.sigma2 = get_number(p, "sigma2", c.params.sigma2);
    c.params.s = get_number(p, "s", c.params.s);
  }
  if (doc.contains("case")) {
    try {
      c.rate_case = parse_rate_case(get_string(doc, "case", ""));
    } catch (const Error& e) {
      config_error(e.what());
    }
  }
  if (doc.contains("k") && doc.contains("k_range")) config_error("give either 'k' or 'k_range', not both");
  if (doc.contains("k")) c.k_min = c.k_max = get_int(doc, "k", 0);
  if (doc.contains("k_range")) {
    const json& kr = doc["k_range"];
    if (!kr.is_array() || kr.size() != 2 || !kr[0].is_number_integer() || !kr[1].is_number_integer()) {
      config_error("'k_range' must be [lo, hi] integers");
    }
    c.k_min = kr[0].get<int>();
    c.k_max = kr[1].get<int>();
  }
  if (doc.contains("data")) {
    const json& d = doc["data"];
    reject_unknown(d, "data", {"preset", "c", "alpha"});
    c.data_preset = get_string(d, "preset", c.data_preset);
    c.data_c = get_number(d, "c", c.data_c);
    c.data_alpha = get_number(d, "alpha", c.data_alpha);
  }
  if (doc.contains("t_grid")) {
    const json& g = doc["t_grid"];
    reject_unknown(g, "t_grid", {"t_min", "t_max", "per_decade"});
    c.t_min = get_number(g, "t_min", c.t_min);
    c.t_max = get_number(g, "t_max", c.t_max);
    c.per_decade = get_int(g, "per_decade", c.per_decade);
  }
  c.tol = get_number(doc, "tol", c.tol);
  c.out_dir = get_string(doc, "out", c.out_dir);
  if (doc.contains("criteria")) {
    const json& ids = doc["criteria"];
    if (!ids.is_array()) config_error("'criteria' must be an array of integers");
    c.criteria.clear();
    for (const json& id : ids) {
      if (!id.is_number_integer()) config_error("'criteria' must be an array of integers");
      c.criteria.push_back(id.get<int>());
    }
  }
  if (doc.contains("json")) {
    if (!doc["json"].is_boolean()) config_error("'json' must be a boolean");
    c.json = doc["json"].get<bool>();
  }
  return c;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) config_error("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), std::move(base));
}

void validate_config(const RunConfig& c) {
  try {
    validate(c.params, c.effective_case());
    (void)c.data();
  } catch (const Error& e) {
    config_error(e.what());
  }
  if (c.k_min < 0 || c.k_max < c.k_min) config_error("need 0 <= k_min <= k_max");
  if (c.k_max > Jet2::max_order + 1) config_error("k above 9 exceeds the supported jet order");
  if (!(c.t_min > 0.0) || !(c.t_max >= c.t_min)) config_error("need 0 < t_min <= t_max");
  if (c.per_decade < 1) config_error("per_decade must be at least 1");
  if (!(c.tol > 0.0) || !(c.tol < 1.0)) config_error("tol must lie in (0, 1)");
  if (c.out_dir.empty()) config_error("output directory must not be empty");
  for (int id : c.criteria) {
    if (id < 1 || id > criterion_count) config_error("criterion ids run from 1 to 10");
  }
}

}  // namespace sigmalab
