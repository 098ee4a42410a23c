#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sigmalab/experiments.hpp"
#include "sigmalab/fit.hpp"

namespace sigmalab {

/// %.17g; non-finite values become "nan", "inf" or "-inf".
std::string format_number(double v);

/// Streaming JSON writer. Numbers carry 17 significant digits; keys keep insertion order.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}

  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(long v);
  JsonWriter& value(bool v);
  JsonWriter& null();
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& array(const std::vector<double>& values);

 private:
  void separator();
  void write_string(std::string_view v);

  std::ostream& out_;
  std::vector<bool> first_;  // one entry per open container
  bool after_key_ = false;
};

void write_params(JsonWriter& json, const ModelParams& p);
void write_fit(JsonWriter& json, const FitResult& fit);

/// "# key: value" metadata lines, then the "t,E" header and one row per time.
void write_curve_csv(std::ostream& out, const ErrorCurve& curve, const std::optional<FitResult>& fit);

/// {schema_version, params, case, k, data, times, values, fit}.
void write_curve_json(std::ostream& out, const ErrorCurve& curve, const std::optional<FitResult>& fit);

}  // namespace sigmalab
