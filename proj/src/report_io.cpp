#include "sigmalab/report_io.hpp"

#include <cmath>
#include <cstdio>

namespace sigmalab {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void JsonWriter::separator() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (first_.empty()) return;
  if (!first_.back()) out_ << ',';
  first_.back() = false;
}

JsonWriter& JsonWriter::begin_object() {
  separator();
  out_ << '{';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  first_.pop_back();
  out_ << '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separator();
  out_ << '[';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  first_.pop_back();
  out_ << ']';
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
  separator();
  write_string(k);
  out_ << ':';
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  separator();
  // JSON has no non-finite literals.
  out_ << (std::isfinite(v) ? format_number(v) : std::string("null"));
  return *this;
}

JsonWriter& JsonWriter::value(int v) {
  separator();
  out_ << v;
  return *this;
}

JsonWriter& JsonWriter::value(long v) {
  separator();
  out_ << v;
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  separator();
  out_ << (v ? "true" : "false");
  return *this;
}

JsonWriter& JsonWriter::null() {
  separator();
  out_ << "null";
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
  separator();
  write_string(v);
  return *this;
}

void JsonWriter::write_string(std::string_view v) {
  out_ << '"';
  for (char c : v) {
    switch (c) {
      case '"': out_ << "\\\""; break;
      case '\\': out_ << "\\\\"; break;
      case '\n': out_ << "\\n"; break;
      case '\t': out_ << "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out_ << buf;
        } else {
          out_ << c;
        }
    }
  }
  out_ << '"';
}

JsonWriter& JsonWriter::array(const std::vector<double>& values) {
  begin_array();
  for (double v : values) value(v);
  return end_array();
}

void write_params(JsonWriter& json, const ModelParams& p) {
  json.begin_object()
      .key("n").value(p.n)
      .key("sigma").value(p.sigma)
      .key("sigma1").value(p.sigma1)
      .key("sigma2").value(p.sigma2)
      .key("s").value(p.s)
      .end_object();
}

void write_fit(JsonWriter& json, const FitResult& fit) {
  json.begin_object()
      .key("slope").value(fit.slope)
      .key("intercept").value(fit.intercept)
      .key("target").value(fit.target)
      .key("gap").value(fit.gap)
      .key("residual").value(fit.max_residual)
      .end_object();
}

void write_curve_csv(std::ostream& out, const ErrorCurve& curve, const std::optional<FitResult>& fit) {
  const ModelParams& p = curve.params;
  out << "# schema_version: 1\n";
  out << "# n: " << p.n << '\n';
  out << "# sigma: " << format_number(p.sigma) << '\n';
  out << "# sigma1: " << format_number(p.sigma1) << '\n';
  out << "# sigma2: " << format_number(p.sigma2) << '\n';
  out << "# s: " << format_number(p.s) << '\n';
  out << "# case: " << to_string(curve.rate_case) << '\n';
  out << "# k: " << curve.k << '\n';
  out << "# data: " << curve.data.name() << " c=" << format_number(curve.data.u1.c)
      << " alpha=" << format_number(curve.data.u1.alpha) << '\n';
  out << "# target_rate: " << format_number(error_exponent(p, curve.k, curve.rate_case)) << '\n';
  out << "# fitted_slope: " << (fit ? format_number(fit->slope) : std::string("nan")) << '\n';
  out << "t,E\n";
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    out << format_number(curve.times[i]) << ',' << format_number(curve.values[i]) << '\n';
  }
}

void write_curve_json(std::ostream& out, const ErrorCurve& curve, const std::optional<FitResult>& fit) {
  JsonWriter json(out);
  json.begin_object().key("schema_version").value(1).key("params");
  write_params(json, curve.params);
  json.key("case").value(to_string(curve.rate_case))
      .key("k").value(curve.k)
      .key("data").begin_object()
      .key("preset").value(curve.data.name())
      .key("c").value(curve.data.u1.c)
      .key("alpha").value(curve.data.u1.alpha)
      .key("P1").value(curve.data.p1())
      .end_object()
      .key("times").array(curve.times)
      .key("values").array(curve.values)
      .key("fit");
  if (fit) {
    write_fit(json, *fit);
  } else {
    json.null();
  }
  json.end_object();
  out << '\n';
}

}  // namespace sigmalab
