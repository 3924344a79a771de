#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mxsum/errors.hpp"
#include "mxsum/params.hpp"

namespace mxsum::harness {

/// One compared cell of a reproduced table or check.
struct ReportRow {
  std::string table;
  std::string row_id;
  Sign sign = Sign::minus;
  double mu = 0.0;
  double lambda = 0.0;
  complex a{};
  /// Truncation index, absent for value cells.
  std::optional<int> k;
  double computed = 0.0;
  std::optional<double> reference;
  /// |computed - reference| / |reference|, NaN without a reference.
  double rel_error = std::numeric_limits<double>::quiet_NaN();
  bool pass = false;
  double tolerance_used = 0.0;
};

/// Fills rel_error and pass from computed, reference and tolerance.
inline void grade(ReportRow& r, double tolerance) {
  r.tolerance_used = tolerance;
  if (!r.reference) {
    r.pass = std::isfinite(r.computed);
    return;
  }
  r.rel_error = std::abs(r.computed - *r.reference) / std::abs(*r.reference);
  r.pass = r.rel_error <= tolerance;
}

enum class ReportFormat { csv, json };

inline constexpr std::string_view csv_header = "table,row_id,sign,mu,lambda,a_re,a_im,k,computed,reference,rel_error,pass";

/// Round-trip decimal form of a double.
inline std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << csv_header << '\n';
  for (const auto& r : rows) {
    out << r.table << ',' << r.row_id << ',' << to_string(r.sign) << ',' << format_number(r.mu) << ','
        << format_number(r.lambda) << ',' << format_number(r.a.real()) << ',' << format_number(r.a.imag()) << ','
        << (r.k ? std::to_string(*r.k) : std::string()) << ',' << format_number(r.computed) << ','
        << (r.reference ? format_number(*r.reference) : std::string()) << ','
        << (std::isnan(r.rel_error) ? std::string() : format_number(r.rel_error)) << ','
        << (r.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

inline nlohmann::json to_json(const ReportRow& r) {
  nlohmann::json j;
  j["table"] = r.table;
  j["row_id"] = r.row_id;
  j["sign"] = std::string(to_string(r.sign));
  j["mu"] = r.mu;
  j["lambda"] = r.lambda;
  j["a_re"] = r.a.real();
  j["a_im"] = r.a.imag();
  j["k"] = r.k ? nlohmann::json(*r.k) : nlohmann::json(nullptr);
  j["computed"] = r.computed;
  j["reference"] = r.reference ? nlohmann::json(*r.reference) : nlohmann::json(nullptr);
  j["rel_error"] = std::isnan(r.rel_error) ? nlohmann::json(nullptr) : nlohmann::json(r.rel_error);
  j["pass"] = r.pass;
  return j;
}

inline std::string to_json(const std::vector<ReportRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

/// Inverse of to_json; tolerance_used is not serialized and comes back as 0.
inline std::vector<ReportRow> rows_from_json(std::string_view text) {
  const auto arr = nlohmann::json::parse(text);
  std::vector<ReportRow> rows;
  for (const auto& j : arr) {
    ReportRow r;
    r.table = j.at("table").get<std::string>();
    r.row_id = j.at("row_id").get<std::string>();
    r.sign = j.at("sign").get<std::string>() == "plus" ? Sign::plus : Sign::minus;
    r.mu = j.at("mu").get<double>();
    r.lambda = j.at("lambda").get<double>();
    r.a = complex(j.at("a_re").get<double>(), j.at("a_im").get<double>());
    if (!j.at("k").is_null()) r.k = j.at("k").get<int>();
    r.computed = j.at("computed").get<double>();
    if (!j.at("reference").is_null()) r.reference = j.at("reference").get<double>();
    if (!j.at("rel_error").is_null()) r.rel_error = j.at("rel_error").get<double>();
    r.pass = j.at("pass").get<bool>();
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::string render_report(const std::vector<ReportRow>& rows, ReportFormat format) {
  return format == ReportFormat::csv ? to_csv(rows) : to_json(rows);
}

/// Writes the report to a file, or to standard output when destination is
/// empty or "-".
inline void emit_report(const std::vector<ReportRow>& rows, ReportFormat format, const std::string& destination) {
  const std::string text = render_report(rows, format);
  if (destination.empty() || destination == "-") {
    std::cout << text << std::flush;
    if (!std::cout) throw io_error("emit_report: failed writing to standard output");
    return;
  }
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) throw io_error("emit_report: cannot open " + destination);
  file << text;
  file.close();
  if (!file) throw io_error("emit_report: failed writing " + destination);
}

}  // namespace mxsum::harness
