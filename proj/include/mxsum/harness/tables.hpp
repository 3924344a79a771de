#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mxsum/algebraic.hpp"
#include "mxsum/direct_sum.hpp"
#include "mxsum/errors.hpp"
#include "mxsum/harness/parallel.hpp"
#include "mxsum/harness/report.hpp"
#include "mxsum/params.hpp"

namespace mxsum::harness {

inline constexpr double oracle_tol = 1e-15;
inline constexpr double error_cell_tol = 0.02;
inline constexpr double value_cell_tol = 1e-5;
inline constexpr double rotated_error_cell_tol = 0.05;

/// One reference cell: a relative error of the algebraic expansion truncated
/// at k, or (k absent) the value of the sum itself.
struct TableCell {
  std::string row_id;
  SeriesParams params;
  std::optional<int> k;
  double printed = 0.0;
  double tolerance = error_cell_tol;
};

struct TableSpec {
  int table_id = 1;
  std::string label;
  std::vector<TableCell> cells;
};

/// Angle convention for the rotated points of table 2: a = 6 e^{i pi phi} or a = 6 e^{i phi}.
enum class AngleConvention { pi_phi, phi };

inline std::string_view to_string(AngleConvention c) { return c == AngleConvention::pi_phi ? "pi_phi" : "phi"; }

inline std::optional<AngleConvention> parse_convention(std::string_view s) {
  if (s == "pi_phi") return AngleConvention::pi_phi;
  if (s == "phi") return AngleConvention::phi;
  return std::nullopt;
}

namespace detail {

inline std::string id_k(int k) { return "k=" + std::to_string(k); }

/// Cells of a k-by-a error grid followed by the value row.
inline std::vector<TableCell> grid_cells(Sign sign, double mu, double lambda, const std::vector<double>& a_values,
                                         const std::vector<int>& ks, const std::vector<std::vector<double>>& errors,
                                         const std::vector<double>& values) {
  std::vector<TableCell> cells;
  for (std::size_t r = 0; r < ks.size(); ++r) {
    for (std::size_t c = 0; c < a_values.size(); ++c) {
      cells.push_back({id_k(ks[r]), SeriesParams{mu, lambda, {a_values[c], 0.0}, sign}, ks[r], errors[r][c],
                       error_cell_tol});
    }
  }
  for (std::size_t c = 0; c < a_values.size(); ++c) {
    cells.push_back({"S", SeriesParams{mu, lambda, {a_values[c], 0.0}, sign}, std::nullopt, values[c], value_cell_tol});
  }
  return cells;
}

}  // namespace detail

/// Alternating sum, lambda = 1, mu = 1/2.
inline TableSpec table1_spec() {
  return {1, "1",
          detail::grid_cells(Sign::minus, 0.5, 1.0, {6, 8, 10}, {0, 1, 2, 4, 6, 8},
                             {{1.775e-3, 4.859e-4, 6.275e-4},
                              {5.148e-5, 1.593e-5, 6.455e-6},
                              {2.681e-6, 4.738e-7, 1.233e-7},
                              {5.156e-8, 1.959e-9, 1.713e-10},
                              {1.278e-8, 2.411e-10, 1.000e-11},
                              {3.294e-9, 3.834e-12, 7.940e-14}},
                             {1.22060e-1, 9.14725e-2, 7.31518e-2})};
}

/// Plain sum, lambda = 1, mu = 1/4.
inline TableSpec table3_spec() {
  return {3, "3",
          detail::grid_cells(Sign::plus, 0.25, 1.0, {10, 15, 20}, {0, 1, 2, 3, 4, 5},
                             {{2.959e-3, 1.358e-3, 7.736e-4},
                              {1.991e-4, 4.293e-5, 1.408e-5},
                              {3.864e-5, 3.962e-6, 7.525e-7},
                              {1.485e-5, 7.268e-7, 8.054e-8},
                              {9.491e-6, 2.214e-7, 1.433e-8},
                              {9.129e-6, 1.010e-7, 3.817e-9}},
                             {4.98789e-1, 4.07911e-1, 3.53467e-1})};
}

inline constexpr int table2_truncation = 8;

/// Alternating sum at |a| = 6 rotated by phi, truncation k = 8, three (mu, lambda) columns.
inline TableSpec table2_spec(AngleConvention convention) {
  const std::vector<double> phis{0.0, 0.10, 0.20, 0.30, 0.40};
  const std::vector<std::pair<double, double>> columns{{0.25, 0.5}, {0.75, 1.5}, {1.0 / 3.0, 0.2}};
  const std::vector<std::vector<double>> printed{{4.497e-9, 4.157e-10, 1.006e-8},
                                                 {8.383e-9, 2.293e-9, 2.798e-8},
                                                 {6.178e-8, 1.005e-8, 3.321e-7},
                                                 {2.088e-6, 1.098e-7, 1.667e-5},
                                                 {2.615e-4, 5.917e-6, 2.698e-3}};
  const std::vector<std::string> phi_ids{"0", "0.10", "0.20", "0.30", "0.40"};
  TableSpec spec{2, "2:" + std::string(to_string(convention)), {}};
  for (std::size_t r = 0; r < phis.size(); ++r) {
    const double angle = convention == AngleConvention::pi_phi ? std::numbers::pi * phis[r] : phis[r];
    const complex a = std::polar(6.0, angle);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto [mu, lambda] = columns[c];
      spec.cells.push_back({"phi=" + phi_ids[r], SeriesParams{mu, lambda, a, Sign::minus}, table2_truncation,
                            printed[r][c], r == 0 ? error_cell_tol : rotated_error_cell_tol});
    }
  }
  return spec;
}

/// Relative error of the algebraic expansion truncated at k against the oracle.
inline double algebraic_relative_error(const SeriesParams& p, int k) {
  const complex truth = direct_sum(p, oracle_tol).value;
  const complex approx = p.sign == Sign::minus ? algebraic_minus(p, k).value : algebraic_plus(p, k).value;
  return std::abs(approx - truth) / std::abs(truth);
}

inline ReportRow evaluate_cell(const TableSpec& spec, const TableCell& cell) {
  ReportRow row;
  row.table = spec.label;
  row.row_id = cell.row_id;
  row.sign = cell.params.sign;
  row.mu = cell.params.mu;
  row.lambda = cell.params.lambda;
  row.a = cell.params.a;
  row.k = cell.k;
  row.reference = cell.printed;
  row.computed = cell.k ? algebraic_relative_error(cell.params, *cell.k) : direct_sum(cell.params, oracle_tol).value.real();
  grade(row, cell.tolerance);
  return row;
}

/// Evaluates every cell (concurrently when allowed); rows follow cell order.
inline std::vector<ReportRow> reproduce(const TableSpec& spec) {
  return parallel_map<ReportRow>(spec.cells.size(), [&](std::size_t i) { return evaluate_cell(spec, spec.cells[i]); });
}

inline std::vector<ReportRow> reproduce_table1() { return reproduce(table1_spec()); }
inline std::vector<ReportRow> reproduce_table2(AngleConvention convention) { return reproduce(table2_spec(convention)); }
inline std::vector<ReportRow> reproduce_table3() { return reproduce(table3_spec()); }

inline bool all_pass(const std::vector<ReportRow>& rows) {
  for (const auto& r : rows) {
    if (!r.pass) return false;
  }
  return true;
}

/// Runs table 2 under both angle conventions.
struct Table2Resolution {
  std::vector<ReportRow> pi_phi_rows;
  std::vector<ReportRow> phi_rows;
  /// The convention under which every cell passes, if exactly one does.
  std::optional<AngleConvention> matching;
};

inline Table2Resolution resolve_table2_convention() {
  Table2Resolution out;
  out.pi_phi_rows = reproduce_table2(AngleConvention::pi_phi);
  out.phi_rows = reproduce_table2(AngleConvention::phi);
  const bool a = all_pass(out.pi_phi_rows);
  const bool b = all_pass(out.phi_rows);
  if (a != b) out.matching = a ? AngleConvention::pi_phi : AngleConvention::phi;
  return out;
}

inline std::vector<ReportRow> reproduce_table(int table_id, AngleConvention convention = AngleConvention::pi_phi) {
  switch (table_id) {
    case 1: return reproduce_table1();
    case 2: return reproduce_table2(convention);
    case 3: return reproduce_table3();
    default: throw precondition_error("reproduce_table: table id must be 1, 2 or 3");
  }
}

}  // namespace mxsum::harness
