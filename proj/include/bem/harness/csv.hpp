// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bem/linear/decay_profile.hpp"
#include "bem/norms/functionals.hpp"

namespace bem
{

inline constexpr const char *kSourceSimulation = "simulation";
inline constexpr const char *kSourceLinear = "linear";

//
// Time series of registry functionals. Columns are "source", "t" and then the registry names
// in registry order; values that a source does not produce are NaN ("nan" in the file).
// Floats are written with 17 significant digits, so reading a file back gives the same
// doubles bit for bit.
//
struct SeriesTable
{
  std::vector<std::string> columns;  // registry names, without "source" and "t"
  std::vector<std::string> source;
  std::vector<double> t;
  std::vector<std::vector<double>> values;  // one row per sample, aligned with columns

  // Empty table with the full registry as columns.
  static SeriesTable with_registry();

  void append(const std::string &row_source, const FunctionalSample &sample);
  std::size_t rows() const { return t.size(); }
  std::size_t column_index(const std::string &name) const;
  bool has_source(const std::string &row_source) const;

  // (t, value) of one column restricted to one source, in row order.
  std::vector<double> times(const std::string &row_source) const;
  std::vector<double> column(const std::string &name, const std::string &row_source) const;
};

// Adds linear-oracle rows: channel X at k = 0 goes to column L2_X and at k = 1 to H1_X when
// such a column exists. Rows are added for every profile time.
void append_linear_profile(SeriesTable &table, const LinearDecayProfile &profile);

void write_csv(const SeriesTable &table, std::ostream &out);
SeriesTable read_csv(std::istream &in);

void write_csv_file(const SeriesTable &table, const std::string &path);
SeriesTable read_csv_file(const std::string &path);

}  // namespace bem
