// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bem/harness/csv.hpp"
#include "bem/harness/decay_fit.hpp"
#include "bem/harness/run_config.hpp"

namespace bem
{

// Two exponents closer than this cannot be ordered by the quadrature (its exponents move by
// up to this much when the shell or direction count is doubled).
inline constexpr double kExponentResolution = 0.02;
// Tolerance of the quadrature exponents against the closed-form rates.
inline constexpr double kQuadratureExponentTolerance = 0.1;

struct CheckResult
{
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
  // Informational checks are reported but do not decide the overall verdict.
  bool gating = true;
  std::string detail;
};

struct ChannelFit
{
  std::string source;
  std::string column;
  bool ok = false;
  DecayFit fit;
  std::string error;
};

struct Summary
{
  std::vector<ChannelFit> fits;
  std::vector<CheckResult> checks;
  bool pass = false;

  const ChannelFit &fit(const std::string &source, const std::string &column) const;
  const CheckResult &check(const std::string &name) const;
};

// Fits and checks computed from the table alone, so a stored CSV reproduces them exactly.
Summary summarize(const RunConfig &config, const SeriesTable &table);

// The JSON document written as summary.json: configuration echo, build identifier, column
// descriptions, fits, checks and the overall verdict.
nlohmann::json summary_json(const RunConfig &config, const Summary &summary);

struct RunInfo
{
  long steps = 0;
  double dt = 0.0;
  double neutrality_shift = 0.0;
  double initial_h3_norm = 0.0;
  double wall_seconds = 0.0;
  std::vector<double> gauss_corrections;
};

struct Report
{
  RunConfig config;
  SeriesTable table;
  Summary summary;
  RunInfo info;
};

// Integrates the configured run (or evaluates the linear quadrature), samples the registry
// functionals, and summarizes. Dynamics errors propagate.
Report run_experiment(const RunConfig &config);

// Writes config.txt, series.csv, summary.json and run_info.json into dir (created if
// missing).
void write_report(const Report &report, const std::string &dir);

// Rebuilds the summary of a directory written by write_report.
Summary summarize_directory(const std::string &dir, RunConfig *config_out = nullptr);

// Identifier of the source tree this binary was built from.
std::string build_identifier();

// Least-squares fit of one table column over the configured window. Samples that are not
// positive normal doubles are treated as unresolved and dropped before fitting.
ChannelFit fit_column(const SeriesTable &table, const std::string &source,
                      const std::string &column, double t0, double t1, double saturation_time);

}  // namespace bem
