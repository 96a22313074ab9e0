// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bem/field/layout.hpp"
#include "bem/linear/decay_profile.hpp"
#include "bem/model/params.hpp"

namespace bem
{

enum class DataKind
{
  gaussian_bumps,
  band_limited_random
};

enum class RunMode
{
  nonlinear,
  linear,
  linear_quadrature
};

//
// Everything that defines one experiment. The text form is a flat list of `key = value`
// lines ('#' starts a comment); run_experiment stores it next to the CSV so that `fit` and
// `report` can rebuild the summary later.
//
struct RunConfig
{
  int resolution = 64;
  double box_length = 64.0;
  double gamma = 3.0;
  Vec3 b_infinity{0.0, 0.0, 0.0};
  // Target ||U0||_{H^3}.
  double amplitude = 1e-3;
  DataKind data_kind = DataKind::band_limited_random;
  // Low-frequency class: |U0_hat| ~ |xi|^(s - 3/2) near the origin.
  double s = 1.5;
  double cutoff_radius = 0.5;
  SpectrumClass spectrum = SpectrumClass::gaussian;
  // Include a random divergence-free part in E0 on top of the Gauss-law part.
  bool transverse_electric = true;

  double t_max = 20.0;
  double sample_interval = 0.5;
  double cfl = 0.4;
  long max_steps = 10'000'000;
  std::uint64_t seed = 1;
  RunMode mode = RunMode::nonlinear;
  bool gauss_correction = false;

  double fit_t0 = 5.0;
  double fit_t1 = 19.0;

  // linear_quadrature only
  int shells = 200;
  int directions = 50;
  int per_octave = 8;
  double t_first = 1.0;
  std::vector<int> k_values{0, 1};

  // acceptance thresholds applied by the summary
  double energy_tolerance = 1e-6;
  double dissipation_bound = 10.0;
  double divb_tolerance = 1e-11;
  double gauss_growth_tolerance = 1e-6;

  // Throws ConfigError on violated invariants (amplitude <= 0.05, L / N <= 1.5, ...).
  void validate() const;

  // Sets one key from its text value; throws ConfigError for unknown keys or bad values.
  void set(const std::string &key, const std::string &value);

  // Applies every `key = value` line of text on top of the current values.
  void apply(const std::string &text);

  std::string to_text() const;
  static RunConfig parse(const std::string &text);
  static RunConfig load(const std::string &path);

  ModelParams model() const
  {
    return ModelParams(gamma, b_infinity, mode == RunMode::nonlinear);
  }

  // Box-saturation estimate 0.3 L (scaled wave speeds are of order one).
  double saturation_time() const { return 0.3 * box_length; }
};

std::string to_string(DataKind kind);
std::string to_string(RunMode mode);
std::string to_string(SpectrumClass spectrum);

// Exact conversion from an L^p data class to the negative-order index s_p = 3 (1/p - 1/2),
// defined for 1 <= p <= 2.
double data_class_order(double p);

}  // namespace bem
