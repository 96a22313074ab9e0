// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace bem
{

struct DecayFit
{
  std::string channel;
  double exponent = 0.0;
  double exponent_stderr = 0.0;
  double log_prefactor = 0.0;
  double window_t0 = 0.0;
  double window_t1 = 0.0;
  int samples = 0;
  // Coefficient of determination of the linear fit.
  double r_squared = 0.0;
  // Second derivative of log v against log(1 + t) from a quadratic least-squares fit.
  double curvature = 0.0;
  // |curvature| times the window width in log(1 + t) exceeds 0.2: the window is not yet in
  // a single power-law regime.
  bool curvature_flag = false;
  // Zero for sources without a box.
  double saturation_time = 0.0;
  // False when the window reaches past the box-saturation time.
  bool valid = true;
  std::string note;
};

inline constexpr int kMinimumFitSamples = 10;
inline constexpr double kCurvatureFlagThreshold = 0.2;

// Least-squares slope of log v against log(1 + t) over the samples with t0 <= t <= t1.
// Throws InsufficientSamples with fewer than kMinimumFitSamples samples in the window and
// NonPositiveValues if any of them is not strictly positive. When saturation_time is
// positive and t1 exceeds it, the fit is still computed but marked invalid.
DecayFit fit_decay_exponent(const std::vector<double> &t, const std::vector<double> &v, double t0,
                            double t1, double saturation_time = 0.0,
                            const std::string &channel = {});

}  // namespace bem
