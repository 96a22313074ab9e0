// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bem/model/system.hpp"

namespace bem
{

struct IntegratorConfig
{
  std::string scheme = "rk4";
  double cfl_number = 0.4;
  double t_max = 1.0;
  double sample_interval = 1.0;
  long max_steps = 10'000'000;
  // Replace the gradient part of E by the Gauss-law solution at every sample. Off by
  // default; each application is reported through IntegrationResult and std::clog.
  bool gauss_correction = false;

  void validate() const;
};

// dt = cfl * h / max(1, nu). Both characteristic speeds are of order one in scaled units.
double cfl_dt(const SpectralLayout &layout, const ModelParams &params,
              const IntegratorConfig &config);

using Tendency = std::function<State(const State &, double)>;

// One classical four-stage Runge-Kutta step of dU/dt = tendency(U, t).
State rk4_step(const State &U, double t, double dt, const Tendency &tendency);

// rk4_step with the model right-hand side.
State step(const State &U, double dt, const ModelParams &params);

// Called at t = 0 and at every sample time. Must not modify the state.
using Observer = std::function<void(double t, const State &U)>;

struct IntegrationResult
{
  State final_state;
  double final_time = 0.0;
  long steps = 0;
  double dt = 0.0;
  std::vector<double> sample_times;
  std::vector<double> gauss_corrections;  // times at which a correction was applied
};

// Advances from t = 0 to config.t_max. Each sample interval is split into equal steps no
// longer than cfl_dt, so samples land exactly on multiples of sample_interval (the final
// interval is shortened to end at t_max). Throws BlowUpDetected on density underflow or
// non-finite values, StepLimitExceeded when max_steps would be exceeded.
IntegrationResult integrate(const State &U0, const IntegratorConfig &config,
                            const ModelParams &params, const Observer &observer = {});

}  // namespace bem
