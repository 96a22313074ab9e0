// SPDX-License-Identifier: Apache-2.0

#include "bem/dynamics/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "bem/errors.hpp"
#include "bem/field/spectral_ops.hpp"

namespace bem
{

void IntegratorConfig::validate() const
{
  if (scheme != "rk4")
  {
    throw ConfigError("unknown integration scheme '" + scheme + "'");
  }
  if (!(cfl_number > 0.0 && cfl_number <= 1.0))
  {
    throw ConfigError("cfl number must lie in (0, 1]");
  }
  if (!(t_max >= 0.0) || !std::isfinite(t_max))
  {
    throw ConfigError("t_max must be finite and non-negative");
  }
  if (!(sample_interval > 0.0))
  {
    throw ConfigError("sample interval must be positive");
  }
  if (max_steps <= 0)
  {
    throw ConfigError("max_steps must be positive");
  }
}

double cfl_dt(const SpectralLayout &layout, const ModelParams &params,
              const IntegratorConfig &config)
{
  config.validate();
  return config.cfl_number * layout.spacing() / std::max(1.0, params.nu());
}

State rk4_step(const State &U, double t, double dt, const Tendency &tendency)
{
  const State k1 = tendency(U, t);
  State stage = U;
  stage.axpy(0.5 * dt, k1);
  const State k2 = tendency(stage, t + 0.5 * dt);
  stage = U;
  stage.axpy(0.5 * dt, k2);
  const State k3 = tendency(stage, t + 0.5 * dt);
  stage = U;
  stage.axpy(dt, k3);
  const State k4 = tendency(stage, t + dt);

  State out = U;
  out.axpy(dt / 6.0, k1);
  out.axpy(dt / 3.0, k2);
  out.axpy(dt / 3.0, k3);
  out.axpy(dt / 6.0, k4);
  return out;
}

State step(const State &U, double dt, const ModelParams &params)
{
  if (!(dt > 0.0))
  {
    throw ConfigError("time step must be positive");
  }
  return rk4_step(U, 0.0, dt, [&params](const State &V, double) { return rhs(V, params); });
}

namespace
{

void apply_gauss_correction(State &U, const ModelParams &params)
{
  auto rho = params.nonlinear() ? -params.nu() * g_function(U.n1, U.n2, params)
                                : params.nu() * U.n2;
  U.E = solenoidal_project(U.E) + gauss_electric_field(remove_mean(rho));
}

}  // namespace

IntegrationResult integrate(const State &U0, const IntegratorConfig &config,
                            const ModelParams &params, const Observer &observer)
{
  const double dt_max = cfl_dt(U0.layout(), params, config);
  IntegrationResult result{U0, 0.0, 0, dt_max, {}, {}};
  State &U = result.final_state;

  auto sample = [&](double t) {
    if (config.gauss_correction && t > 0.0)
    {
      apply_gauss_correction(U, params);
      result.gauss_corrections.push_back(t);
      std::clog << "gauss correction applied at t = " << t << '\n';
    }
    result.sample_times.push_back(t);
    if (observer)
    {
      observer(t, U);
    }
  };

  sample(0.0);
  const long intervals =
    config.t_max > 0.0 ? long(std::ceil(config.t_max / config.sample_interval - 1e-9)) : 0;
  bool first = true;
  for (long i = 0; i < intervals; ++i)
  {
    const double t0 = double(i) * config.sample_interval;
    const double t1 = i + 1 == intervals ? config.t_max : double(i + 1) * config.sample_interval;
    const long n = std::max(1L, long(std::ceil((t1 - t0) / dt_max - 1e-9)));
    const double dt = (t1 - t0) / double(n);
    if (first)
    {
      result.dt = dt;
      first = false;
    }
    for (long j = 0; j < n; ++j)
    {
      const double t = t0 + double(j) * dt;
      if (result.steps >= config.max_steps)
      {
        throw StepLimitExceeded(t, config.max_steps);
      }
      try
      {
        U = step(U, dt, params);
      }
      catch (const DensityUnderflow &e)
      {
        throw BlowUpDetected(t + dt, e.what());
      }
      ++result.steps;
      if (!U.all_finite())
      {
        throw BlowUpDetected(t + dt, "non-finite field values");
      }
    }
    result.final_time = t1;
    sample(t1);
  }
  return result;
}

}  // namespace bem
