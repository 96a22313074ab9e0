// SPDX-License-Identifier: Apache-2.0

#include "bem/model/params.hpp"

#include <cmath>
#include <string>

#include "bem/errors.hpp"

namespace bem
{

ModelParams::ModelParams(double gamma, Vec3 b_infinity, bool nonlinear)
  : gamma_(gamma), b_inf_(b_infinity), nonlinear_(nonlinear)
{
  if (!std::isfinite(gamma) || gamma < 1.0)
  {
    throw ConfigError("gamma must be >= 1, got " + std::to_string(gamma));
  }
  for (double b : b_inf_)
  {
    if (!std::isfinite(b))
    {
      throw ConfigError("background magnetic field must be finite");
    }
  }
  mu_ = 0.5 * (gamma - 1.0);
  nu_ = 1.0 / std::sqrt(gamma);
  if (mu_ > 0.0)
  {
    const double p = 1.0 / mu_;
    const double rounded = std::round(p);
    if (rounded >= 1.0 && rounded <= 64.0 && std::abs(p - rounded) < 1e-12 * p)
    {
      poly_degree_ = int(rounded);
    }
  }
}

}  // namespace bem
