// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "bem/field/layout.hpp"

namespace bem
{

// Parameters of the scaled two-fluid system. Relaxation times, Debye length and light speed
// are all normalized to one, so only the adiabatic exponent and the background magnetic
// field remain free. mu and nu are derived from gamma and cannot be set on their own.
class ModelParams
{
public:
  explicit ModelParams(double gamma = 3.0, Vec3 b_infinity = {0.0, 0.0, 0.0},
                       bool nonlinear = true);

  double gamma() const { return gamma_; }
  // (gamma - 1) / 2
  double mu() const { return mu_; }
  // 1 / sqrt(gamma)
  double nu() const { return nu_; }
  const Vec3 &b_infinity() const { return b_inf_; }
  bool nonlinear() const { return nonlinear_; }

  static constexpr double relaxation_time = 1.0;
  static constexpr double debye_length = 1.0;
  static constexpr double light_speed = 1.0;

  ModelParams with_nonlinear(bool on) const { return ModelParams(gamma_, b_inf_, on); }
  ModelParams with_b_infinity(const Vec3 &b) const { return ModelParams(gamma_, b, nonlinear_); }

  // When 2/(gamma-1) is a positive integer (gamma = 3, 2, 5/3, ...) the density map is a
  // polynomial; returns its degree, or 0 otherwise.
  int polynomial_degree() const { return poly_degree_; }

private:
  double gamma_;
  double mu_;
  double nu_;
  Vec3 b_inf_;
  bool nonlinear_;
  int poly_degree_ = 0;
};

}  // namespace bem
