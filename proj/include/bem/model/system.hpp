// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "bem/model/params.hpp"
#include "bem/model/state.hpp"

namespace bem
{

// Pointwise floor for 1 + mu n below which the density map is declared invalid.
inline constexpr double kDensityFloor = 1e-8;

// f(n) = (1 + mu n)^(1/mu) - 1, or e^n - 1 when gamma = 1. Throws DensityUnderflow when
// 1 + mu n <= kDensityFloor.
double density_map(double n, const ModelParams &params);
// Inverse of density_map: n with f(n) = value. Requires value > -1.
double inverse_density_map(double value, const ModelParams &params);

ScalarField f_of_n(const ScalarField &n, const ModelParams &params);
ScalarField inverse_f(const ScalarField &f, const ModelParams &params);

// g = f((n1 - n2)/2) - f((n1 + n2)/2), dealiased. Linearly g ~ -n2.
ScalarField g_function(const ScalarField &n1, const ScalarField &n2, const ModelParams &params);

struct NonlinearTerms
{
  ScalarField g1;
  VectorField g2;
  ScalarField g3;
  VectorField g4;
  VectorField g5;
};

// The transport, pressure and current nonlinearities, each dealiased. The Lorentz products
// u2 x B and u1 x B are not included here; rhs adds them.
NonlinearTerms nonlinear_terms(const State &U, const ModelParams &params);

// Time derivative of every component. Linear terms are exact spectral multipliers; the
// nonlinear sources (g_i and u x B) are formed pointwise and dealiased. With
// params.nonlinear() false only the linearization remains.
State rhs(const State &U, const ModelParams &params);

// ||div E - nu (f(n+) - f(n-))|| / max(||nabla E||, nu ||g||, 1e-30), all L2.
// Without the nonlinear terms the constraint is the linearized one, div E = nu n2.
double gauss_residual(const State &U, const ModelParams &params);

// Species variables of one fluid pair in reformulated units.
struct SpeciesPair
{
  ScalarField n_plus;
  ScalarField n_minus;
  VectorField u_plus;
  VectorField u_minus;
};

struct SumDifference
{
  ScalarField n1;
  ScalarField n2;
  VectorField u1;
  VectorField u2;
};

SumDifference to_sum_difference(const SpeciesPair &species);
SpeciesPair from_sum_difference(const SumDifference &sd);

// Unscaled fields: species densities (positive), velocities, E and the full magnetic field.
struct PhysicalFields
{
  ScalarField density_plus;
  ScalarField density_minus;
  VectorField velocity_plus;
  VectorField velocity_minus;
  VectorField electric;
  VectorField magnetic;
};

// Density n = (2/(gamma-1)) (rho^((gamma-1)/2) - 1), or ln rho when gamma = 1; velocities and
// E divided by sqrt(gamma); B = B_phys / sqrt(gamma) - B_infinity. Reformulated time t
// corresponds to physical time t / sqrt(gamma). Throws DensityUnderflow if rho <= 0.
State scale_physical_to_reformulated(const PhysicalFields &phys, const ModelParams &params);
PhysicalFields scale_reformulated_to_physical(const State &U, const ModelParams &params);
double physical_time(double reformulated_time, const ModelParams &params);

}  // namespace bem
