// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>
#include <vector>

#include "bem/field/field.hpp"

namespace bem
{

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Grid L^p norm, (sum |f|^p h^3)^(1/p), or the maximum for p = infinity. Requires p >= 1.
double lp_norm(const ScalarField &f, double p);
// Same with the pointwise Euclidean length of v.
double lp_norm(const VectorField &v, double p);

double l2_norm(const ScalarField &f);
double l2_norm(const VectorField &v);

// ||Lambda^s f||_{L2} over the nonzero modes. For s < 0 the field must have zero mean
// (NonZeroMean otherwise).
double homogeneous_sobolev_norm(const ScalarField &f, double s);
double homogeneous_sobolev_norm(const VectorField &v, double s);

// As homogeneous_sobolev_norm, but the zero mode is simply left out; never throws. This is
// the norm used for torus diagnostics, where the mean of n1 drifts at second order.
double fluctuation_sobolev_norm(const ScalarField &f, double s);
double fluctuation_sobolev_norm(const VectorField &v, double s);

// ||nabla^l f||^2 realized as ||Lambda^l f||^2 for l = 0..l_max. Level 0 is the full L2
// norm, mean included.
std::vector<double> level_energies(const ScalarField &f, int l_max);
std::vector<double> level_energies(const VectorField &v, int l_max);

// Same, with the zero mode removed at every level.
std::vector<double> fluctuation_level_energies(const ScalarField &f, int l_max);

// Full tensor derivative nabla^k f as its 3^k component fields (d_{i1} ... d_{ik} f). Used
// where a pointwise norm of nabla^k is needed (L^p with p != 2).
std::vector<ScalarField> tensor_derivative(const ScalarField &f, int k);
// Grid L^p norm of the pointwise Frobenius length of nabla^k f.
double tensor_derivative_lp_norm(const ScalarField &f, int k, double p);

}  // namespace bem
