// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "bem/model/params.hpp"

namespace bem
{

using Matrix14 = Eigen::Matrix<std::complex<double>, 14, 14>;
using Vector14 = Eigen::Matrix<std::complex<double>, 14, 1>;

// Fourier symbol of the linearized system at one wavevector. Component order is
// n1, u1(3), n2, u2(3), E(3), B(3), as in State::for_each_component.
struct Symbol
{
  Vec3 xi;
  Matrix14 A;
  ModelParams params;
};

Symbol symbol_matrix(const Vec3 &xi, const ModelParams &params);

// Diagonal of the energy weight: 1 on the fluid block, 2 on (E, B).
Eigen::Matrix<double, 14, 1> energy_weight();
// Diagonal of the relaxation pattern: 1 on u1 and u2, 0 elsewhere.
Eigen::Matrix<double, 14, 1> relaxation_pattern();

// exp(t A) by scaling and squaring (Pade).
Matrix14 propagator(const Symbol &symbol, double t);
Vector14 evolve_mode(const Symbol &symbol, double t, const Vector14 &u0);

}  // namespace bem
