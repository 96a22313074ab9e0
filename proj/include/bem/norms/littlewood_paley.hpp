// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "bem/field/field.hpp"

namespace bem
{

//
// Dyadic partition of unity on the discrete spectrum of a layout.
//
// The radial cutoff is phi(r) = psi(r) with psi(r) = h(2 - r) / (h(2 - r) + h(r - 1)) and
// h(x) = exp(-1/x) for x > 0, zero otherwise. It equals 1 on r <= 1 and 0 on r >= 2. Block
// j has symbol phi_j(r) = phi(r / 2^j) - phi(r / 2^(j-1)), supported in [2^(j-1), 2^(j+1)].
//
class LittlewoodPaley
{
public:
  explicit LittlewoodPaley(const SpectralLayout &layout);

  static double cutoff(double r);
  static double block_symbol(int j, double r);
  // sup over rho of rho^s phi_0(rho): the sharp constant in
  // ||f||_{B^{-s}_{2,inf}} <= C ||f||_{H^{-s}}, computed on a fine grid.
  static double embedding_constant(double s);

  int j_min() const { return j_min_; }
  int j_max() const { return j_max_; }

  // Squared L2 norms of every block j_min..j_max (index j - j_min). The zero mode belongs
  // to no block.
  std::vector<double> block_energies(const ScalarField &f) const;

private:
  int j_min_;
  int j_max_;
};

// Delta_j f as a field.
ScalarField besov_block(const ScalarField &f, int j);

// sup_j 2^(-s j) ||Delta_j f||_{L2}: the homogeneous B^{-s}_{2,inf} norm. Requires zero mean.
double besov_norm(const ScalarField &f, double s);
double besov_norm(const VectorField &v, double s);

// Same supremum with the zero mode ignored instead of rejected.
double fluctuation_besov_norm(const ScalarField &f, double s);

}  // namespace bem
