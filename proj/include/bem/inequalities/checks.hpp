// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "bem/field/field.hpp"
#include "bem/model/params.hpp"

namespace bem
{

// Each checker returns LHS / RHS of one functional inequality for one field. The checkers
// never judge the size of the ratio; thresholds belong to the caller. All ratios are
// invariant under f -> c f, and 0/0 is reported as 0.

// theta solving alpha + 3 (1/2 - 1/p) = m (1 - theta) + l theta. Throws
// IncompatibleExponents unless theta lies in [0, 1] (the open interval when p = infinity).
double gagliardo_nirenberg_theta(double p, int alpha, int m, int l);

// ||nabla^alpha f||_{L^p} / (||nabla^m f||^(1 - theta) ||nabla^l f||^theta), L2 norms on
// the right.
double check_gagliardo_nirenberg(const ScalarField &f, double p, int alpha, int m, int l);

struct CompositionRatios
{
  // ||nabla^k f(n)||_inf / (||nabla^(k+1) n|| ||nabla^(k+2) n||)^(1/2)
  double ratio_inf = 0.0;
  // ||nabla^k f(n)|| / ||nabla^k n||
  double ratio_l2 = 0.0;
};

// sqrt(sum_{l<=3} ||nabla^l n||^2)
double h3_norm(const ScalarField &n);
inline constexpr double kCompositionAmplitudeLimit = 0.1;

// Throws AmplitudeTooLarge when ||n||_{H^3} exceeds kCompositionAmplitudeLimit.
CompositionRatios check_composition(const ScalarField &n, int k, const ModelParams &params);

// ||nabla^k (g h) - g nabla^k h|| / (||nabla g||_inf ||nabla^(k-1) h|| + ||nabla^k g|| ||h||_inf)
// with full tensor derivatives. Requires k >= 1.
double check_commutator(const ScalarField &g, const ScalarField &h, int k);

// s = 3 (1/p - 1/2).
double embedding_order(double p);
// ||f||_{H^{-s}} / ||f||_{L^p} for 1 < p <= 2. Throws ExponentOutOfRange otherwise.
double check_riesz_embedding(const ScalarField &f, double p);
// ||f||_{B^{-s}_{2,inf}} / ||f||_{L^p} for 1 <= p <= 2. Throws ExponentOutOfRange otherwise.
double check_besov_embedding(const ScalarField &f, double p);

enum class NegativeSpace
{
  sobolev,
  besov
};

// ||nabla^l f|| / (||nabla^(l+1) f||^(1 - theta) ||f||_neg^theta), theta = 1 / (l + 1 + s).
// Requires zero mean; s >= 0 (sobolev) or s > 0 (besov).
double check_interpolation(const ScalarField &f, int l, double s, NegativeSpace space);

}  // namespace bem
