// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "bem/harness/run_config.hpp"
#include "bem/model/system.hpp"

namespace bem
{

struct InitialData
{
  State state;
  // Constant added to n2 so that the Gauss-law source has zero mean.
  double neutrality_shift = 0.0;
  // ||U0||_{H^3} actually achieved.
  double h3_norm = 0.0;
};

// Admissible data for one run: zero-mean n1 and velocities, divergence-free B, and
// E = (Gauss-law solution) + optional random transverse part, rescaled so that
// ||U0||_{H^3} = config.amplitude. Band-limited data use the same per-coordinate spectrum as
// the linear quadrature (n2 carries one extra power of |xi| so that E stays in the class).
// Throws NonZeroMeanSource when no constant shift of n2 makes the source neutral.
InitialData make_initial_data(const RunConfig &config, const LayoutPtr &layout,
                              const ModelParams &params);

// Constant c with mean(g(n1, n2 + c)) = 0, found by Newton iteration starting from
// -mean(n2). In linear mode the source is nu n2 and c = -mean(n2).
double neutralizing_shift(const ScalarField &n1, const ScalarField &n2, const ModelParams &params);

}  // namespace bem
