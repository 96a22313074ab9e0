// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bem/model/params.hpp"

namespace bem
{

using Matrix12 = Eigen::Matrix<std::complex<double>, 12, 12>;

//
// Linear symbol restricted to data that satisfy both constraints, written in a frame whose
// third axis is the wavevector direction. The twelve coordinates are
//   n1, u1(3), n2, u2(3), E_perp(2), B_perp(2),
// with the longitudinal parts eliminated: E_par = -i nu n2 / r and B_par = 0. Working in
// this frame keeps the blocks that decouple at B_infinity = 0 exactly decoupled in floating
// point, so channels that decay exponentially are not polluted by roundoff from neutral
// modes. b_frame is B_infinity expressed in the rotated frame.
//
Matrix12 aligned_symbol(double r, const Vec3 &b_frame, const ModelParams &params);

enum class SpectrumClass
{
  // |u0(xi)| = r^(s - 3/2) cutoff(r / cutoff_radius), with the smooth unit-step cutoff of
  // the Littlewood-Paley family.
  flat,
  // |u0(xi)| = r^(s - 3/2) exp(-r^2 / (2 cutoff_radius^2)).
  gaussian,
};

struct LinearDecayConfig
{
  std::vector<int> k_values{0};
  SpectrumClass spectrum = SpectrumClass::gaussian;
  double s = 1.5;
  double cutoff_radius = 0.5;
  int shells = 200;
  int directions = 50;
  double r_min = 1e-4;
  double r_max = 1e2;
  std::vector<double> times;
  bool check_convergence = true;
  double convergence_tolerance = 0.005;
  // Channels whose value falls below this fraction of the whole-vector value at the same
  // time are left out of the convergence comparison.
  double convergence_floor = 1e-6;
};

// Channel names produced by linear_decay_profile, in output order.
const std::vector<std::string> &linear_channels();

struct DecaySeries
{
  std::string channel;
  int k = 0;
  std::vector<double> values;  // ||nabla^k channel||_{L2} at each time
};

struct LinearDecayProfile
{
  std::vector<double> times;
  std::vector<DecaySeries> series;

  const DecaySeries &get(const std::string &channel, int k) const;
};

// {0} followed by t_first * 2^(i / per_octave) up to t_last. Octave multiples are formed
// with exact powers of two so that each time is exactly twice its predecessor one octave
// earlier.
std::vector<double> geometric_time_grid(double t_first, double t_last, int per_octave,
                                        bool include_zero = true);

// Deterministic near-uniform points on the unit sphere (Fibonacci lattice).
std::vector<Vec3> fibonacci_directions(int n);

// Expected squared channel norms of e^{tA} u0 for random-phase data with the prescribed
// spectrum, integrated over wavevector space: log-spaced radial trapezoid times an equal
// weight average over directions. Throws QuadratureNotConverged when doubling the shell
// count changes any resolved channel by more than the tolerance.
LinearDecayProfile linear_decay_profile(const LinearDecayConfig &config, const ModelParams &params);

}  // namespace bem
