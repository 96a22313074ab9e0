// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "bem/model/system.hpp"

namespace bem
{

// ||nabla^l X||^2 for l = 0..l_max and each of the groups n1, n2, u1, u2, E, B.
struct LevelTable
{
  enum Group
  {
    kN1,
    kN2,
    kU1,
    kU2,
    kE,
    kB,
    kGroups
  };

  LevelTable(const State &U, int l_max);

  double at(Group g, int l) const { return levels[g][l]; }
  // Sum over all groups at level l.
  double total(int l) const;

  int l_max;
  std::array<std::vector<double>, kGroups> levels;
};

// sum_{l=0..N} ||nabla^l U||^2
double energy_EN(const State &U, int N);
// Dissipation rate of order N: n1 from l = 1, (n2, u1, u2) from l = 0, E up to N - 1 and B
// from 1 to N - 1.
double dissipation_DN(const State &U, int N);

// The same two sums restricted to the levels k..k+2 (minimum derivative count k).
double energy_Ek_k2(const State &U, int k);
double dissipation_Dk_k2(const State &U, int k);

// The combination sum_l (1/2 ||nabla^l (n1, n2, u1, u2)||^2 + ||nabla^l (E, B)||^2) for
// l = 0..N. At N = 0 this is the quantity whose linear rate of change is -nu ||(u1, u2)||^2.
double weighted_energy(const State &U, int N);

struct CrossFunctionals
{
  // sum_{l=k}^{k+1} int (nabla^l u1 . nabla nabla^l n1 + nabla^l u2 . nabla nabla^l n2)
  //   - sum_{l=k}^{k+1} int nabla^l u2 . nabla^l E - eta int nabla^k E . nabla^k curl B
  double interactive = 0.0;
  // ||nabla^k (u1, u2, E)||^2
  double F = 0.0;
  // ||nabla^k (n2, div u2)||^2
  double G = 0.0;
};

CrossFunctionals cross_functionals(const State &U, int k, double eta = 0.1);

// int Lambda^l a . Lambda^l b over the torus, evaluated spectrally.
double spectral_inner(const ScalarField &a, const ScalarField &b, int l);
double spectral_inner(const VectorField &a, const VectorField &b, int l);
// int Lambda^l u . nabla Lambda^l n
double spectral_inner_gradient(const VectorField &u, const ScalarField &n, int l);

struct FunctionalInfo
{
  std::string name;
  std::string description;
  bool is_signed = false;
};

// Stable CSV column set, in column order (the time column "t" is not part of it).
const std::vector<FunctionalInfo> &functional_registry();
// Position of a registry entry; throws ConfigError for unknown names.
std::size_t functional_index(const std::string &name);

struct FunctionalSample
{
  double t = 0.0;
  std::vector<double> values;  // aligned with functional_registry()

  double operator[](const std::string &name) const { return values[functional_index(name)]; }
};

FunctionalSample evaluate_functionals(const State &U, const ModelParams &params, double t);

}  // namespace bem
