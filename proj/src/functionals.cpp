// SPDX-License-Identifier: Apache-2.0

#include "bem/norms/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "bem/errors.hpp"
#include "bem/field/spectral_ops.hpp"
#include "bem/norms/littlewood_paley.hpp"
#include "bem/norms/norms.hpp"

namespace bem
{

LevelTable::LevelTable(const State &U, int l_max_) : l_max(l_max_)
{
  levels[kN1] = level_energies(U.n1, l_max);
  levels[kN2] = level_energies(U.n2, l_max);
  levels[kU1] = level_energies(U.u1, l_max);
  levels[kU2] = level_energies(U.u2, l_max);
  levels[kE] = level_energies(U.E, l_max);
  levels[kB] = level_energies(U.B, l_max);
}

double LevelTable::total(int l) const
{
  double sum = 0.0;
  for (const auto &g : levels)
  {
    sum += g[l];
  }
  return sum;
}

namespace
{

double sum_levels(const LevelTable &t, LevelTable::Group g, int from, int to)
{
  double s = 0.0;
  for (int l = std::max(from, 0); l <= to; ++l)
  {
    s += t.at(g, l);
  }
  return s;
}

double energy_range(const LevelTable &t, int from, int to)
{
  double s = 0.0;
  for (int l = from; l <= to; ++l)
  {
    s += t.total(l);
  }
  return s;
}

// The dissipation pattern shared by D_N and D_k^{k+2}.
double dissipation_range(const LevelTable &t, int k, int top)
{
  using G = LevelTable;
  return sum_levels(t, G::kN1, k + 1, top) + sum_levels(t, G::kN2, k, top) +
         sum_levels(t, G::kU1, k, top) + sum_levels(t, G::kU2, k, top) +
         sum_levels(t, G::kE, k, top - 1) + sum_levels(t, G::kB, k + 1, top - 1);
}

}  // namespace

double energy_EN(const State &U, int N)
{
  if (N < 0)
  {
    throw ConfigError("energy order must be non-negative");
  }
  return energy_range(LevelTable(U, N), 0, N);
}

double dissipation_DN(const State &U, int N)
{
  if (N < 1)
  {
    throw ConfigError("dissipation order must be positive");
  }
  return dissipation_range(LevelTable(U, N), 0, N);
}

double energy_Ek_k2(const State &U, int k)
{
  if (k < 0)
  {
    throw ConfigError("minimum derivative count must be non-negative");
  }
  return energy_range(LevelTable(U, k + 2), k, k + 2);
}

double dissipation_Dk_k2(const State &U, int k)
{
  if (k < 0)
  {
    throw ConfigError("minimum derivative count must be non-negative");
  }
  // E runs over k..k+1 and B is the single level k+1, which is the generic pattern with
  // top = k + 2.
  return dissipation_range(LevelTable(U, k + 2), k, k + 2);
}

double weighted_energy(const State &U, int N)
{
  const LevelTable t(U, N);
  double s = 0.0;
  for (int l = 0; l <= N; ++l)
  {
    s += 0.5 * (t.at(LevelTable::kN1, l) + t.at(LevelTable::kN2, l) + t.at(LevelTable::kU1, l) +
                t.at(LevelTable::kU2, l)) +
         t.at(LevelTable::kE, l) + t.at(LevelTable::kB, l);
  }
  return s;
}

double spectral_inner(const ScalarField &a, const ScalarField &b, int l)
{
  const auto &layout = a.layout();
  const auto &ca = a.spectrum();
  const auto &cb = b.spectrum();
  double sum = 0.0;
  for (std::size_t q = 0; q < ca.size(); ++q)
  {
    if (l > 0 && q == 0)
    {
      continue;
    }
    const double k2l = std::pow(layout.wavenumber(q), 2.0 * l);
    sum += layout.hermitian_weight(q) * k2l * std::real(std::conj(ca[q]) * cb[q]);
  }
  return sum * layout.volume();
}

double spectral_inner(const VectorField &a, const VectorField &b, int l)
{
  return spectral_inner(a[0], b[0], l) + spectral_inner(a[1], b[1], l) +
         spectral_inner(a[2], b[2], l);
}

double spectral_inner_gradient(const VectorField &u, const ScalarField &n, int l)
{
  return spectral_inner(u, gradient(n), l);
}

CrossFunctionals cross_functionals(const State &U, int k, double eta)
{
  if (k < 0)
  {
    throw ConfigError("derivative count must be non-negative");
  }
  if (!(eta > 0.0))
  {
    throw ConfigError("eta must be positive");
  }
  CrossFunctionals out;
  const auto grad_n1 = gradient(U.n1);
  const auto grad_n2 = gradient(U.n2);
  for (int l = k; l <= k + 1; ++l)
  {
    out.interactive += spectral_inner(U.u1, grad_n1, l) + spectral_inner(U.u2, grad_n2, l);
    out.interactive -= spectral_inner(U.u2, U.E, l);
  }
  out.interactive -= eta * spectral_inner(U.E, curl(U.B), k);

  out.F = spectral_inner(U.u1, U.u1, k) + spectral_inner(U.u2, U.u2, k) +
          spectral_inner(U.E, U.E, k);
  const auto psi = divergence(U.u2);
  out.G = spectral_inner(U.n2, U.n2, k) + spectral_inner(psi, psi, k);
  return out;
}

const std::vector<FunctionalInfo> &functional_registry()
{
  static const std::vector<FunctionalInfo> registry = {
    {"E3", "energy: sum of ||nabla^l U||^2 for l = 0..3"},
    {"D3", "dissipation rate of order 3"},
    {"E3_weighted", "sum_{l<=3} 1/2 ||nabla^l (n1,n2,u1,u2)||^2 + ||nabla^l (E,B)||^2"},
    {"E5", "energy: sum of ||nabla^l U||^2 for l = 0..5"},
    {"D5", "dissipation rate of order 5"},
    {"E0_2", "energy with minimum derivative count 0 (levels 0..2)"},
    {"D0_2", "dissipation with minimum derivative count 0"},
    {"E1_3", "energy with minimum derivative count 1 (levels 1..3)"},
    {"D1_3", "dissipation with minimum derivative count 1"},
    {"energy_L2", "1/2 ||(n1,n2,u1,u2)||^2 + ||(E,B)||^2"},
    {"dissipation_L2", "nu ||(u1,u2)||^2, the linear decay rate of energy_L2"},
    {"L2_U", "||U||_{L2}, zero mode removed"},
    {"L2_n1", "||n1||_{L2}, zero mode removed"},
    {"L2_n2", "||n2||_{L2}, zero mode removed"},
    {"L2_u", "||(u1,u2)||_{L2}, zero mode removed"},
    {"L2_u1", "||u1||_{L2}, zero mode removed"},
    {"L2_u2", "||u2||_{L2}, zero mode removed"},
    {"L2_E", "||E||_{L2}, zero mode removed"},
    {"L2_B", "||B||_{L2}, zero mode removed"},
    {"L2_psi", "||div u2||_{L2}"},
    {"H1_U", "||nabla U||_{L2}"},
    {"H1_n1", "||nabla n1||_{L2}"},
    {"H1_n2", "||nabla n2||_{L2}"},
    {"H1_u", "||nabla (u1,u2)||_{L2}"},
    {"H1_E", "||nabla E||_{L2}"},
    {"H1_B", "||nabla B||_{L2}"},
    {"Hneg_s1.5_U", "||U||_{H^{-3/2}}, zero mode removed"},
    {"Hneg_s1.5_n1", "||n1||_{H^{-3/2}}, zero mode removed"},
    {"Besov_s1.5_U", "||U||_{B^{-3/2}_{2,inf}}, zero mode removed"},
    {"Besov_s1.5_n1", "||n1||_{B^{-3/2}_{2,inf}}, zero mode removed"},
    {"I_0", "interactive functional at k = 0, eta = 0.1", true},
    {"Fk_0", "||(u1,u2,E)||_{L2}^2"},
    {"Gk_0", "||(n2, div u2)||_{L2}^2"},
    {"gauss_res", "||div E + nu g|| / max(||nabla E||, nu ||g||)"},
    {"divB_res", "||div B|| / ||nabla B||"},
    {"max_abs", "largest absolute sample of any component"},
    {"mean_n1", "grid mean of n1", true},
  };
  return registry;
}

std::size_t functional_index(const std::string &name)
{
  static const auto index = [] {
    std::unordered_map<std::string, std::size_t> m;
    const auto &reg = functional_registry();
    for (std::size_t i = 0; i < reg.size(); ++i)
    {
      m.emplace(reg[i].name, i);
    }
    return m;
  }();
  const auto it = index.find(name);
  if (it == index.end())
  {
    throw ConfigError("unknown functional '" + name + "'");
  }
  return it->second;
}

namespace
{

double fluct_sq(const ScalarField &f)
{
  const double n = fluctuation_sobolev_norm(f, 0.0);
  return n * n;
}

double fluct_sq(const VectorField &v)
{
  return fluct_sq(v[0]) + fluct_sq(v[1]) + fluct_sq(v[2]);
}

}  // namespace

FunctionalSample evaluate_functionals(const State &U, const ModelParams &params, double t)
{
  using G = LevelTable;
  const LevelTable table(U, 5);
  FunctionalSample sample;
  sample.t = t;
  sample.values.assign(functional_registry().size(), 0.0);
  auto set = [&](const char *name, double v) { sample.values[functional_index(name)] = v; };

  set("E3", energy_range(table, 0, 3));
  set("D3", dissipation_range(table, 0, 3));
  set("E5", energy_range(table, 0, 5));
  set("D5", dissipation_range(table, 0, 5));
  set("E0_2", energy_range(table, 0, 2));
  set("D0_2", dissipation_range(table, 0, 2));
  set("E1_3", energy_range(table, 1, 3));
  set("D1_3", dissipation_range(table, 1, 3));

  double weighted3 = 0.0;
  for (int l = 0; l <= 3; ++l)
  {
    weighted3 += 0.5 * (table.at(G::kN1, l) + table.at(G::kN2, l) + table.at(G::kU1, l) +
                        table.at(G::kU2, l)) +
                 table.at(G::kE, l) + table.at(G::kB, l);
  }
  set("E3_weighted", weighted3);
  set("energy_L2", 0.5 * (table.at(G::kN1, 0) + table.at(G::kN2, 0) + table.at(G::kU1, 0) +
                          table.at(G::kU2, 0)) +
                     table.at(G::kE, 0) + table.at(G::kB, 0));
  set("dissipation_L2", params.nu() * (table.at(G::kU1, 0) + table.at(G::kU2, 0)));

  const double n1 = fluct_sq(U.n1), n2 = fluct_sq(U.n2), u1 = fluct_sq(U.u1),
               u2 = fluct_sq(U.u2), e = fluct_sq(U.E), b = fluct_sq(U.B);
  set("L2_U", std::sqrt(n1 + n2 + u1 + u2 + e + b));
  set("L2_n1", std::sqrt(n1));
  set("L2_n2", std::sqrt(n2));
  set("L2_u", std::sqrt(u1 + u2));
  set("L2_u1", std::sqrt(u1));
  set("L2_u2", std::sqrt(u2));
  set("L2_E", std::sqrt(e));
  set("L2_B", std::sqrt(b));
  set("L2_psi", l2_norm(divergence(U.u2)));

  set("H1_U", std::sqrt(table.total(1)));
  set("H1_n1", std::sqrt(table.at(G::kN1, 1)));
  set("H1_n2", std::sqrt(table.at(G::kN2, 1)));
  set("H1_u", std::sqrt(table.at(G::kU1, 1) + table.at(G::kU2, 1)));
  set("H1_E", std::sqrt(table.at(G::kE, 1)));
  set("H1_B", std::sqrt(table.at(G::kB, 1)));

  double hneg = 0.0;
  const LittlewoodPaley lp(U.layout());
  std::vector<double> blocks(std::size_t(lp.j_max() - lp.j_min() + 1), 0.0);
  U.for_each_component([&](const ScalarField &f) {
    const double h = fluctuation_sobolev_norm(f, -1.5);
    hneg += h * h;
    const auto e_j = lp.block_energies(f);
    for (std::size_t i = 0; i < blocks.size(); ++i)
    {
      blocks[i] += e_j[i];
    }
  });
  double besov = 0.0;
  for (std::size_t i = 0; i < blocks.size(); ++i)
  {
    besov = std::max(besov, std::pow(2.0, -1.5 * (lp.j_min() + int(i))) * std::sqrt(blocks[i]));
  }
  set("Hneg_s1.5_U", std::sqrt(hneg));
  set("Hneg_s1.5_n1", fluctuation_sobolev_norm(U.n1, -1.5));
  set("Besov_s1.5_U", besov);
  set("Besov_s1.5_n1", fluctuation_besov_norm(U.n1, 1.5));

  const auto cross = cross_functionals(U, 0, 0.1);
  set("I_0", cross.interactive);
  set("Fk_0", cross.F);
  set("Gk_0", cross.G);

  set("gauss_res", gauss_residual(U, params));
  set("divB_res", divergence_residual(U.B));
  set("max_abs", U.max_abs());
  set("mean_n1", U.n1.mean());
  return sample;
}

}  // namespace bem
