// SPDX-License-Identifier: Apache-2.0

#include "bem/model/system.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bem/errors.hpp"
#include "bem/field/spectral_ops.hpp"
#include "bem/norms/norms.hpp"

namespace bem
{

namespace
{

constexpr Complex kI{0.0, 1.0};

using Buffer = std::vector<double>;

double binomial(int n, int k)
{
  double r = 1.0;
  for (int j = 1; j <= k; ++j)
  {
    r = r * double(n - k + j) / double(j);
  }
  return r;
}

void underflow(double n, const ModelParams &params)
{
  throw DensityUnderflow("1 + mu n = " + std::to_string(1.0 + params.mu() * n) +
                         " at or below the positivity floor");
}

// Wavevector with the Nyquist components zeroed, matching derivative() and curl().
Vec3 paired_wavevector(const SpectralLayout &layout, std::size_t s)
{
  auto k = layout.wavevector(s);
  for (int a = 0; a < 3; ++a)
  {
    if (layout.is_nyquist(s, a))
    {
      k[a] = 0.0;
    }
  }
  return k;
}

// Physical samples of d/dx_axis of the field with spectrum c.
Buffer physical_derivative(const SpectralLayout &layout, const std::vector<Complex> &c, int axis,
                           std::vector<Complex> &scratch)
{
  scratch.resize(c.size());
  for (std::size_t s = 0; s < c.size(); ++s)
  {
    scratch[s] = layout.is_nyquist(s, axis) ? Complex{} : kI * layout.wavevector(s)[axis] * c[s];
  }
  Buffer out(layout.grid_size());
  layout.inverse(scratch, out);
  return out;
}

// Pointwise (undealiased) nonlinear sources. lorentz1 = u2 x B feeds the u1 equation and
// lorentz2 = u1 x B feeds the u2 equation.
struct RawSources
{
  Buffer g1, g3;
  std::array<Buffer, 3> g2, g4, g5, lorentz1, lorentz2;
};

RawSources raw_sources(const State &U, const ModelParams &params)
{
  const auto &layout = U.layout();
  const std::size_t np = layout.grid_size();
  std::vector<Complex> scratch;

  std::array<Buffer, 3> dn1, dn2;
  std::array<std::array<Buffer, 3>, 3> du1, du2;  // du[a][b] = d_b u_a
  for (int b = 0; b < 3; ++b)
  {
    dn1[b] = physical_derivative(layout, U.n1.spectrum(), b, scratch);
    dn2[b] = physical_derivative(layout, U.n2.spectrum(), b, scratch);
    for (int a = 0; a < 3; ++a)
    {
      du1[a][b] = physical_derivative(layout, U.u1[a].spectrum(), b, scratch);
      du2[a][b] = physical_derivative(layout, U.u2[a].spectrum(), b, scratch);
    }
  }

  const double mu = params.mu();
  const double nu = params.nu();
  const auto n1 = U.n1.values();
  const auto n2 = U.n2.values();
  const std::array<std::span<const double>, 3> u1{U.u1[0].values(), U.u1[1].values(),
                                                  U.u1[2].values()};
  const std::array<std::span<const double>, 3> u2{U.u2[0].values(), U.u2[1].values(),
                                                  U.u2[2].values()};
  const std::array<std::span<const double>, 3> B{U.B[0].values(), U.B[1].values(),
                                                 U.B[2].values()};

  RawSources r;
  r.g1.resize(np);
  r.g3.resize(np);
  for (int a = 0; a < 3; ++a)
  {
    r.g2[a].resize(np);
    r.g4[a].resize(np);
    r.g5[a].resize(np);
    r.lorentz1[a].resize(np);
    r.lorentz2[a].resize(np);
  }

  for (std::size_t p = 0; p < np; ++p)
  {
    const double div1 = du1[0][0][p] + du1[1][1][p] + du1[2][2][p];
    const double div2 = du2[0][0][p] + du2[1][1][p] + du2[2][2][p];
    double u1_dn1 = 0.0, u2_dn2 = 0.0, u1_dn2 = 0.0, u2_dn1 = 0.0;
    for (int b = 0; b < 3; ++b)
    {
      u1_dn1 += u1[b][p] * dn1[b][p];
      u2_dn2 += u2[b][p] * dn2[b][p];
      u1_dn2 += u1[b][p] * dn2[b][p];
      u2_dn1 += u2[b][p] * dn1[b][p];
    }
    r.g1[p] = -0.5 * (u1_dn1 + u2_dn2) - 0.5 * mu * (n1[p] * div1 + n2[p] * div2);
    r.g3[p] = -0.5 * (u1_dn2 + u2_dn1) - 0.5 * mu * (n1[p] * div2 + n2[p] * div1);

    for (int a = 0; a < 3; ++a)
    {
      double u1_du1 = 0.0, u2_du2 = 0.0, u1_du2 = 0.0, u2_du1 = 0.0;
      for (int b = 0; b < 3; ++b)
      {
        u1_du1 += u1[b][p] * du1[a][b][p];
        u2_du2 += u2[b][p] * du2[a][b][p];
        u1_du2 += u1[b][p] * du2[a][b][p];
        u2_du1 += u2[b][p] * du1[a][b][p];
      }
      r.g2[a][p] = -0.5 * (u1_du1 + u2_du2) - 0.5 * mu * (n1[p] * dn1[a][p] + n2[p] * dn2[a][p]);
      r.g4[a][p] = -0.5 * (u1_du2 + u2_du1) - 0.5 * mu * (n1[p] * dn2[a][p] + n2[p] * dn1[a][p]);
    }

    const double f_minus = density_map(0.5 * (n1[p] - n2[p]), params);
    const double f_plus = density_map(0.5 * (n1[p] + n2[p]), params);
    for (int a = 0; a < 3; ++a)
    {
      r.g5[a][p] = nu * (f_minus * 0.5 * (u1[a][p] - u2[a][p]) -
                         f_plus * 0.5 * (u1[a][p] + u2[a][p]));
    }

    r.lorentz1[0][p] = u2[1][p] * B[2][p] - u2[2][p] * B[1][p];
    r.lorentz1[1][p] = u2[2][p] * B[0][p] - u2[0][p] * B[2][p];
    r.lorentz1[2][p] = u2[0][p] * B[1][p] - u2[1][p] * B[0][p];
    r.lorentz2[0][p] = u1[1][p] * B[2][p] - u1[2][p] * B[1][p];
    r.lorentz2[1][p] = u1[2][p] * B[0][p] - u1[0][p] * B[2][p];
    r.lorentz2[2][p] = u1[0][p] * B[1][p] - u1[1][p] * B[0][p];
  }
  return r;
}

ScalarField dealiased_field(const LayoutPtr &layout, Buffer values)
{
  return dealias(ScalarField(layout, std::move(values)));
}

// Adds the dealiased spectrum of the physical samples `values` to `target`.
void add_dealiased(const SpectralLayout &layout, const Buffer &values, std::vector<Complex> &target,
                   std::vector<Complex> &scratch)
{
  scratch.resize(layout.spectral_size());
  layout.forward(values, scratch);
  for (std::size_t s = 0; s < scratch.size(); ++s)
  {
    if (layout.dealias_keep(s))
    {
      target[s] += scratch[s];
    }
  }
}

double grid_l2(std::span<const double> v, const SpectralLayout &layout)
{
  double sum = 0.0;
  for (double x : v)
  {
    sum += x * x;
  }
  return std::sqrt(sum * layout.cell_volume());
}

}  // namespace

double density_map(double n, const ModelParams &params)
{
  const double mu = params.mu();
  if (mu == 0.0)
  {
    return std::expm1(n);
  }
  const double x = mu * n;
  if (!(1.0 + x > kDensityFloor))
  {
    underflow(n, params);
  }
  if (const int p = params.polynomial_degree(); p > 0)
  {
    // (1 + x)^p - 1 summed without the cancellation of the naive form.
    double acc = 0.0;
    for (int k = p; k >= 1; --k)
    {
      acc = x * (binomial(p, k) + acc);
    }
    return acc;
  }
  return std::expm1(std::log1p(x) / mu);
}

double inverse_density_map(double value, const ModelParams &params)
{
  if (!(value > -1.0))
  {
    throw DensityUnderflow("density map value " + std::to_string(value) + " has no preimage");
  }
  const double mu = params.mu();
  if (mu == 0.0)
  {
    return std::log1p(value);
  }
  return std::expm1(mu * std::log1p(value)) / mu;
}

ScalarField f_of_n(const ScalarField &n, const ModelParams &params)
{
  ScalarField out(n.layout_ptr());
  auto dst = out.mutable_values();
  const auto src = n.values();
  for (std::size_t p = 0; p < src.size(); ++p)
  {
    dst[p] = density_map(src[p], params);
  }
  return out;
}

ScalarField inverse_f(const ScalarField &f, const ModelParams &params)
{
  ScalarField out(f.layout_ptr());
  auto dst = out.mutable_values();
  const auto src = f.values();
  for (std::size_t p = 0; p < src.size(); ++p)
  {
    dst[p] = inverse_density_map(src[p], params);
  }
  return out;
}

ScalarField g_function(const ScalarField &n1, const ScalarField &n2, const ModelParams &params)
{
  Buffer g(n1.size());
  const auto a = n1.values();
  const auto b = n2.values();
  for (std::size_t p = 0; p < g.size(); ++p)
  {
    g[p] = density_map(0.5 * (a[p] - b[p]), params) - density_map(0.5 * (a[p] + b[p]), params);
  }
  return dealiased_field(n1.layout_ptr(), std::move(g));
}

NonlinearTerms nonlinear_terms(const State &U, const ModelParams &params)
{
  auto r = raw_sources(U, params);
  const auto &lp = U.layout_ptr();
  auto vec = [&](std::array<Buffer, 3> &v) {
    return VectorField(dealiased_field(lp, std::move(v[0])), dealiased_field(lp, std::move(v[1])),
                       dealiased_field(lp, std::move(v[2])));
  };
  return {dealiased_field(lp, std::move(r.g1)), vec(r.g2), dealiased_field(lp, std::move(r.g3)),
          vec(r.g4), vec(r.g5)};
}

State rhs(const State &U, const ModelParams &params)
{
  const auto &layout = U.layout();
  const std::size_t ns = layout.spectral_size();
  const double nu = params.nu();
  const auto &binf = params.b_infinity();

  const auto &cn1 = U.n1.spectrum();
  const auto &cn2 = U.n2.spectrum();
  const std::array<const std::vector<Complex> *, 3> cu1{&U.u1[0].spectrum(), &U.u1[1].spectrum(),
                                                        &U.u1[2].spectrum()};
  const std::array<const std::vector<Complex> *, 3> cu2{&U.u2[0].spectrum(), &U.u2[1].spectrum(),
                                                        &U.u2[2].spectrum()};
  const std::array<const std::vector<Complex> *, 3> cE{&U.E[0].spectrum(), &U.E[1].spectrum(),
                                                       &U.E[2].spectrum()};
  const std::array<const std::vector<Complex> *, 3> cB{&U.B[0].spectrum(), &U.B[1].spectrum(),
                                                       &U.B[2].spectrum()};

  // Tendency spectra in the component order n1, u1, n2, u2, E, B.
  std::array<std::vector<Complex>, kStateComponents> T;
  for (auto &t : T)
  {
    t.assign(ns, Complex{});
  }

  for (std::size_t s = 0; s < ns; ++s)
  {
    const Vec3 k = paired_wavevector(layout, s);
    Complex u1[3], u2[3], E[3], B[3];
    for (int a = 0; a < 3; ++a)
    {
      u1[a] = (*cu1[a])[s];
      u2[a] = (*cu2[a])[s];
      E[a] = (*cE[a])[s];
      B[a] = (*cB[a])[s];
    }
    const Complex n1 = cn1[s], n2 = cn2[s];

    T[0][s] = -kI * (k[0] * u1[0] + k[1] * u1[1] + k[2] * u1[2]);
    T[4][s] = -kI * (k[0] * u2[0] + k[1] * u2[1] + k[2] * u2[2]);

    const Complex u2xb[3] = {u2[1] * binf[2] - u2[2] * binf[1], u2[2] * binf[0] - u2[0] * binf[2],
                             u2[0] * binf[1] - u2[1] * binf[0]};
    const Complex u1xb[3] = {u1[1] * binf[2] - u1[2] * binf[1], u1[2] * binf[0] - u1[0] * binf[2],
                             u1[0] * binf[1] - u1[1] * binf[0]};
    const Complex curlB[3] = {kI * (k[1] * B[2] - k[2] * B[1]), kI * (k[2] * B[0] - k[0] * B[2]),
                              kI * (k[0] * B[1] - k[1] * B[0])};
    const Complex curlE[3] = {kI * (k[1] * E[2] - k[2] * E[1]), kI * (k[2] * E[0] - k[0] * E[2]),
                              kI * (k[0] * E[1] - k[1] * E[0])};
    for (int a = 0; a < 3; ++a)
    {
      T[1 + a][s] = -nu * u1[a] + u2xb[a] - kI * k[a] * n1;
      T[5 + a][s] = -nu * u2[a] + u1xb[a] - kI * k[a] * n2 + 2.0 * nu * E[a];
      T[8 + a][s] = nu * curlB[a] - nu * u2[a];
      T[11 + a][s] = -nu * curlE[a];
    }
  }

  if (params.nonlinear())
  {
    auto r = raw_sources(U, params);
    std::vector<Complex> scratch;
    add_dealiased(layout, r.g1, T[0], scratch);
    add_dealiased(layout, r.g3, T[4], scratch);
    for (int a = 0; a < 3; ++a)
    {
      auto &m1 = r.g2[a];
      auto &m2 = r.g4[a];
      for (std::size_t p = 0; p < m1.size(); ++p)
      {
        m1[p] += r.lorentz1[a][p];
        m2[p] += r.lorentz2[a][p];
      }
      add_dealiased(layout, m1, T[1 + a], scratch);
      add_dealiased(layout, m2, T[5 + a], scratch);
      add_dealiased(layout, r.g5[a], T[8 + a], scratch);
    }
  }

  const auto &lp = U.layout_ptr();
  State out(lp);
  int idx = 0;
  out.for_each_component(
    [&](ScalarField &f) { f = ScalarField::from_spectrum(lp, std::move(T[idx++])); });
  return out;
}

double gauss_residual(const State &U, const ModelParams &params)
{
  const auto div_e = divergence(U.E);
  // The linearized system carries the linearized constraint div E = nu n2.
  const auto g = params.nonlinear() ? g_function(U.n1, U.n2, params) : -1.0 * U.n2;
  const auto &layout = U.layout();
  Buffer diff(layout.grid_size());
  const auto d = div_e.values();
  const auto gv = g.values();
  for (std::size_t p = 0; p < diff.size(); ++p)
  {
    // div E should equal nu (f(n+) - f(n-)) = -nu g.
    diff[p] = d[p] + params.nu() * gv[p];
  }
  // Scaled like the div B residual. Normalizing by ||div E|| or ||n2|| alone breaks down
  // once the longitudinal part has decayed below the round-off of the transverse field.
  const double scale = std::max(
    {fluctuation_sobolev_norm(U.E, 1.0), params.nu() * grid_l2(gv, layout), 1e-30});
  return grid_l2(diff, layout) / scale;
}

SumDifference to_sum_difference(const SpeciesPair &sp)
{
  return {sp.n_plus + sp.n_minus, sp.n_plus - sp.n_minus, sp.u_plus + sp.u_minus,
          sp.u_plus - sp.u_minus};
}

SpeciesPair from_sum_difference(const SumDifference &sd)
{
  return {0.5 * (sd.n1 + sd.n2), 0.5 * (sd.n1 - sd.n2), 0.5 * (sd.u1 + sd.u2),
          0.5 * (sd.u1 - sd.u2)};
}

namespace
{

ScalarField density_to_n(const ScalarField &rho, const ModelParams &params)
{
  ScalarField out(rho.layout_ptr());
  auto dst = out.mutable_values();
  const auto src = rho.values();
  const double mu = params.mu();
  for (std::size_t p = 0; p < src.size(); ++p)
  {
    if (!(src[p] > 0.0))
    {
      throw DensityUnderflow("physical density " + std::to_string(src[p]) + " is not positive");
    }
    const double logr = std::log(src[p]);
    dst[p] = mu == 0.0 ? logr : std::expm1(mu * logr) / mu;
  }
  return out;
}

ScalarField n_to_density(const ScalarField &n, const ModelParams &params)
{
  ScalarField out = f_of_n(n, params);
  for (auto &v : out.mutable_values())
  {
    v += 1.0;
  }
  return out;
}

}  // namespace

State scale_physical_to_reformulated(const PhysicalFields &phys, const ModelParams &params)
{
  const double nu = params.nu();
  SpeciesPair sp{density_to_n(phys.density_plus, params), density_to_n(phys.density_minus, params),
                 nu * phys.velocity_plus, nu * phys.velocity_minus};
  auto sd = to_sum_difference(sp);
  State U(phys.density_plus.layout_ptr());
  U.n1 = std::move(sd.n1);
  U.n2 = std::move(sd.n2);
  U.u1 = std::move(sd.u1);
  U.u2 = std::move(sd.u2);
  U.E = nu * phys.electric;
  U.B = nu * phys.magnetic;
  for (int a = 0; a < 3; ++a)
  {
    for (auto &v : U.B[a].mutable_values())
    {
      v -= params.b_infinity()[a];
    }
  }
  return U;
}

PhysicalFields scale_reformulated_to_physical(const State &U, const ModelParams &params)
{
  const double root = std::sqrt(params.gamma());
  auto sp = from_sum_difference({U.n1, U.n2, U.u1, U.u2});
  VectorField magnetic = U.B;
  for (int a = 0; a < 3; ++a)
  {
    for (auto &v : magnetic[a].mutable_values())
    {
      v = root * (v + params.b_infinity()[a]);
    }
  }
  return {n_to_density(sp.n_plus, params), n_to_density(sp.n_minus, params),
          root * sp.u_plus,                root * sp.u_minus,
          root * U.E,                      std::move(magnetic)};
}

double physical_time(double reformulated_time, const ModelParams &params)
{
  return reformulated_time / std::sqrt(params.gamma());
}

}  // namespace bem
