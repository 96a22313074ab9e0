// SPDX-License-Identifier: Apache-2.0

#include "bem/norms/norms.hpp"

#include <algorithm>
#include <cmath>

#include "bem/errors.hpp"
#include "bem/field/spectral_ops.hpp"

namespace bem
{

namespace
{

double lp_of_samples(std::span<const double> mag, double p, const SpectralLayout &layout)
{
  if (!(p >= 1.0))
  {
    throw ConfigError("L^p norm requires p >= 1");
  }
  if (std::isinf(p))
  {
    double m = 0.0;
    for (double v : mag)
    {
      m = std::max(m, std::abs(v));
    }
    return m;
  }
  double sum = 0.0;
  if (p == 2.0)
  {
    for (double v : mag)
    {
      sum += v * v;
    }
    return std::sqrt(sum * layout.cell_volume());
  }
  for (double v : mag)
  {
    sum += std::pow(std::abs(v), p);
  }
  return std::pow(sum * layout.cell_volume(), 1.0 / p);
}

// V * sum_{s != 0} w |xi|^(2 s_exp) |c|^2
double weighted_energy(const std::vector<Complex> &c, const SpectralLayout &layout, double s_exp)
{
  double sum = 0.0;
  for (std::size_t q = 1; q < c.size(); ++q)
  {
    sum += layout.hermitian_weight(q) * std::pow(layout.wavenumber(q), 2.0 * s_exp) * std::norm(c[q]);
  }
  return sum * layout.volume();
}

std::vector<double> levels(const ScalarField &f, int l_max, bool include_mean)
{
  if (l_max < 0)
  {
    throw ConfigError("derivative level must be non-negative");
  }
  const auto &layout = f.layout();
  const auto &c = f.spectrum();
  std::vector<double> out(std::size_t(l_max) + 1, 0.0);
  for (std::size_t q = 0; q < c.size(); ++q)
  {
    const double k2 = layout.wavenumber(q) * layout.wavenumber(q);
    double term = layout.hermitian_weight(q) * std::norm(c[q]);
    if (q == 0)
    {
      if (include_mean)
      {
        out[0] += term;
      }
      continue;
    }
    for (int l = 0; l <= l_max; ++l)
    {
      out[l] += term;
      term *= k2;
    }
  }
  for (auto &v : out)
  {
    v *= layout.volume();
  }
  return out;
}

}  // namespace

double lp_norm(const ScalarField &f, double p)
{
  return lp_of_samples(f.values(), p, f.layout());
}

double lp_norm(const VectorField &v, double p)
{
  const auto x = v[0].values(), y = v[1].values(), z = v[2].values();
  std::vector<double> mag(x.size());
  for (std::size_t i = 0; i < mag.size(); ++i)
  {
    mag[i] = std::sqrt(x[i] * x[i] + y[i] * y[i] + z[i] * z[i]);
  }
  return lp_of_samples(mag, p, v.layout());
}

double l2_norm(const ScalarField &f)
{
  return lp_norm(f, 2.0);
}

double l2_norm(const VectorField &v)
{
  return lp_norm(v, 2.0);
}

double homogeneous_sobolev_norm(const ScalarField &f, double s)
{
  if (s < 0.0)
  {
    require_zero_mean(f, "homogeneous_sobolev_norm");
  }
  return fluctuation_sobolev_norm(f, s);
}

double homogeneous_sobolev_norm(const VectorField &v, double s)
{
  double sum = 0.0;
  for (int a = 0; a < 3; ++a)
  {
    const double n = homogeneous_sobolev_norm(v[a], s);
    sum += n * n;
  }
  return std::sqrt(sum);
}

double fluctuation_sobolev_norm(const ScalarField &f, double s)
{
  return std::sqrt(weighted_energy(f.spectrum(), f.layout(), s));
}

double fluctuation_sobolev_norm(const VectorField &v, double s)
{
  double sum = 0.0;
  for (int a = 0; a < 3; ++a)
  {
    sum += weighted_energy(v[a].spectrum(), v.layout(), s);
  }
  return std::sqrt(sum);
}

std::vector<double> level_energies(const ScalarField &f, int l_max)
{
  return levels(f, l_max, true);
}

std::vector<double> level_energies(const VectorField &v, int l_max)
{
  auto out = levels(v[0], l_max, true);
  for (int a = 1; a < 3; ++a)
  {
    const auto more = levels(v[a], l_max, true);
    for (std::size_t l = 0; l < out.size(); ++l)
    {
      out[l] += more[l];
    }
  }
  return out;
}

std::vector<double> fluctuation_level_energies(const ScalarField &f, int l_max)
{
  return levels(f, l_max, false);
}

std::vector<ScalarField> tensor_derivative(const ScalarField &f, int k)
{
  if (k < 0)
  {
    throw ConfigError("derivative order must be non-negative");
  }
  std::vector<ScalarField> current{f};
  for (int order = 0; order < k; ++order)
  {
    std::vector<ScalarField> next;
    next.reserve(current.size() * 3);
    for (const auto &g : current)
    {
      for (int a = 0; a < 3; ++a)
      {
        next.push_back(derivative(g, a));
      }
    }
    current = std::move(next);
  }
  return current;
}

double tensor_derivative_lp_norm(const ScalarField &f, int k, double p)
{
  const auto parts = tensor_derivative(f, k);
  std::vector<double> mag(f.size(), 0.0);
  for (const auto &g : parts)
  {
    const auto v = g.values();
    for (std::size_t i = 0; i < mag.size(); ++i)
    {
      mag[i] += v[i] * v[i];
    }
  }
  for (auto &m : mag)
  {
    m = std::sqrt(m);
  }
  return lp_of_samples(mag, p, f.layout());
}

}  // namespace bem
