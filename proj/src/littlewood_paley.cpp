// SPDX-License-Identifier: Apache-2.0

#include "bem/norms/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bem/field/spectral_ops.hpp"

namespace bem
{

namespace
{

double bump(double x)
{
  return x > 0.0 ? std::exp(-1.0 / x) : 0.0;
}

}  // namespace

LittlewoodPaley::LittlewoodPaley(const SpectralLayout &layout)
{
  const double L = layout.box_length();
  j_min_ = int(std::floor(std::log2(2.0 * std::numbers::pi / L))) - 1;
  // 2^j_max >= 2 pi N / L exceeds the corner wavenumber sqrt(3) pi N / L, so the blocks
  // sum to one on every nonzero grid mode.
  j_max_ = int(std::ceil(std::log2(std::numbers::pi * layout.resolution() / L))) + 1;
}

double LittlewoodPaley::cutoff(double r)
{
  if (r <= 1.0)
  {
    return 1.0;
  }
  if (r >= 2.0)
  {
    return 0.0;
  }
  const double a = bump(2.0 - r);
  return a / (a + bump(r - 1.0));
}

double LittlewoodPaley::block_symbol(int j, double r)
{
  return cutoff(std::ldexp(r, -j)) - cutoff(std::ldexp(r, 1 - j));
}

double LittlewoodPaley::embedding_constant(double s)
{
  double best = 0.0;
  const int n = 200000;
  for (int i = 0; i <= n; ++i)
  {
    const double rho = 0.5 + 1.5 * double(i) / n;
    best = std::max(best, std::pow(rho, s) * block_symbol(0, rho));
  }
  return best;
}

std::vector<double> LittlewoodPaley::block_energies(const ScalarField &f) const
{
  const auto &layout = f.layout();
  const auto &c = f.spectrum();
  std::vector<double> out(std::size_t(j_max_ - j_min_ + 1), 0.0);
  for (std::size_t q = 1; q < c.size(); ++q)
  {
    const double r = layout.wavenumber(q);
    const double e = layout.hermitian_weight(q) * std::norm(c[q]);
    // Only blocks with 2^(j-1) < r < 2^(j+1) can be nonzero.
    const int jc = int(std::floor(std::log2(r)));
    for (int j = jc - 1; j <= jc + 2; ++j)
    {
      if (j < j_min_ || j > j_max_)
      {
        continue;
      }
      const double phi = block_symbol(j, r);
      if (phi != 0.0)
      {
        out[j - j_min_] += phi * phi * e;
      }
    }
  }
  for (auto &v : out)
  {
    v *= layout.volume();
  }
  return out;
}

ScalarField besov_block(const ScalarField &f, int j)
{
  const auto &layout = f.layout();
  return map_spectrum(f, [&](std::size_t q, Complex c) {
    if (q == 0)
    {
      return Complex{};
    }
    return LittlewoodPaley::block_symbol(j, layout.wavenumber(q)) * c;
  });
}

double fluctuation_besov_norm(const ScalarField &f, double s)
{
  const LittlewoodPaley lp(f.layout());
  const auto e = lp.block_energies(f);
  double best = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i)
  {
    const int j = lp.j_min() + int(i);
    best = std::max(best, std::pow(2.0, -s * j) * std::sqrt(e[i]));
  }
  return best;
}

double besov_norm(const ScalarField &f, double s)
{
  require_zero_mean(f, "besov_norm");
  return fluctuation_besov_norm(f, s);
}

double besov_norm(const VectorField &v, double s)
{
  for (int a = 0; a < 3; ++a)
  {
    require_zero_mean(v[a], "besov_norm");
  }
  const LittlewoodPaley lp(v.layout());
  auto e = lp.block_energies(v[0]);
  for (int a = 1; a < 3; ++a)
  {
    const auto more = lp.block_energies(v[a]);
    for (std::size_t i = 0; i < e.size(); ++i)
    {
      e[i] += more[i];
    }
  }
  double best = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i)
  {
    best = std::max(best, std::pow(2.0, -s * (lp.j_min() + int(i))) * std::sqrt(e[i]));
  }
  return best;
}

}  // namespace bem
