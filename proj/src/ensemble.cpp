// SPDX-License-Identifier: Apache-2.0

#include "bem/inequalities/ensemble.hpp"

#include <cmath>
#include <random>

#include "bem/errors.hpp"

namespace bem
{

namespace detail
{

namespace
{

std::uint64_t splitmix(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool canonical(int mx, int my, int mz)
{
  if (mx != 0)
  {
    return mx > 0;
  }
  if (my != 0)
  {
    return my > 0;
  }
  return mz >= 0;
}

}  // namespace

Complex mode_sample(std::uint64_t seed, std::uint64_t stream, int mx, int my, int mz)
{
  const bool flip = !canonical(mx, my, mz);
  if (flip)
  {
    mx = -mx;
    my = -my;
    mz = -mz;
  }
  std::uint64_t key = splitmix(seed);
  key = splitmix(key ^ stream);
  const auto pack = [](int v) { return std::uint64_t(std::uint32_t(v + (1 << 20))); };
  key = splitmix(key ^ (pack(mx) << 42 | pack(my) << 21 | pack(mz)));
  std::mt19937_64 rng(key);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double re = normal(rng);
  const double im = normal(rng);
  if (mx == 0 && my == 0 && mz == 0)
  {
    return {re * std::sqrt(2.0), 0.0};
  }
  return flip ? Complex{re, -im} : Complex{re, im};
}

}  // namespace detail

FieldEnsemble::FieldEnsemble(EnsembleSpec spec) : spec_(spec)
{
  if (spec_.count < 1 || spec_.max_mode < 1)
  {
    throw ConfigError("ensemble needs a positive size and mode range");
  }
}

ScalarField FieldEnsemble::member(int index, const LayoutPtr &layout) const
{
  if (3 * spec_.max_mode > layout->resolution())
  {
    throw ConfigError("ensemble modes exceed the dealiased band of this grid");
  }
  const double slope = spec_.slope;
  const bool zero_mean = spec_.zero_mean;
  return random_phase_field(layout, spec_.seed, std::uint64_t(index), spec_.max_mode,
                            [slope, zero_mean](const Vec3 &, double k) {
                              if (k == 0.0)
                              {
                                return zero_mean ? 0.0 : 1.0;
                              }
                              return std::pow(k, -slope);
                            });
}

ScalarField centered_bump(const LayoutPtr &layout, double width)
{
  ScalarField f(layout);
  auto v = f.mutable_values();
  const double L = layout->box_length();
  const double c = 0.5 * L;
  for (std::size_t p = 0; p < v.size(); ++p)
  {
    const auto x = layout->position(p);
    double r2 = 0.0;
    for (double xi : x)
    {
      double d = xi - c;
      d -= L * std::round(d / L);
      r2 += d * d;
    }
    v[p] = std::exp(-0.5 * r2 / (width * width));
  }
  const double mean = f.mean();
  for (auto &x : v)
  {
    x -= mean;
  }
  return f;
}

}  // namespace bem
