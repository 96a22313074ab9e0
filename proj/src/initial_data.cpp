// SPDX-License-Identifier: Apache-2.0

#include "bem/harness/initial_data.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "bem/errors.hpp"
#include "bem/field/spectral_ops.hpp"
#include "bem/inequalities/ensemble.hpp"
#include "bem/norms/functionals.hpp"
#include "bem/norms/littlewood_paley.hpp"

namespace bem
{

namespace
{

double density_derivative(double n, const ModelParams &params)
{
  const double mu = params.mu();
  if (mu == 0.0)
  {
    return std::exp(n);
  }
  return std::pow(1.0 + mu * n, 1.0 / mu - 1.0);
}

// Streams of the random generator, one per scalar coordinate.
enum Stream : std::uint64_t
{
  kStreamN1 = 0,
  kStreamU1 = 1,
  kStreamN2 = 4,
  kStreamU2 = 5,
  kStreamE = 8,
  kStreamB = 11,
};

class DataSource
{
public:
  DataSource(const RunConfig &config, const LayoutPtr &layout) : config_(config), layout_(layout)
  {
  }

  ScalarField scalar(std::uint64_t stream, double extra_power) const
  {
    if (config_.data_kind == DataKind::gaussian_bumps)
    {
      return bumps(stream);
    }
    const auto &c = config_;
    return random_phase_field(layout_, c.seed, stream, layout_->resolution() / 3,
                              [&c, extra_power](const Vec3 &, double r) {
                                if (r == 0.0)
                                {
                                  return 0.0;
                                }
                                const double x = r / c.cutoff_radius;
                                const double shape = c.spectrum == SpectrumClass::flat
                                                       ? LittlewoodPaley::cutoff(x)
                                                       : std::exp(-0.5 * x * x);
                                return std::pow(r, c.s - 1.5 + extra_power) * shape;
                              });
  }

  VectorField vector(std::uint64_t stream) const
  {
    return VectorField(scalar(stream, 0.0), scalar(stream + 1, 0.0), scalar(stream + 2, 0.0));
  }

private:
  // A few signed Gaussian bumps of random width and position, dealiased and made zero-mean.
  ScalarField bumps(std::uint64_t stream) const
  {
    std::seed_seq seq{std::uint32_t(config_.seed), std::uint32_t(config_.seed >> 32),
                      std::uint32_t(stream)};
    std::mt19937_64 rng(seq);
    const double L = layout_->box_length();
    std::uniform_real_distribution<double> position(0.0, L);
    std::uniform_real_distribution<double> width(L / 16.0, L / 8.0);
    ScalarField f(layout_);
    auto v = f.mutable_values();
    for (int b = 0; b < 4; ++b)
    {
      const Vec3 c{position(rng), position(rng), position(rng)};
      const double w = width(rng);
      const double sign = (rng() & 1u) ? 1.0 : -1.0;
      for (std::size_t p = 0; p < v.size(); ++p)
      {
        const auto x = layout_->position(p);
        double r2 = 0.0;
        for (int a = 0; a < 3; ++a)
        {
          double d = x[a] - c[a];
          d -= L * std::round(d / L);
          r2 += d * d;
        }
        v[p] += sign * std::exp(-0.5 * r2 / (w * w));
      }
    }
    return remove_mean(dealias(f));
  }

  const RunConfig &config_;
  LayoutPtr layout_;
};

ScalarField gauss_source(const ScalarField &n1, const ScalarField &n2, const ModelParams &params)
{
  if (!params.nonlinear())
  {
    return params.nu() * n2;
  }
  return -params.nu() * g_function(n1, n2, params);
}

}  // namespace

double neutralizing_shift(const ScalarField &n1, const ScalarField &n2, const ModelParams &params)
{
  double c = -n2.mean();
  if (!params.nonlinear())
  {
    return c;
  }
  const auto a = n1.values();
  const auto b = n2.values();
  const double count = double(a.size());
  for (int iter = 0; iter < 60; ++iter)
  {
    double h = 0.0;
    double dh = 0.0;
    for (std::size_t p = 0; p < a.size(); ++p)
    {
      const double nm = 0.5 * (a[p] - b[p] - c);
      const double np = 0.5 * (a[p] + b[p] + c);
      h += density_map(nm, params) - density_map(np, params);
      dh -= 0.5 * (density_derivative(nm, params) + density_derivative(np, params));
    }
    h /= count;
    dh /= count;
    if (!(dh < 0.0) || !std::isfinite(h))
    {
      break;
    }
    const double step = h / dh;
    c -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(c)))
    {
      return c;
    }
  }
  throw NonZeroMeanSource("no constant shift of n2 neutralizes the Gauss-law source");
}

InitialData make_initial_data(const RunConfig &config, const LayoutPtr &layout,
                              const ModelParams &params)
{
  config.validate();
  if (layout->resolution() != config.resolution || layout->box_length() != config.box_length)
  {
    throw ConfigError("layout does not match the run configuration");
  }
  const DataSource source(config, layout);
  const auto n1 = source.scalar(kStreamN1, 0.0);
  const auto n2 = source.scalar(kStreamN2, 1.0);
  const auto u1 = source.vector(kStreamU1);
  const auto u2 = source.vector(kStreamU2);
  const auto B = solenoidal_project(source.vector(kStreamB));
  const auto Et = config.transverse_electric ? solenoidal_project(source.vector(kStreamE))
                                             : VectorField(layout);

  const auto build = [&](double c, double &shift, const ModelParams &model) {
    State U(layout);
    U.n1 = c * n1;
    U.u1 = c * u1;
    U.u2 = c * u2;
    U.B = c * B;
    U.n2 = c * n2;
    shift = neutralizing_shift(U.n1, U.n2, model);
    for (auto &x : U.n2.mutable_values())
    {
      x += shift;
    }
    const auto rho = gauss_source(U.n1, U.n2, model);
    if (!has_zero_mean(rho))
    {
      throw NonZeroMeanSource("Gauss-law source keeps a mean after the neutrality shift");
    }
    U.E = c * Et + gauss_electric_field(rho);
    return U;
  };

  // The raw fields are far outside the range of the density map, so the first scale comes
  // from the linearized Gauss law.
  double shift = 0.0;
  double c = 1.0;
  State U = build(c, shift, params.with_nonlinear(false));
  double norm = std::sqrt(energy_EN(U, 3));
  if (!(norm > 0.0))
  {
    throw ConfigError("initial data vanish identically");
  }
  // The map c -> ||U(c)|| is linear up to the density nonlinearity; a few fixed-point
  // steps reach the target to roundoff.
  for (int iter = 0; iter < 40; ++iter)
  {
    c *= config.amplitude / norm;
    U = build(c, shift, params);
    norm = std::sqrt(energy_EN(U, 3));
    if (std::abs(norm / config.amplitude - 1.0) < 1e-13)
    {
      break;
    }
  }
  if (std::abs(norm / config.amplitude - 1.0) > 1e-9)
  {
    std::ostringstream msg;
    msg << "could not scale data to ||U0||_H3 = " << config.amplitude << " (reached " << norm
        << ")";
    throw ConfigError(msg.str());
  }
  return {std::move(U), shift, norm};
}

}  // namespace bem
