// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "bem/dynamics/integrator.hpp"
#include "bem/errors.hpp"
#include "bem/field/spectral_ops.hpp"
#include "bem/norms/functionals.hpp"
#include "bem/norms/norms.hpp"

using namespace bem;

namespace
{

constexpr double kPi = std::numbers::pi;

State single_mode_state(const LayoutPtr &layout, double amplitude)
{
  State U(layout);
  auto n1 = U.n1.mutable_values();
  auto u2 = U.u2[1].mutable_values();
  for (std::size_t p = 0; p < n1.size(); ++p)
  {
    const auto x = layout->position(p);
    n1[p] = amplitude * std::cos(2.0 * kPi * x[0] / layout->box_length());
    u2[p] = amplitude * std::sin(2.0 * kPi * x[2] / layout->box_length());
  }
  return U;
}

// u' = -u + cos(t) phi has u(t) = (u0 - 1/2) e^{-t} phi + (cos t + sin t) / 2 phi for u0 = phi.
double forced_error(int steps)
{
  const auto layout = SpectralLayout::create(8, 2.0 * kPi);
  State phi = single_mode_state(layout, 1.0);
  const Tendency forced = [&phi](const State &U, double t) {
    State out = U;
    out *= -1.0;
    out.axpy(std::cos(t), phi);
    return out;
  };
  State U = phi;
  const double T = 1.0;
  const double dt = T / steps;
  for (int i = 0; i < steps; ++i)
  {
    U = rk4_step(U, i * dt, dt, forced);
  }
  const double c = 0.5 * std::exp(-T) + 0.5 * (std::cos(T) + std::sin(T));
  State exact = phi;
  exact *= c;
  U.axpy(-1.0, exact);
  return U.max_abs();
}

}  // namespace

TEST(IntegratorConfig, Validation)
{
  IntegratorConfig c;
  EXPECT_NO_THROW(c.validate());
  c.scheme = "euler";
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.cfl_number = 1.5;
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.sample_interval = 0.0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.t_max = -1.0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.max_steps = 0;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Integrator, CflStepUsesGridSpacing)
{
  const auto layout = SpectralLayout::create(16, 8.0);
  IntegratorConfig c;
  c.cfl_number = 0.5;
  EXPECT_DOUBLE_EQ(cfl_dt(*layout, ModelParams(3.0), c), 0.25);
  // nu <= 1 for every admissible gamma, so the step is always cfl h.
  EXPECT_DOUBLE_EQ(cfl_dt(*layout, ModelParams(1.0), c), 0.25);
}

TEST(Integrator, FourthOrderOnForcedDecay)
{
  const double e1 = forced_error(10);
  const double e2 = forced_error(20);
  const double e3 = forced_error(40);
  EXPECT_NEAR(std::log2(e1 / e2), 4.0, 0.15);
  EXPECT_NEAR(std::log2(e2 / e3), 4.0, 0.1);
}

TEST(Integrator, SamplesLandOnTheGrid)
{
  const auto layout = SpectralLayout::create(8, 8.0);
  const ModelParams params(3.0);
  IntegratorConfig c;
  c.t_max = 1.25;
  c.sample_interval = 0.5;
  std::vector<double> seen;
  const auto result = integrate(single_mode_state(layout, 1e-4), c, params,
                                [&seen](double t, const State &) { seen.push_back(t); });
  const std::vector<double> expected{0.0, 0.5, 1.0, 1.25};
  EXPECT_EQ(seen, expected);
  EXPECT_EQ(result.sample_times, expected);
  EXPECT_DOUBLE_EQ(result.final_time, 1.25);
  EXPECT_LE(result.dt, cfl_dt(*layout, params, c));
  // 0.5 / 0.4 needs two steps per full interval and one for the quarter.
  EXPECT_EQ(result.steps, 5);
  EXPECT_TRUE(result.gauss_corrections.empty());
}

TEST(Integrator, StepLimit)
{
  const auto layout = SpectralLayout::create(8, 8.0);
  IntegratorConfig c;
  c.t_max = 10.0;
  c.max_steps = 3;
  EXPECT_THROW(integrate(single_mode_state(layout, 1e-4), c, ModelParams(3.0)), StepLimitExceeded);
}

TEST(Integrator, DensityUnderflowBecomesBlowUp)
{
  const auto layout = SpectralLayout::create(8, 8.0);
  IntegratorConfig c;
  c.t_max = 1.0;
  // n+- = n1 / 2 reaches -2.5, where 1 + mu n < 0 at gamma = 2.
  EXPECT_THROW(integrate(single_mode_state(layout, 5.0), c, ModelParams(2.0)), BlowUpDetected);
}

TEST(Integrator, LinearEnergyDecaysAtTheDissipationRate)
{
  const auto layout = SpectralLayout::create(8, 8.0);
  const ModelParams params(3.0, {0.0, 0.0, 0.0}, false);
  State U = single_mode_state(layout, 1.0);
  U.E = gauss_electric_field(params.nu() * U.n2);
  const double dt = 1e-3;
  double energy = weighted_energy(U, 0);
  for (int i = 0; i < 200; ++i)
  {
    const State next = step(U, dt, params);
    const double e_next = weighted_energy(next, 0);
    // d/dt (weighted energy) = -nu ||(u1, u2)||^2, integrated with Simpson's rule
    const State mid = step(U, 0.5 * dt, params);
    auto rate = [&params](const State &V) {
      return params.nu() * (std::pow(l2_norm(V.u1), 2) + std::pow(l2_norm(V.u2), 2));
    };
    const double loss = dt / 6.0 * (rate(U) + 4.0 * rate(mid) + rate(next));
    EXPECT_NEAR(energy - e_next, loss, 1e-9 * energy);
    EXPECT_LE(e_next, energy);
    energy = e_next;
    U = next;
  }
}

TEST(Integrator, GaussCorrectionIsReported)
{
  const auto layout = SpectralLayout::create(8, 8.0);
  IntegratorConfig c;
  c.t_max = 1.0;
  c.sample_interval = 0.5;
  c.gauss_correction = true;
  const ModelParams params(3.0);
  const auto result = integrate(single_mode_state(layout, 1e-3), c, params);
  EXPECT_EQ(result.gauss_corrections, (std::vector<double>{0.5, 1.0}));
  EXPECT_LT(gauss_residual(result.final_state, params), 1e-12);
}
