// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstring>
#include <filesystem>
#include <limits>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "bem/errors.hpp"
#include "bem/field/spectral_ops.hpp"
#include "bem/harness/csv.hpp"
#include "bem/harness/decay_fit.hpp"
#include "bem/harness/experiment.hpp"
#include "bem/harness/initial_data.hpp"
#include "bem/norms/functionals.hpp"

using namespace bem;

namespace
{

RunConfig tiny_config()
{
  RunConfig c;
  c.resolution = 16;
  c.box_length = 16.0;
  c.t_max = 2.0;
  c.sample_interval = 0.5;
  c.fit_t0 = 0.0;
  c.fit_t1 = 2.0;
  return c;
}

bool same_bits(double a, double b)
{
  return std::memcmp(&a, &b, sizeof a) == 0;
}

}  // namespace

TEST(RunConfig, TextRoundTrip)
{
  RunConfig c;
  c.resolution = 32;
  c.box_length = 40.0;
  c.gamma = 5.0 / 3.0;
  c.b_infinity = {0.1, -0.2, 1.0 / 3.0};
  c.spectrum = SpectrumClass::flat;
  c.mode = RunMode::linear;
  c.seed = 12345678901ULL;
  c.k_values = {0, 1, 2};
  c.transverse_electric = false;
  const auto text = c.to_text();
  const auto back = RunConfig::parse(text);
  EXPECT_EQ(back.to_text(), text);
  EXPECT_EQ(back.b_infinity[2], 1.0 / 3.0);
  EXPECT_EQ(back.seed, c.seed);
  EXPECT_EQ(back.k_values, c.k_values);
  EXPECT_EQ(back.mode, RunMode::linear);
}

TEST(RunConfig, ApplyAndErrors)
{
  RunConfig c;
  c.apply("# comment\nresolution = 32\n  box_length=30 \n\np = 1\n");
  EXPECT_EQ(c.resolution, 32);
  EXPECT_EQ(c.box_length, 30.0);
  EXPECT_DOUBLE_EQ(c.s, 1.5);
  EXPECT_THROW(c.set("no_such_key", "1"), ConfigError);
  EXPECT_THROW(c.set("resolution", "sixteen"), ConfigError);
  EXPECT_THROW(c.set("mode", "fast"), ConfigError);
  EXPECT_THROW(c.apply("resolution 32"), ConfigError);
}

TEST(RunConfig, Validation)
{
  const auto expect_invalid = [](auto change) {
    RunConfig c;
    change(c);
    EXPECT_THROW(c.validate(), ConfigError);
  };
  EXPECT_NO_THROW(RunConfig{}.validate());
  expect_invalid([](RunConfig &c) { c.amplitude = 0.1; });
  expect_invalid([](RunConfig &c) { c.box_length = 2.0 * c.resolution; });
  expect_invalid([](RunConfig &c) { c.resolution = 30 + 1; });
  expect_invalid([](RunConfig &c) { c.s = 2.0; });
  expect_invalid([](RunConfig &c) { c.gamma = 0.9; });
  expect_invalid([](RunConfig &c) { c.fit_t1 = c.fit_t0; });
  expect_invalid([](RunConfig &c) { c.k_values = {-1}; });
}

TEST(RunConfig, DataClassOrder)
{
  EXPECT_DOUBLE_EQ(data_class_order(1.0), 1.5);
  EXPECT_DOUBLE_EQ(data_class_order(1.5), 0.5);
  EXPECT_DOUBLE_EQ(data_class_order(2.0), 0.0);
  EXPECT_DOUBLE_EQ(data_class_order(1.2), 3.0 * (1.0 / 1.2 - 0.5));
  EXPECT_THROW(data_class_order(0.9), ExponentOutOfRange);
  EXPECT_THROW(data_class_order(2.5), ExponentOutOfRange);
  RunConfig c;
  c.set("p", "1.5");
  EXPECT_DOUBLE_EQ(c.s, 0.5);
}

TEST(InitialData, SatisfiesConstraintsAtTheRequestedSize)
{
  for (auto kind : {DataKind::band_limited_random, DataKind::gaussian_bumps})
  {
    for (double gamma : {3.0, 2.0, 5.0 / 3.0})
    {
      auto c = tiny_config();
      c.data_kind = kind;
      c.gamma = gamma;
      c.amplitude = 0.02;
      const auto layout = SpectralLayout::create(c.resolution, c.box_length);
      const auto params = c.model();
      const auto data = make_initial_data(c, layout, params);
      const auto &U = data.state;
      EXPECT_NEAR(std::sqrt(energy_EN(U, 3)), c.amplitude, 1e-9 * c.amplitude);
      EXPECT_NEAR(data.h3_norm, c.amplitude, 1e-9 * c.amplitude);
      EXPECT_LT(std::abs(U.n1.mean()), 1e-15);
      EXPECT_LT(divergence_residual(U.B), 1e-12);
      EXPECT_LT(gauss_residual(U, params), 1e-10);
      // The neutrality shift zeroes the mean of the charge density.
      EXPECT_TRUE(has_zero_mean(g_function(U.n1, U.n2, params)));
      if (gamma == 3.0)
      {
        EXPECT_LT(std::abs(U.n2.mean()), 1e-15);
      }
    }
  }
}

TEST(InitialData, SeedsAreReproducibleAndDistinct)
{
  auto c = tiny_config();
  const auto layout = SpectralLayout::create(c.resolution, c.box_length);
  const auto a = make_initial_data(c, layout, c.model()).state;
  const auto b = make_initial_data(c, layout, c.model()).state;
  c.seed = 2;
  const auto d = make_initial_data(c, layout, c.model()).state;
  EXPECT_EQ(a.n1.values()[5], b.n1.values()[5]);
  EXPECT_NE(a.n1.values()[5], d.n1.values()[5]);
}

TEST(InitialData, LayoutMustMatch)
{
  const auto c = tiny_config();
  EXPECT_THROW(make_initial_data(c, SpectralLayout::create(16, 12.0), c.model()), ConfigError);
}

TEST(InitialData, NeutralityShiftOfAQuadraticMap)
{
  const auto layout = SpectralLayout::create(8, 8.0);
  const ModelParams params(2.0);
  ScalarField n1(layout), n2(layout);
  auto a = n1.mutable_values();
  auto b = n2.mutable_values();
  for (std::size_t p = 0; p < a.size(); ++p)
  {
    const auto x = layout->position(p);
    a[p] = 0.2 * std::cos(2.0 * std::numbers::pi * x[0] / 8.0);
    b[p] = 0.1 * std::sin(2.0 * std::numbers::pi * x[0] / 8.0) + 0.01;
  }
  // g = -n2 - n1 n2 / 4 at gamma = 2, so mean(g(n2 + c)) = 0 is linear in c:
  // -(mean n2 + c) - mean(n1 n2) / 4 - c mean(n1) / 4, with mean n1 = 0.
  double m12 = 0.0;
  for (std::size_t p = 0; p < a.size(); ++p)
  {
    m12 += a[p] * b[p] / double(a.size());
  }
  const double expected = -n2.mean() - m12 / 4.0;
  EXPECT_NEAR(neutralizing_shift(n1, n2, params), expected, 1e-15);
  EXPECT_DOUBLE_EQ(neutralizing_shift(n1, n2, params.with_nonlinear(false)), -n2.mean());
}

TEST(DecayFit, ExactPowerLaw)
{
  std::vector<double> t, v;
  for (int i = 0; i <= 60; ++i)
  {
    t.push_back(0.5 * i);
    v.push_back(3.0 * std::pow(1.0 + t.back(), -0.75));
  }
  const auto fit = fit_decay_exponent(t, v, 5.0, 19.0, 0.0, "x");
  EXPECT_NEAR(fit.exponent, -0.75, 1e-12);
  EXPECT_NEAR(fit.log_prefactor, std::log(3.0), 1e-11);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
  EXPECT_EQ(fit.samples, 29);
  EXPECT_FALSE(fit.curvature_flag);
  EXPECT_TRUE(fit.valid);
  EXPECT_EQ(fit.channel, "x");
}

TEST(DecayFit, NoisyPowerLaw)
{
  std::mt19937_64 rng(42);
  std::normal_distribution<double> noise(0.0, 0.01);
  std::vector<double> t, v;
  for (int i = 0; i <= 60; ++i)
  {
    t.push_back(0.5 * i);
    v.push_back(std::pow(1.0 + t.back(), -0.75) * std::exp(noise(rng)));
  }
  const auto fit = fit_decay_exponent(t, v, 5.0, 19.0);
  EXPECT_GT(fit.exponent, -0.8);
  EXPECT_LT(fit.exponent, -0.7);
  EXPECT_GT(fit.exponent_stderr, 0.0);
  EXPECT_LT(fit.exponent_stderr, 0.05);
}

TEST(DecayFit, ExponentialDecayIsFlaggedAsCurved)
{
  std::vector<double> t, v;
  for (int i = 0; i <= 60; ++i)
  {
    t.push_back(0.5 * i);
    v.push_back(std::exp(-t.back() / 2.0));
  }
  const auto fit = fit_decay_exponent(t, v, 5.0, 19.0);
  EXPECT_TRUE(fit.curvature_flag);
  EXPECT_LT(fit.curvature, 0.0);
}

TEST(DecayFit, ErrorsAndSaturation)
{
  std::vector<double> t, v;
  for (int i = 0; i <= 60; ++i)
  {
    t.push_back(0.5 * i);
    v.push_back(1.0 / (1.0 + t.back()));
  }
  EXPECT_THROW(fit_decay_exponent(t, v, 5.0, 8.0), InsufficientSamples);
  auto bad = v;
  bad[20] = 0.0;
  EXPECT_THROW(fit_decay_exponent(t, bad, 5.0, 19.0), NonPositiveValues);
  EXPECT_THROW(fit_decay_exponent(t, std::vector<double>(5, 1.0), 0.0, 1.0), ConfigError);

  const auto past = fit_decay_exponent(t, v, 5.0, 19.0, 10.0);
  EXPECT_FALSE(past.valid);
  EXPECT_NEAR(past.exponent, -1.0, 1e-12);
  EXPECT_FALSE(past.note.empty());
  EXPECT_TRUE(fit_decay_exponent(t, v, 5.0, 19.0, 19.2).valid);
}

TEST(Csv, BitExactRoundTrip)
{
  auto table = SeriesTable::with_registry();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int r = 0; r < 4; ++r)
  {
    FunctionalSample s;
    s.t = 0.1 * r + 1e-17 * r;
    for (std::size_t c = 0; c < table.columns.size(); ++c)
    {
      s.values.push_back(std::ldexp(u(rng), int(c) - 20));
    }
    s.values[1] = std::numeric_limits<double>::denorm_min();
    table.append(kSourceSimulation, s);
  }
  LinearDecayProfile profile;
  profile.times = {0.0, 1.0};
  profile.series.push_back({"U", 0, {1.0, 0.5}});
  profile.series.push_back({"n2", 1, {2.0, 1.0 / 3.0}});
  append_linear_profile(table, profile);

  std::stringstream buffer;
  write_csv(table, buffer);
  const auto back = read_csv(buffer);
  ASSERT_EQ(back.rows(), table.rows());
  EXPECT_EQ(back.columns, table.columns);
  EXPECT_EQ(back.source, table.source);
  for (std::size_t r = 0; r < table.rows(); ++r)
  {
    EXPECT_TRUE(same_bits(back.t[r], table.t[r]));
    for (std::size_t c = 0; c < table.columns.size(); ++c)
    {
      const double a = table.values[r][c];
      const double b = back.values[r][c];
      EXPECT_TRUE(std::isnan(a) ? std::isnan(b) : same_bits(a, b)) << r << ' ' << c;
    }
  }
  EXPECT_TRUE(back.has_source(kSourceLinear));
  EXPECT_EQ(back.column("H1_n2", kSourceLinear), (std::vector<double>{2.0, 1.0 / 3.0}));
  EXPECT_EQ(back.column("L2_U", kSourceLinear), (std::vector<double>{1.0, 0.5}));
  EXPECT_TRUE(std::isnan(back.column("L2_n1", kSourceLinear)[0]));
  EXPECT_THROW(back.column_index("nope"), ConfigError);
}

TEST(Experiment, TinyRunIsDeterministicAndReproducibleFromDisk)
{
  const auto config = tiny_config();
  const auto first = run_experiment(config);
  const auto second = run_experiment(config);
  ASSERT_EQ(first.table.rows(), 5u);
  for (std::size_t r = 0; r < first.table.rows(); ++r)
  {
    for (std::size_t c = 0; c < first.table.columns.size(); ++c)
    {
      const double a = first.table.values[r][c];
      const double b = second.table.values[r][c];
      EXPECT_TRUE(std::isnan(a) ? std::isnan(b) : same_bits(a, b));
    }
  }

  const auto dir = std::filesystem::temp_directory_path() / "bem_harness_test";
  std::filesystem::remove_all(dir);
  write_report(first, dir.string());
  for (const char *name : {"config.txt", "series.csv", "summary.json", "run_info.json"})
  {
    EXPECT_TRUE(std::filesystem::exists(dir / name)) << name;
  }
  RunConfig loaded;
  const auto rebuilt = summarize_directory(dir.string(), &loaded);
  EXPECT_EQ(loaded.to_text(), config.to_text());
  EXPECT_EQ(summary_json(loaded, rebuilt).dump(), summary_json(config, first.summary).dump());
  std::filesystem::remove_all(dir);

  EXPECT_TRUE(first.summary.check("divB_residual").pass);
  EXPECT_TRUE(first.summary.check("energy_monotone").pass);
  EXPECT_THROW(first.summary.check("no_such_check"), ConfigError);
  const auto json = summary_json(config, first.summary);
  EXPECT_EQ(json["build_id"], build_identifier());
  EXPECT_TRUE(json.contains("columns"));
}

TEST(Experiment, QuadratureRunProducesLinearRows)
{
  RunConfig c;
  c.mode = RunMode::linear_quadrature;
  c.spectrum = SpectrumClass::flat;
  c.t_max = 64.0;
  c.fit_t0 = 4.0;
  c.fit_t1 = 64.0;
  c.directions = 12;
  c.per_octave = 4;
  const auto report = run_experiment(c);
  EXPECT_TRUE(report.table.has_source(kSourceLinear));
  EXPECT_FALSE(report.table.has_source(kSourceSimulation));
  const auto &fit = report.summary.fit(kSourceLinear, "L2_U");
  ASSERT_TRUE(fit.ok) << fit.error;
  // Flat spectrum with s = 3/2: ||U(t)|| ~ t^(-3/4) once the window is past the transient.
  EXPECT_NEAR(fit.fit.exponent, -0.75, 0.1);
}
