// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "bem/errors.hpp"
#include "bem/field/field.hpp"
#include "bem/field/spectral_ops.hpp"
#include "bem/norms/norms.hpp"

using namespace bem;

namespace
{

constexpr double kPi = std::numbers::pi;

// f(x) = sum of a few plane waves, sampled directly.
ScalarField sample(const LayoutPtr &layout, double (*fn)(const Vec3 &))
{
  ScalarField f(layout);
  auto v = f.mutable_values();
  for (std::size_t p = 0; p < v.size(); ++p)
  {
    v[p] = fn(layout->position(p));
  }
  return f;
}

double wave(const Vec3 &x)
{
  return std::cos(x[0]) + 0.5 * std::sin(2.0 * x[1] - x[2]) + 0.25 * std::cos(x[0] + x[1] + x[2]);
}

double max_diff(const ScalarField &a, const ScalarField &b)
{
  double m = 0.0;
  for (std::size_t p = 0; p < a.size(); ++p)
  {
    m = std::max(m, std::abs(a[p] - b[p]));
  }
  return m;
}

}  // namespace

TEST(Layout, RejectsBadShapes)
{
  EXPECT_THROW(SpectralLayout::create(7, 1.0), ConfigError);
  EXPECT_THROW(SpectralLayout::create(6, 1.0), ConfigError);
  EXPECT_THROW(SpectralLayout::create(16, 0.0), ConfigError);
}

TEST(Layout, HermitianWeightsCountTheFullSpectrum)
{
  const auto layout = SpectralLayout::create(12, 3.0);
  double total = 0.0;
  for (std::size_t s = 0; s < layout->spectral_size(); ++s)
  {
    total += layout->hermitian_weight(s);
  }
  EXPECT_DOUBLE_EQ(total, 12.0 * 12.0 * 12.0);
}

TEST(Layout, ModesWrapAndWavevectorsScaleWithBox)
{
  const auto layout = SpectralLayout::create(8, 4.0);
  // flat index (i N + j)(N/2 + 1) + k with i = 7 -> m = -1, j = 2, k = 3
  const std::size_t s = (7 * 8 + 2) * 5 + 3;
  const auto m = layout->mode(s);
  EXPECT_EQ(m[0], -1);
  EXPECT_EQ(m[1], 2);
  EXPECT_EQ(m[2], 3);
  const auto k = layout->wavevector(s);
  EXPECT_NEAR(k[0], -2.0 * kPi / 4.0, 1e-15);
  EXPECT_NEAR(layout->wavenumber(s), 2.0 * kPi / 4.0 * std::sqrt(1.0 + 4.0 + 9.0), 1e-14);
}

TEST(Field, CosineHasHalfAmplitudeCoefficients)
{
  const auto layout = SpectralLayout::create(16, 2.0 * kPi);
  const auto f = sample(layout, [](const Vec3 &x) { return 3.0 + std::cos(2.0 * x[2]); });
  const auto &c = f.spectrum();
  EXPECT_NEAR(c[0].real(), 3.0, 1e-14);
  EXPECT_NEAR(c[2].real(), 0.5, 1e-14);
  EXPECT_NEAR(f.mean(), 3.0, 1e-14);
}

TEST(Field, ParsevalMatchesGridSum)
{
  const auto layout = SpectralLayout::create(16, 5.0);
  const auto f = sample(layout, [](const Vec3 &x) {
    return std::exp(std::sin(2.0 * kPi * x[0] / 5.0)) * std::cos(2.0 * kPi * x[1] / 5.0);
  });
  double grid = 0.0;
  for (double v : f.values())
  {
    grid += v * v;
  }
  grid *= layout->cell_volume();
  EXPECT_NEAR(spectral_energy(f.spectrum(), *layout) * layout->volume(), grid, 1e-12 * grid);
}

TEST(Field, SpectrumRoundTrip)
{
  const auto layout = SpectralLayout::create(16, 2.0 * kPi);
  const auto f = sample(layout, wave);
  const auto g = ScalarField::from_spectrum(layout, f.spectrum());
  EXPECT_LT(max_diff(f, g), 1e-14);
}

TEST(Field, SpectralLinearCombinationsMatchSamples)
{
  const auto layout = SpectralLayout::create(16, 2.0 * kPi);
  const auto f = sample(layout, wave);
  const auto h = sample(layout, [](const Vec3 &x) { return std::sin(x[1]); });
  // Both operands carry spectra only, so the combination is formed spectrally.
  auto a = ScalarField::from_spectrum(layout, f.spectrum());
  const auto b = ScalarField::from_spectrum(layout, h.spectrum());
  a.axpy(-2.5, b);
  a *= 3.0;
  ScalarField ref(layout);
  auto v = ref.mutable_values();
  for (std::size_t p = 0; p < v.size(); ++p)
  {
    v[p] = 3.0 * (f[p] - 2.5 * h[p]);
  }
  EXPECT_LT(max_diff(a, ref), 1e-13);
  // The copy shares the spectrum; changing it must not touch the original.
  auto copy = a;
  copy *= 0.0;
  EXPECT_LT(max_diff(a, ref), 1e-13);
}

TEST(SpectralOps, DerivativeOfPlaneWave)
{
  const auto layout = SpectralLayout::create(16, 2.0 * kPi);
  const auto f = sample(layout, wave);
  const auto dfdy = derivative(f, 1);
  const auto expected = sample(layout, [](const Vec3 &x) {
    return std::cos(2.0 * x[1] - x[2]) - 0.25 * std::sin(x[0] + x[1] + x[2]);
  });
  EXPECT_LT(max_diff(dfdy, expected), 1e-12);
}

TEST(SpectralOps, NyquistPlaneHasNoDerivative)
{
  const auto layout = SpectralLayout::create(8, 2.0 * kPi);
  const auto f = sample(layout, [](const Vec3 &x) { return std::cos(4.0 * x[0]); });
  EXPECT_LT(derivative(f, 0).max_abs(), 1e-15);
}

TEST(SpectralOps, FractionalLaplacianScalesSingleMode)
{
  const auto layout = SpectralLayout::create(16, 2.0 * kPi);
  const auto f = sample(layout, [](const Vec3 &x) { return std::sin(x[0] + 2.0 * x[1]); });
  const auto g = fractional_laplacian(f, -1.5);
  const double factor = std::pow(5.0, -0.75);
  ScalarField expected = factor * f;
  EXPECT_LT(max_diff(g, expected), 1e-14);

  const auto shifted = sample(layout, [](const Vec3 &x) { return 1.0 + std::sin(x[0]); });
  EXPECT_THROW(fractional_laplacian(shifted, -0.5), NonZeroMean);
  EXPECT_NO_THROW(fractional_laplacian(shifted, 0.5));
}

TEST(SpectralOps, LerayProjectionIsSolenoidalAndIdempotent)
{
  const auto layout = SpectralLayout::create(16, 2.0 * kPi);
  VectorField v(sample(layout, wave), sample(layout, [](const Vec3 &x) { return std::cos(x[0] - x[1]); }),
                sample(layout, [](const Vec3 &x) { return std::sin(3.0 * x[2]); }));
  const auto p = solenoidal_project(v);
  EXPECT_LT(divergence_residual(p), 1e-14);
  const auto pp = solenoidal_project(p);
  for (int a = 0; a < 3; ++a)
  {
    EXPECT_LT(max_diff(p[a], pp[a]), 1e-14);
  }
}

TEST(SpectralOps, GaussSolveInvertsDivergenceAndIsCurlFree)
{
  const auto layout = SpectralLayout::create(16, 3.0);
  const auto rho = remove_mean(sample(layout, [](const Vec3 &x) {
    return std::cos(2.0 * kPi * x[0] / 3.0) * std::sin(4.0 * kPi * x[2] / 3.0);
  }));
  const auto E = gauss_electric_field(rho);
  EXPECT_LT(max_diff(divergence(E), rho), 1e-13);
  const auto c = curl(E);
  EXPECT_LT(c.max_abs(), 1e-13);

  const auto charged = sample(layout, [](const Vec3 &) { return 1.0; });
  EXPECT_THROW(gauss_electric_field(charged), NonZeroMean);
}

TEST(SpectralOps, CurlOfGradientAndDivergenceOfCurlVanish)
{
  const auto layout = SpectralLayout::create(8, 2.0 * kPi);
  const auto f = sample(layout, wave);
  EXPECT_LT(curl(gradient(f)).max_abs(), 1e-13);
  VectorField v(f, derivative(f, 2), sample(layout, [](const Vec3 &x) { return std::cos(4.0 * x[1]); }));
  EXPECT_LT(divergence(curl(v)).max_abs(), 1e-13);
}

TEST(SpectralOps, DealiasKeepsOnlyTheTwoThirdsBand)
{
  const auto layout = SpectralLayout::create(12, 2.0 * kPi);
  const auto low = sample(layout, [](const Vec3 &x) { return std::cos(4.0 * x[0]); });
  const auto high = sample(layout, [](const Vec3 &x) { return std::cos(5.0 * x[1]); });
  EXPECT_LT(max_diff(dealias(low), low), 1e-15);
  EXPECT_LT(dealias(high).max_abs(), 1e-14);
}

TEST(SpectralOps, ZeroMeanTest)
{
  const auto layout = SpectralLayout::create(8, 1.0);
  auto f = sample(layout, [](const Vec3 &x) { return std::cos(2.0 * kPi * x[0]); });
  EXPECT_TRUE(has_zero_mean(f));
  for (auto &v : f.mutable_values())
  {
    v += 1e-3;
  }
  EXPECT_FALSE(has_zero_mean(f));
  EXPECT_THROW(require_zero_mean(f, "test"), NonZeroMean);
  EXPECT_TRUE(has_zero_mean(remove_mean(f)));
}
