// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <functional>
#include <numbers>

#include <gtest/gtest.h>

#include "bem/errors.hpp"
#include "bem/field/spectral_ops.hpp"
#include "bem/harness/initial_data.hpp"
#include "bem/model/system.hpp"

using namespace bem;

namespace
{

constexpr double kPi = std::numbers::pi;

using Profile = std::function<double(const Vec3 &)>;

ScalarField sample(const LayoutPtr &layout, const Profile &fn)
{
  ScalarField f(layout);
  auto v = f.mutable_values();
  for (std::size_t p = 0; p < v.size(); ++p)
  {
    v[p] = fn(layout->position(p));
  }
  return f;
}

VectorField sample(const LayoutPtr &layout, const Profile &x, const Profile &y, const Profile &z)
{
  return VectorField(sample(layout, x), sample(layout, y), sample(layout, z));
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

double max_diff(const VectorField &a, const VectorField &b)
{
  return std::max({max_diff(a[0], b[0]), max_diff(a[1], b[1]), max_diff(a[2], b[2])});
}

const Profile zero = [](const Vec3 &) { return 0.0; };

}  // namespace

TEST(Params, DerivedConstants)
{
  const ModelParams p3(3.0);
  EXPECT_DOUBLE_EQ(p3.mu(), 1.0);
  EXPECT_DOUBLE_EQ(p3.nu(), 1.0 / std::sqrt(3.0));
  EXPECT_EQ(p3.polynomial_degree(), 1);
  EXPECT_EQ(ModelParams(2.0).polynomial_degree(), 2);
  EXPECT_EQ(ModelParams(5.0 / 3.0).polynomial_degree(), 3);
  EXPECT_EQ(ModelParams(1.4).polynomial_degree(), 5);
  EXPECT_EQ(ModelParams(1.5).polynomial_degree(), 4);
  EXPECT_EQ(ModelParams(2.5).polynomial_degree(), 0);
  EXPECT_DOUBLE_EQ(ModelParams(1.0).mu(), 0.0);
  EXPECT_THROW(ModelParams(0.5), ConfigError);
}

TEST(DensityMap, MatchesDirectPower)
{
  for (double gamma : {1.0, 1.4, 5.0 / 3.0, 2.0, 2.5, 3.0})
  {
    const ModelParams params(gamma);
    const double mu = params.mu();
    for (double n : {-0.7, -0.1, 1e-6, 0.3, 1.2})
    {
      const double direct = mu == 0.0 ? std::exp(n) - 1.0 : std::pow(1.0 + mu * n, 1.0 / mu) - 1.0;
      EXPECT_NEAR(density_map(n, params), direct, 1e-14 * std::max(1.0, std::abs(direct)))
        << "gamma " << gamma << " n " << n;
      EXPECT_NEAR(inverse_density_map(density_map(n, params), params), n, 1e-14);
    }
  }
}

TEST(DensityMap, IsTheIdentityAtGammaThree)
{
  const ModelParams params(3.0);
  for (double n : {-0.5, 1e-9, 0.25, 2.0})
  {
    EXPECT_DOUBLE_EQ(density_map(n, params), n);
  }
}

TEST(DensityMap, KeepsRelativeAccuracyForTinyArguments)
{
  const ModelParams params(5.0 / 3.0);
  // f(n) = n + (1 - mu) n^2 / 2 + O(n^3)
  const double n = 1e-12;
  EXPECT_NEAR(density_map(n, params) / n, 1.0 + (1.0 - params.mu()) * n / 2.0, 1e-15);
}

TEST(DensityMap, UnderflowIsReported)
{
  const ModelParams params(2.0);
  EXPECT_THROW(density_map(-2.0, params), DensityUnderflow);
  EXPECT_THROW(density_map(-3.0, params), DensityUnderflow);
  EXPECT_THROW(inverse_density_map(-1.0, params), DensityUnderflow);
  EXPECT_NO_THROW(density_map(-1.9, params));
}

TEST(GFunction, ExactFormsForPolynomialMaps)
{
  const auto layout = SpectralLayout::create(16, 2.0 * kPi);
  const auto n1 = sample(layout, [](const Vec3 &x) { return 0.1 * std::cos(x[0]); });
  const auto n2 = sample(layout, [](const Vec3 &x) { return 0.05 * std::sin(x[1] + x[2]); });

  // gamma = 3: f is the identity, so g = -n2.
  EXPECT_LT(max_diff(g_function(n1, n2, ModelParams(3.0)), -1.0 * n2), 1e-16);

  // gamma = 2: f(n) = n + n^2/4, so g = -n2 - n1 n2 / 4.
  const auto g = g_function(n1, n2, ModelParams(2.0));
  const auto expected = sample(layout, [](const Vec3 &x) {
    const double a = 0.1 * std::cos(x[0]);
    const double b = 0.05 * std::sin(x[1] + x[2]);
    return -b - a * b / 4.0;
  });
  EXPECT_LT(max_diff(g, expected), 1e-16);
}

TEST(SumDifference, RoundTrip)
{
  const auto layout = SpectralLayout::create(8, 2.0 * kPi);
  SpeciesPair sp{sample(layout, [](const Vec3 &x) { return std::cos(x[0]); }),
                 sample(layout, [](const Vec3 &x) { return std::sin(x[1]); }),
                 sample(layout, zero, [](const Vec3 &x) { return std::cos(x[2]); }, zero),
                 sample(layout, [](const Vec3 &x) { return std::sin(x[0] + x[1]); }, zero, zero)};
  const auto sd = to_sum_difference(sp);
  EXPECT_LT(max_diff(sd.n1, sp.n_plus + sp.n_minus), 1e-15);
  EXPECT_LT(max_diff(sd.n2, sp.n_plus - sp.n_minus), 1e-15);
  const auto back = from_sum_difference(sd);
  EXPECT_LT(max_diff(back.n_plus, sp.n_plus), 1e-15);
  EXPECT_LT(max_diff(back.n_minus, sp.n_minus), 1e-15);
  EXPECT_LT(max_diff(back.u_plus, sp.u_plus), 1e-15);
  EXPECT_LT(max_diff(back.u_minus, sp.u_minus), 1e-15);
}

TEST(Scaling, PhysicalRoundTrip)
{
  const auto layout = SpectralLayout::create(8, 2.0 * kPi);
  const ModelParams params(5.0 / 3.0, {0.0, 0.0, 0.4});
  PhysicalFields phys{sample(layout, [](const Vec3 &x) { return 1.0 + 0.2 * std::cos(x[0]); }),
                      sample(layout, [](const Vec3 &x) { return 1.0 - 0.1 * std::sin(x[2]); }),
                      sample(layout, [](const Vec3 &x) { return 0.3 * std::sin(x[1]); }, zero, zero),
                      sample(layout, zero, zero, [](const Vec3 &x) { return 0.2 * std::cos(x[0]); }),
                      sample(layout, zero, [](const Vec3 &x) { return 0.1 * std::cos(x[2]); }, zero),
                      sample(layout, zero, zero, [](const Vec3 &) { return 0.4 * std::sqrt(5.0 / 3.0); })};
  const auto U = scale_physical_to_reformulated(phys, params);
  // A uniform physical field equal to sqrt(gamma) B_infinity leaves no perturbation.
  EXPECT_LT(U.B.max_abs(), 1e-15);
  // Species density rho = 1 + f(n).
  const auto sp = from_sum_difference({U.n1, U.n2, U.u1, U.u2});
  for (std::size_t p = 0; p < sp.n_plus.size(); ++p)
  {
    EXPECT_NEAR(1.0 + density_map(sp.n_plus[p], params), phys.density_plus[p], 1e-14);
  }
  const auto back = scale_reformulated_to_physical(U, params);
  EXPECT_LT(max_diff(back.density_plus, phys.density_plus), 1e-14);
  EXPECT_LT(max_diff(back.density_minus, phys.density_minus), 1e-14);
  EXPECT_LT(max_diff(back.velocity_plus, phys.velocity_plus), 1e-15);
  EXPECT_LT(max_diff(back.velocity_minus, phys.velocity_minus), 1e-15);
  EXPECT_LT(max_diff(back.electric, phys.electric), 1e-15);
  EXPECT_LT(max_diff(back.magnetic, phys.magnetic), 1e-15);
  EXPECT_DOUBLE_EQ(physical_time(3.0, ModelParams(4.0)), 1.5);

  phys.density_minus.mutable_values()[3] = 0.0;
  EXPECT_THROW(scale_physical_to_reformulated(phys, params), DensityUnderflow);
}

TEST(Rhs, LinearTendenciesOfSimpleModes)
{
  const auto layout = SpectralLayout::create(16, 2.0 * kPi);
  const double b = 0.7;
  const ModelParams params(2.0, {0.0, 0.0, b}, false);
  const double nu = params.nu();

  State U(layout);
  U.n1 = sample(layout, [](const Vec3 &x) { return std::cos(x[0]); });
  U.u1 = sample(layout, zero, [](const Vec3 &x) { return std::sin(x[0]); }, zero);
  U.n2 = sample(layout, [](const Vec3 &x) { return 0.5 * std::cos(x[1]); });
  U.u2 = sample(layout, [](const Vec3 &x) { return std::sin(x[0]); }, zero, zero);
  U.E = sample(layout, zero, zero, [](const Vec3 &x) { return std::cos(x[1]); });
  U.B = sample(layout, [](const Vec3 &x) { return std::sin(x[2]); }, zero, zero);

  const auto T = rhs(U, params);
  EXPECT_LT(T.n1.max_abs(), 1e-14);
  EXPECT_LT(max_diff(T.u1, sample(layout, [](const Vec3 &x) { return std::sin(x[0]); },
                                  [=](const Vec3 &x) { return -(nu + b) * std::sin(x[0]); }, zero)),
            1e-14);
  EXPECT_LT(max_diff(T.n2, sample(layout, [](const Vec3 &x) { return -std::cos(x[0]); })), 1e-14);
  EXPECT_LT(max_diff(T.u2, sample(layout, [=](const Vec3 &x) { return (b - nu) * std::sin(x[0]); },
                                  [](const Vec3 &x) { return 0.5 * std::sin(x[1]); },
                                  [=](const Vec3 &x) { return 2.0 * nu * std::cos(x[1]); })),
            1e-14);
  EXPECT_LT(max_diff(T.E, sample(layout, [=](const Vec3 &x) { return -nu * std::sin(x[0]); },
                                 [=](const Vec3 &x) { return nu * std::cos(x[2]); }, zero)),
            1e-14);
  EXPECT_LT(max_diff(T.B, sample(layout, [=](const Vec3 &x) { return nu * std::sin(x[1]); }, zero,
                                 zero)),
            1e-14);
}

TEST(Rhs, TransportNonlinearityOfOneMode)
{
  const auto layout = SpectralLayout::create(16, 2.0 * kPi);
  const ModelParams params(2.0);
  const double mu = params.mu();
  const double a = 0.1;
  State U(layout);
  U.n1 = sample(layout, [=](const Vec3 &x) { return a * std::cos(x[0]); });
  U.u1 = sample(layout, [=](const Vec3 &x) { return a * std::sin(x[0]); }, zero, zero);
  const auto terms = nonlinear_terms(U, params);
  // g1 = -(u1 . grad n1)/2 - mu n1 div u1 / 2 with every other field zero.
  const auto g1 = sample(layout, [=](const Vec3 &x) {
    return 0.5 * a * a * (std::sin(x[0]) * std::sin(x[0]) - mu * std::cos(x[0]) * std::cos(x[0]));
  });
  EXPECT_LT(max_diff(terms.g1, g1), 1e-16);
  // g2_x = -(u1 d_x u1_x)/2 - mu n1 d_x n1 / 2
  const auto g2x = sample(layout, [=](const Vec3 &x) {
    return 0.5 * a * a * (mu - 1.0) * std::sin(x[0]) * std::cos(x[0]);
  });
  EXPECT_LT(max_diff(terms.g2[0], g2x), 1e-16);
  EXPECT_LT(terms.g3.max_abs(), 1e-17);
  // g5 = nu (f(n-) u- - f(n+) u+) with n+- = n1/2, u+- = u1/2
  EXPECT_LT(terms.g5.max_abs(), 1e-17);
}

TEST(GaussResidual, InitialDataSatisfyTheConstraint)
{
  RunConfig config;
  config.resolution = 16;
  config.box_length = 16.0;
  config.gamma = 2.0;
  const auto layout = SpectralLayout::create(16, 16.0);
  const auto params = config.model();
  const auto data = make_initial_data(config, layout, params);
  EXPECT_LT(gauss_residual(data.state, params), 1e-12);
  EXPECT_LT(divergence_residual(data.state.B), 1e-12);

  // Adding a longitudinal perturbation to E breaks it.
  State broken = data.state;
  broken.E[0] += sample(layout, [](const Vec3 &x) { return 1e-4 * std::sin(2.0 * kPi * x[0] / 16.0); });
  EXPECT_GT(gauss_residual(broken, params), 1e-3);
}
