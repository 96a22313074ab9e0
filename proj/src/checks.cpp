// SPDX-License-Identifier: Apache-2.0

#include "bem/inequalities/checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bem/errors.hpp"
#include "bem/field/spectral_ops.hpp"
#include "bem/model/system.hpp"
#include "bem/norms/littlewood_paley.hpp"
#include "bem/norms/norms.hpp"

namespace bem
{

namespace
{

double safe_ratio(double num, double den)
{
  if (den == 0.0)
  {
    return num == 0.0 ? 0.0 : kInfinity;
  }
  return num / den;
}

double derivative_l2(const ScalarField &f, int l)
{
  return std::sqrt(level_energies(f, l)[l]);
}

}  // namespace

double gagliardo_nirenberg_theta(double p, int alpha, int m, int l)
{
  if (!(p >= 1.0) || alpha < 0 || m < 0 || l < 0)
  {
    throw IncompatibleExponents("exponents must satisfy p >= 1 and non-negative orders");
  }
  const double lhs = alpha + 3.0 * (0.5 - (std::isinf(p) ? 0.0 : 1.0 / p));
  std::ostringstream msg;
  msg << "no admissible theta for p = " << p << ", alpha = " << alpha << ", m = " << m
      << ", l = " << l;
  if (l == m)
  {
    throw IncompatibleExponents(msg.str());
  }
  const double theta = (lhs - m) / double(l - m);
  const double eps = 1e-12;
  const bool ok = std::isinf(p) ? (theta > eps && theta < 1.0 - eps)
                                : (theta >= -eps && theta <= 1.0 + eps);
  if (!ok)
  {
    throw IncompatibleExponents(msg.str());
  }
  return std::clamp(theta, 0.0, 1.0);
}

double check_gagliardo_nirenberg(const ScalarField &f, double p, int alpha, int m, int l)
{
  const double theta = gagliardo_nirenberg_theta(p, alpha, m, l);
  const double lhs = p == 2.0 ? derivative_l2(f, alpha) : tensor_derivative_lp_norm(f, alpha, p);
  const double rhs =
    std::pow(derivative_l2(f, m), 1.0 - theta) * std::pow(derivative_l2(f, l), theta);
  return safe_ratio(lhs, rhs);
}

double h3_norm(const ScalarField &n)
{
  const auto e = level_energies(n, 3);
  return std::sqrt(e[0] + e[1] + e[2] + e[3]);
}

CompositionRatios check_composition(const ScalarField &n, int k, const ModelParams &params)
{
  if (k < 0)
  {
    throw ConfigError("derivative order must be non-negative");
  }
  const double amp = h3_norm(n);
  if (amp > kCompositionAmplitudeLimit)
  {
    std::ostringstream msg;
    msg << "||n||_H3 = " << amp << " exceeds the small-amplitude limit "
        << kCompositionAmplitudeLimit;
    throw AmplitudeTooLarge(msg.str());
  }
  const auto fn = f_of_n(n, params);
  CompositionRatios out;
  const double inf_lhs = tensor_derivative_lp_norm(fn, k, kInfinity);
  const double inf_rhs = std::sqrt(derivative_l2(n, k + 1) * derivative_l2(n, k + 2));
  out.ratio_inf = safe_ratio(inf_lhs, inf_rhs);
  out.ratio_l2 = safe_ratio(derivative_l2(fn, k), derivative_l2(n, k));
  return out;
}

double check_commutator(const ScalarField &g, const ScalarField &h, int k)
{
  if (k < 1)
  {
    throw ConfigError("commutator order must be at least 1");
  }
  ScalarField gh(g.layout_ptr());
  {
    auto v = gh.mutable_values();
    const auto a = g.values();
    const auto b = h.values();
    for (std::size_t p = 0; p < v.size(); ++p)
    {
      v[p] = a[p] * b[p];
    }
  }
  const auto d_gh = tensor_derivative(gh, k);
  const auto d_h = tensor_derivative(h, k);
  const auto gv = g.values();
  double sum = 0.0;
  for (std::size_t c = 0; c < d_gh.size(); ++c)
  {
    const auto x = d_gh[c].values();
    const auto y = d_h[c].values();
    for (std::size_t p = 0; p < x.size(); ++p)
    {
      const double d = x[p] - gv[p] * y[p];
      sum += d * d;
    }
  }
  const double lhs = std::sqrt(sum * g.layout().cell_volume());
  const double rhs = tensor_derivative_lp_norm(g, 1, kInfinity) * derivative_l2(h, k - 1) +
                     derivative_l2(g, k) * lp_norm(h, kInfinity);
  return safe_ratio(lhs, rhs);
}

double embedding_order(double p)
{
  return 3.0 * (1.0 / p - 0.5);
}

double check_riesz_embedding(const ScalarField &f, double p)
{
  if (!(p > 1.0 && p <= 2.0))
  {
    throw ExponentOutOfRange("Sobolev embedding needs 1 < p <= 2");
  }
  return safe_ratio(homogeneous_sobolev_norm(f, -embedding_order(p)), lp_norm(f, p));
}

double check_besov_embedding(const ScalarField &f, double p)
{
  if (!(p >= 1.0 && p <= 2.0))
  {
    throw ExponentOutOfRange("Besov embedding needs 1 <= p <= 2");
  }
  return safe_ratio(besov_norm(f, embedding_order(p)), lp_norm(f, p));
}

double check_interpolation(const ScalarField &f, int l, double s, NegativeSpace space)
{
  if (l < 0)
  {
    throw ConfigError("interpolation order must be non-negative");
  }
  if (space == NegativeSpace::besov ? !(s > 0.0) : !(s >= 0.0))
  {
    throw ExponentOutOfRange("interpolation exponent out of range");
  }
  require_zero_mean(f, "check_interpolation");
  const double theta = 1.0 / (l + 1.0 + s);
  const double neg = space == NegativeSpace::sobolev ? homogeneous_sobolev_norm(f, -s)
                                                     : besov_norm(f, s);
  const double lhs = derivative_l2(f, l);
  const double rhs = std::pow(derivative_l2(f, l + 1), 1.0 - theta) * std::pow(neg, theta);
  return safe_ratio(lhs, rhs);
}

}  // namespace bem
