// SPDX-License-Identifier: Apache-2.0

#include "bem/harness/decay_fit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "bem/errors.hpp"

namespace bem
{

DecayFit fit_decay_exponent(const std::vector<double> &t, const std::vector<double> &v, double t0,
                            double t1, double saturation_time, const std::string &channel)
{
  if (t.size() != v.size())
  {
    throw ConfigError("time and value series differ in length");
  }
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < t.size(); ++i)
  {
    if (t[i] < t0 || t[i] > t1)
    {
      continue;
    }
    if (!(v[i] > 0.0))
    {
      std::ostringstream msg;
      msg << "value " << v[i] << " at t = " << t[i] << " is not positive";
      throw NonPositiveValues(msg.str());
    }
    x.push_back(std::log1p(t[i]));
    y.push_back(std::log(v[i]));
  }
  const int n = int(x.size());
  if (n < kMinimumFitSamples)
  {
    std::ostringstream msg;
    msg << n << " samples in [" << t0 << ", " << t1 << "], need " << kMinimumFitSamples;
    throw InsufficientSamples(msg.str());
  }

  // Centering keeps both normal systems well conditioned.
  double xm = 0.0;
  for (double xi : x)
  {
    xm += xi;
  }
  xm /= n;
  Eigen::MatrixXd A(n, 3);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i)
  {
    const double d = x[i] - xm;
    A(i, 0) = 1.0;
    A(i, 1) = d;
    A(i, 2) = d * d;
    b(i) = y[i];
  }

  DecayFit fit;
  const Eigen::MatrixXd A1 = A.leftCols(2);
  const Eigen::Vector2d lin = A1.colPivHouseholderQr().solve(b);
  fit.exponent = lin(1);
  fit.log_prefactor = lin(0) - lin(1) * xm;
  const Eigen::VectorXd res = b - A1 * lin;
  double sxx = 0.0;
  for (int i = 0; i < n; ++i)
  {
    sxx += A(i, 1) * A(i, 1);
  }
  double ym = 0.0;
  for (double yi : y)
  {
    ym += yi;
  }
  ym /= n;
  double stot = 0.0;
  for (double yi : y)
  {
    stot += (yi - ym) * (yi - ym);
  }
  fit.r_squared = stot > 0.0 ? 1.0 - res.squaredNorm() / stot : 1.0;
  fit.exponent_stderr = n > 2 && sxx > 0.0 ? std::sqrt(res.squaredNorm() / (n - 2) / sxx) : 0.0;

  const Eigen::Vector3d quad = A.colPivHouseholderQr().solve(b);
  fit.curvature = 2.0 * quad(2);
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  const double width = *hi - *lo;
  fit.curvature_flag = std::abs(fit.curvature * width) > kCurvatureFlagThreshold;

  fit.channel = channel;
  fit.saturation_time = saturation_time;
  fit.window_t0 = t0;
  fit.window_t1 = t1;
  fit.samples = n;
  if (saturation_time > 0.0 && t1 > saturation_time)
  {
    fit.valid = false;
    std::ostringstream msg;
    msg << "window end " << t1 << " exceeds the box-saturation time " << saturation_time;
    fit.note = msg.str();
  }
  return fit;
}

}  // namespace bem
