// SPDX-License-Identifier: Apache-2.0

#include "bem/linear/decay_profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "bem/errors.hpp"
#include "bem/norms/littlewood_paley.hpp"

namespace bem
{

Matrix12 aligned_symbol(double r, const Vec3 &b, const ModelParams &params)
{
  if (!(r > 0.0))
  {
    throw ConfigError("aligned symbol needs a nonzero wavenumber");
  }
  using C = std::complex<double>;
  const C I{0.0, 1.0};
  const double nu = params.nu();
  constexpr int n1 = 0, u1 = 1, n2 = 4, u2 = 5, Ep = 8, Bp = 10;
  const double cross_b[3][3] = {{0.0, b[2], -b[1]}, {-b[2], 0.0, b[0]}, {b[1], -b[0], 0.0}};

  Matrix12 A = Matrix12::Zero();
  A(n1, u1 + 2) = -I * r;
  A(n2, u2 + 2) = -I * r;
  A(u1 + 2, n1) = -I * r;
  A(u2 + 2, n2) = -I * r - 2.0 * I * nu * nu / r;
  for (int a = 0; a < 3; ++a)
  {
    A(u1 + a, u1 + a) = -nu;
    A(u2 + a, u2 + a) = -nu;
    for (int c = 0; c < 3; ++c)
    {
      A(u1 + a, u2 + c) += cross_b[a][c];
      A(u2 + a, u1 + c) += cross_b[a][c];
    }
  }
  A(u2 + 0, Ep + 0) = 2.0 * nu;
  A(u2 + 1, Ep + 1) = 2.0 * nu;
  A(Ep + 0, u2 + 0) = -nu;
  A(Ep + 1, u2 + 1) = -nu;
  // E' = i nu xi x B and B' = -i nu xi x E with xi = r e_z.
  A(Ep + 0, Bp + 1) = -I * nu * r;
  A(Ep + 1, Bp + 0) = I * nu * r;
  A(Bp + 0, Ep + 1) = I * nu * r;
  A(Bp + 1, Ep + 0) = -I * nu * r;
  return A;
}

const std::vector<std::string> &linear_channels()
{
  static const std::vector<std::string> names = {"U", "n1", "n2", "u", "E", "B", "psi"};
  return names;
}

const DecaySeries &LinearDecayProfile::get(const std::string &channel, int k) const
{
  for (const auto &s : series)
  {
    if (s.channel == channel && s.k == k)
    {
      return s;
    }
  }
  throw ConfigError("no linear series for channel '" + channel + "' at k = " + std::to_string(k));
}

std::vector<double> geometric_time_grid(double t_first, double t_last, int per_octave,
                                        bool include_zero)
{
  if (!(t_first > 0.0) || !(t_last >= t_first) || per_octave < 1)
  {
    throw ConfigError("invalid geometric time grid");
  }
  std::vector<double> base(per_octave);
  for (int i = 0; i < per_octave; ++i)
  {
    base[i] = t_first * std::pow(2.0, double(i) / per_octave);
  }
  std::vector<double> out;
  if (include_zero)
  {
    out.push_back(0.0);
  }
  const double limit = t_last * (1.0 + 1e-12);
  for (int octave = 0;; ++octave)
  {
    for (int i = 0; i < per_octave; ++i)
    {
      const double t = std::ldexp(base[i], octave);
      if (t > limit)
      {
        return out;
      }
      out.push_back(t);
    }
  }
}

std::vector<Vec3> fibonacci_directions(int n)
{
  if (n < 1)
  {
    throw ConfigError("need at least one direction");
  }
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Vec3> out(n);
  for (int i = 0; i < n; ++i)
  {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i;
    out[i] = {rho * std::cos(phi), rho * std::sin(phi), z};
  }
  return out;
}

namespace
{

double amplitude(double r, const LinearDecayConfig &config)
{
  const double power = std::pow(r, config.s - 1.5);
  const double x = r / config.cutoff_radius;
  if (config.spectrum == SpectrumClass::flat)
  {
    return power * LittlewoodPaley::cutoff(x);
  }
  return power * std::exp(-0.5 * x * x);
}

Vec3 frame_components(const Vec3 &d, const Vec3 &b)
{
  Vec3 a = std::abs(d[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  const double ad = a[0] * d[0] + a[1] * d[1] + a[2] * d[2];
  Vec3 e1{a[0] - ad * d[0], a[1] - ad * d[1], a[2] - ad * d[2]};
  const double n = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
  for (auto &x : e1)
  {
    x /= n;
  }
  const Vec3 e2{d[1] * e1[2] - d[2] * e1[1], d[2] * e1[0] - d[0] * e1[2],
                d[0] * e1[1] - d[1] * e1[0]};
  auto dot = [](const Vec3 &p, const Vec3 &q) { return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]; };
  return {dot(e1, b), dot(e2, b), dot(d, b)};
}

// exp(t A) for every requested time. A time that is exactly twice an earlier one reuses
// that propagator by squaring.
std::vector<Matrix12> propagators(const Matrix12 &A, const std::vector<double> &times)
{
  std::vector<std::size_t> order(times.size());
  for (std::size_t i = 0; i < order.size(); ++i)
  {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return times[a] < times[b]; });
  std::vector<Matrix12> out(times.size());
  std::vector<std::pair<double, std::size_t>> done;
  for (std::size_t idx : order)
  {
    const double t = times[idx];
    if (t == 0.0)
    {
      out[idx] = Matrix12::Identity();
    }
    else
    {
      const double half = 0.5 * t;
      const auto it = std::lower_bound(done.begin(), done.end(), std::make_pair(half, std::size_t(0)),
                                       [](const auto &p, const auto &q) { return p.first < q.first; });
      if (it != done.end() && it->first == half)
      {
        out[idx] = out[it->second] * out[it->second];
      }
      else
      {
        const Matrix12 tA = t * A;
        out[idx] = tA.exp();
      }
    }
    done.emplace_back(t, idx);
  }
  return out;
}

// sums[k index][channel][time]
using Sums = std::vector<std::vector<std::vector<double>>>;

Sums integrate(const LinearDecayConfig &config, const ModelParams &params, int shells)
{
  const auto &channels = linear_channels();
  const std::size_t nt = config.times.size();
  const std::size_t nk = config.k_values.size();
  Sums sums(nk, std::vector<std::vector<double>>(channels.size(), std::vector<double>(nt, 0.0)));

  const auto dirs = fibonacci_directions(config.directions);
  const double nu = params.nu();
  const double log_span = std::log(config.r_max / config.r_min);
  const double dlog = log_span / double(shells - 1);
  const double norm = 4.0 * std::numbers::pi / std::pow(2.0 * std::numbers::pi, 3) /
                      double(config.directions);

  std::array<double, 12> cov{};
  std::array<double, 7> value{};
  for (int i = 0; i < shells; ++i)
  {
    const double r = config.r_min * std::exp(dlog * i);
    const double w = dlog * ((i == 0 || i == shells - 1) ? 0.5 : 1.0);
    const double a = amplitude(r, config);
    if (a == 0.0)
    {
      continue;
    }
    cov.fill(a * a);
    cov[4] = r * r * a * a;

    for (const auto &d : dirs)
    {
      const auto A = aligned_symbol(r, frame_components(d, params.b_infinity()), params);
      const auto P = propagators(A, config.times);
      for (std::size_t ti = 0; ti < nt; ++ti)
      {
        std::array<double, 12> rows{};
        for (int q = 0; q < 12; ++q)
        {
          double acc = 0.0;
          for (int c = 0; c < 12; ++c)
          {
            acc += cov[c] * std::norm(P[ti](q, c));
          }
          rows[q] = acc;
        }
        value[1] = rows[0];
        value[2] = rows[4];
        value[3] = rows[1] + rows[2] + rows[3] + rows[5] + rows[6] + rows[7];
        value[4] = rows[8] + rows[9] + nu * nu / (r * r) * rows[4];
        value[5] = rows[10] + rows[11];
        value[6] = r * r * rows[7];
        value[0] = value[1] + value[2] + value[3] + value[4] + value[5];
        for (std::size_t ki = 0; ki < nk; ++ki)
        {
          const double radial = w * std::pow(r, 3 + 2 * config.k_values[ki]) * norm;
          for (std::size_t c = 0; c < channels.size(); ++c)
          {
            sums[ki][c][ti] += radial * value[c];
          }
        }
      }
    }
  }
  return sums;
}

}  // namespace

LinearDecayProfile linear_decay_profile(const LinearDecayConfig &config, const ModelParams &params)
{
  if (config.shells < 2 || config.directions < 1 || !(config.r_min > 0.0) ||
      !(config.r_max > config.r_min) || !(config.cutoff_radius > 0.0))
  {
    throw ConfigError("invalid linear quadrature configuration");
  }
  if (config.times.empty())
  {
    throw ConfigError("linear decay profile needs at least one time");
  }
  for (int k : config.k_values)
  {
    if (k < 0)
    {
      throw ConfigError("derivative order must be non-negative");
    }
  }

  const auto base = integrate(config, params, config.shells);
  const auto &channels = linear_channels();
  if (config.check_convergence)
  {
    const auto fine = integrate(config, params, 2 * config.shells);
    for (std::size_t ki = 0; ki < base.size(); ++ki)
    {
      for (std::size_t c = 0; c < channels.size(); ++c)
      {
        for (std::size_t ti = 0; ti < config.times.size(); ++ti)
        {
          const double whole = std::sqrt(fine[ki][0][ti]);
          const double a = std::sqrt(base[ki][c][ti]);
          const double b = std::sqrt(fine[ki][c][ti]);
          if (b <= config.convergence_floor * whole)
          {
            continue;
          }
          if (std::abs(a - b) > config.convergence_tolerance * b)
          {
            std::ostringstream msg;
            msg << "channel " << channels[c] << " (k = " << config.k_values[ki] << ") at t = "
                << config.times[ti] << " changed by " << std::abs(a - b) / b
                << " when the shell count was doubled";
            throw QuadratureNotConverged(msg.str());
          }
        }
      }
    }
  }

  LinearDecayProfile out;
  out.times = config.times;
  for (std::size_t ki = 0; ki < base.size(); ++ki)
  {
    for (std::size_t c = 0; c < channels.size(); ++c)
    {
      DecaySeries s{channels[c], config.k_values[ki], {}};
      s.values.reserve(config.times.size());
      for (double v : base[ki][c])
      {
        s.values.push_back(std::sqrt(std::max(v, 0.0)));
      }
      out.series.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace bem
