// SPDX-License-Identifier: Apache-2.0

#include "bem/field/spectral_ops.hpp"

#include <cmath>
#include <string>

#include "bem/errors.hpp"

namespace bem
{

namespace
{

constexpr Complex kI{0.0, 1.0};

}  // namespace

bool has_zero_mean(const ScalarField &f, double tol)
{
  const auto &c = f.spectrum();
  const double total = spectral_energy(c, f.layout());
  return std::norm(c[0]) <= tol * tol * total;
}

void require_zero_mean(const ScalarField &f, const char *context)
{
  if (!has_zero_mean(f))
  {
    throw NonZeroMean(std::string(context) + ": field mean " + std::to_string(f.mean()) +
                      " is not negligible");
  }
}

ScalarField derivative(const ScalarField &f, int axis)
{
  const auto &layout = f.layout();
  return map_spectrum(f, [&](std::size_t s, Complex c) {
    if (layout.is_nyquist(s, axis))
    {
      return Complex{};
    }
    return kI * layout.wavevector(s)[axis] * c;
  });
}

ScalarField fractional_laplacian(const ScalarField &f, double s)
{
  if (s < 0.0)
  {
    require_zero_mean(f, "fractional_laplacian");
  }
  const auto &layout = f.layout();
  return map_spectrum(f, [&](std::size_t q, Complex c) {
    if (q == 0)
    {
      return Complex{};
    }
    return std::pow(layout.wavenumber(q), s) * c;
  });
}

VectorField solenoidal_project(const VectorField &v)
{
  const auto &layout = v.layout();
  const std::size_t ns = layout.spectral_size();
  const auto &cx = v[0].spectrum();
  const auto &cy = v[1].spectrum();
  const auto &cz = v[2].spectrum();
  std::vector<Complex> ox(ns), oy(ns), oz(ns);
  for (std::size_t s = 0; s < ns; ++s)
  {
    const double k2 = layout.wavenumber(s) * layout.wavenumber(s);
    if (s == 0 || k2 == 0.0)
    {
      ox[s] = cx[s];
      oy[s] = cy[s];
      oz[s] = cz[s];
      continue;
    }
    const auto k = layout.wavevector(s);
    const Complex kdotv = k[0] * cx[s] + k[1] * cy[s] + k[2] * cz[s];
    ox[s] = cx[s] - k[0] * kdotv / k2;
    oy[s] = cy[s] - k[1] * kdotv / k2;
    oz[s] = cz[s] - k[2] * kdotv / k2;
  }
  const auto &lp = v.layout_ptr();
  return {ScalarField::from_spectrum(lp, std::move(ox)), ScalarField::from_spectrum(lp, std::move(oy)),
          ScalarField::from_spectrum(lp, std::move(oz))};
}

VectorField gauss_electric_field(const ScalarField &rho)
{
  require_zero_mean(rho, "gauss_electric_field");
  const auto &layout = rho.layout();
  const auto &c = rho.spectrum();
  const std::size_t ns = layout.spectral_size();
  std::array<std::vector<Complex>, 3> out;
  for (auto &o : out)
  {
    o.assign(ns, Complex{});
  }
  for (std::size_t s = 1; s < ns; ++s)
  {
    const auto k = layout.wavevector(s);
    const double k2 = layout.wavenumber(s) * layout.wavenumber(s);
    for (int a = 0; a < 3; ++a)
    {
      if (!layout.is_nyquist(s, a))
      {
        out[a][s] = -kI * k[a] * c[s] / k2;
      }
    }
  }
  const auto &lp = rho.layout_ptr();
  return {ScalarField::from_spectrum(lp, std::move(out[0])),
          ScalarField::from_spectrum(lp, std::move(out[1])),
          ScalarField::from_spectrum(lp, std::move(out[2]))};
}

ScalarField dealias(const ScalarField &f)
{
  const auto &layout = f.layout();
  return map_spectrum(f, [&](std::size_t s, Complex c) {
    return layout.dealias_keep(s) ? c : Complex{};
  });
}

VectorField dealias(const VectorField &v)
{
  return {dealias(v[0]), dealias(v[1]), dealias(v[2])};
}

ScalarField divergence(const VectorField &v)
{
  const auto &layout = v.layout();
  const std::size_t ns = layout.spectral_size();
  std::vector<Complex> out(ns);
  for (int a = 0; a < 3; ++a)
  {
    const auto &c = v[a].spectrum();
    for (std::size_t s = 0; s < ns; ++s)
    {
      if (!layout.is_nyquist(s, a))
      {
        out[s] += kI * layout.wavevector(s)[a] * c[s];
      }
    }
  }
  return ScalarField::from_spectrum(v.layout_ptr(), std::move(out));
}

VectorField gradient(const ScalarField &f)
{
  return {derivative(f, 0), derivative(f, 1), derivative(f, 2)};
}

VectorField curl(const VectorField &v)
{
  const auto &layout = v.layout();
  const std::size_t ns = layout.spectral_size();
  std::array<std::vector<Complex>, 3> out;
  for (auto &o : out)
  {
    o.assign(ns, Complex{});
  }
  const auto &cx = v[0].spectrum();
  const auto &cy = v[1].spectrum();
  const auto &cz = v[2].spectrum();
  for (std::size_t s = 0; s < ns; ++s)
  {
    auto k = layout.wavevector(s);
    for (int a = 0; a < 3; ++a)
    {
      if (layout.is_nyquist(s, a))
      {
        k[a] = 0.0;
      }
    }
    out[0][s] = kI * (k[1] * cz[s] - k[2] * cy[s]);
    out[1][s] = kI * (k[2] * cx[s] - k[0] * cz[s]);
    out[2][s] = kI * (k[0] * cy[s] - k[1] * cx[s]);
  }
  const auto &lp = v.layout_ptr();
  return {ScalarField::from_spectrum(lp, std::move(out[0])),
          ScalarField::from_spectrum(lp, std::move(out[1])),
          ScalarField::from_spectrum(lp, std::move(out[2]))};
}

ScalarField remove_mean(const ScalarField &f)
{
  return map_spectrum(f, [](std::size_t s, Complex c) { return s == 0 ? Complex{} : c; });
}

double divergence_residual(const VectorField &v)
{
  const auto &layout = v.layout();
  const std::size_t ns = layout.spectral_size();
  double div2 = 0.0, grad2 = 0.0;
  const std::array<const std::vector<Complex> *, 3> c{&v[0].spectrum(), &v[1].spectrum(),
                                                      &v[2].spectrum()};
  for (std::size_t s = 0; s < ns; ++s)
  {
    const auto k = layout.wavevector(s);
    const double k2 = layout.wavenumber(s) * layout.wavenumber(s);
    Complex d{};
    double g = 0.0;
    for (int a = 0; a < 3; ++a)
    {
      if (!layout.is_nyquist(s, a))
      {
        d += k[a] * (*c[a])[s];
      }
      g += k2 * std::norm((*c[a])[s]);
    }
    const double w = layout.hermitian_weight(s);
    div2 += w * std::norm(d);
    grad2 += w * g;
  }
  if (grad2 <= 0.0)
  {
    return 0.0;
  }
  return std::sqrt(div2 / grad2);
}

}  // namespace bem
