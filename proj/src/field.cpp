// SPDX-License-Identifier: Apache-2.0

#include "bem/field/field.hpp"

#include <algorithm>
#include <cmath>

#include "bem/errors.hpp"

namespace bem
{

ScalarField::ScalarField(LayoutPtr layout) : layout_(std::move(layout))
{
  if (!layout_)
  {
    throw ConfigError("field requires a layout");
  }
  values_.assign(layout_->grid_size(), 0.0);
}

ScalarField::ScalarField(LayoutPtr layout, std::vector<Complex> coefficients)
  : layout_(std::move(layout)),
    values_valid_(false),
    spectrum_(std::make_shared<std::vector<Complex>>(std::move(coefficients)))
{
}

ScalarField::ScalarField(LayoutPtr layout, std::vector<double> values)
  : layout_(std::move(layout)), values_(std::move(values))
{
  if (!layout_ || values_.size() != layout_->grid_size())
  {
    throw ConfigError("field sample count does not match the layout");
  }
}

ScalarField ScalarField::from_spectrum(LayoutPtr layout, std::vector<Complex> coefficients)
{
  if (coefficients.size() != layout->spectral_size())
  {
    throw ConfigError("spectrum size does not match the layout");
  }
  ScalarField f(std::move(layout), std::move(coefficients));
  return f;
}

void ScalarField::materialize_values() const
{
  values_.resize(layout_->grid_size());
  layout_->inverse(*spectrum_, values_);
  values_valid_ = true;
}

const std::vector<Complex> &ScalarField::spectrum() const
{
  if (!spectrum_)
  {
    auto c = std::make_shared<std::vector<Complex>>(layout_->spectral_size());
    layout_->forward(values(), *c);
    spectrum_ = std::move(c);
  }
  return *spectrum_;
}

double ScalarField::mean() const
{
  if (!values_valid_)
  {
    return (*spectrum_)[0].real();
  }
  double sum = 0.0;
  for (double v : values_)
  {
    sum += v;
  }
  return sum / double(values_.size());
}

double ScalarField::max_abs() const
{
  double m = 0.0;
  for (double v : values())
  {
    m = std::max(m, std::abs(v));
  }
  return m;
}

bool ScalarField::all_finite() const
{
  if (!values_valid_)
  {
    // A non-finite sample necessarily shows up in some coefficient and vice versa.
    return std::all_of(spectrum_->begin(), spectrum_->end(),
                       [](const Complex &c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
  }
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

void ScalarField::check_same_layout(const ScalarField &other) const
{
  if (layout_ != other.layout_ && (layout_->resolution() != other.layout_->resolution() ||
                                   layout_->box_length() != other.layout_->box_length()))
  {
    throw ConfigError("fields live on different layouts");
  }
}

ScalarField &ScalarField::operator+=(const ScalarField &other)
{
  return axpy(1.0, other);
}

ScalarField &ScalarField::operator-=(const ScalarField &other)
{
  return axpy(-1.0, other);
}

std::vector<Complex> &ScalarField::own_spectrum()
{
  if (spectrum_.use_count() > 1)
  {
    spectrum_ = std::make_shared<std::vector<Complex>>(*spectrum_);
  }
  return *spectrum_;
}

void ScalarField::drop_values()
{
  values_valid_ = false;
  std::vector<double>().swap(values_);
}

ScalarField &ScalarField::operator*=(double a)
{
  if (spectrum_)
  {
    for (auto &z : own_spectrum())
    {
      z *= a;
    }
  }
  if (values_valid_)
  {
    for (auto &v : values_)
    {
      v *= a;
    }
  }
  return *this;
}

ScalarField &ScalarField::axpy(double a, const ScalarField &x)
{
  check_same_layout(x);
  if (spectrum_ && x.spectrum_)
  {
    // x may share our spectrum; read through a local handle before detaching.
    const auto keep = x.spectrum_;
    const auto &in = *keep;
    auto &c = own_spectrum();
    for (std::size_t s = 0; s < c.size(); ++s)
    {
      c[s] += a * in[s];
    }
    if (values_valid_ && x.values_valid_)
    {
      for (std::size_t p = 0; p < values_.size(); ++p)
      {
        values_[p] += a * x.values_[p];
      }
    }
    else
    {
      drop_values();
    }
    return *this;
  }
  auto out = mutable_values();
  const auto in = x.values();
  for (std::size_t p = 0; p < out.size(); ++p)
  {
    out[p] += a * in[p];
  }
  return *this;
}

void ScalarField::fill(double value)
{
  auto out = mutable_values();
  std::fill(out.begin(), out.end(), value);
}

ScalarField operator+(ScalarField a, const ScalarField &b)
{
  a += b;
  return a;
}

ScalarField operator-(ScalarField a, const ScalarField &b)
{
  a -= b;
  return a;
}

ScalarField operator*(double a, ScalarField f)
{
  f *= a;
  return f;
}

VectorField::VectorField(const LayoutPtr &layout)
  : comp_{ScalarField(layout), ScalarField(layout), ScalarField(layout)}
{
}

VectorField::VectorField(ScalarField x, ScalarField y, ScalarField z)
  : comp_{std::move(x), std::move(y), std::move(z)}
{
}

VectorField &VectorField::operator+=(const VectorField &other)
{
  for (int a = 0; a < 3; ++a)
  {
    comp_[a] += other.comp_[a];
  }
  return *this;
}

VectorField &VectorField::operator-=(const VectorField &other)
{
  for (int a = 0; a < 3; ++a)
  {
    comp_[a] -= other.comp_[a];
  }
  return *this;
}

VectorField &VectorField::operator*=(double a)
{
  for (auto &c : comp_)
  {
    c *= a;
  }
  return *this;
}

VectorField &VectorField::axpy(double a, const VectorField &x)
{
  for (int i = 0; i < 3; ++i)
  {
    comp_[i].axpy(a, x.comp_[i]);
  }
  return *this;
}

double VectorField::max_abs() const
{
  const auto x = comp_[0].values(), y = comp_[1].values(), z = comp_[2].values();
  double m = 0.0;
  for (std::size_t p = 0; p < x.size(); ++p)
  {
    m = std::max(m, x[p] * x[p] + y[p] * y[p] + z[p] * z[p]);
  }
  return std::sqrt(m);
}

VectorField operator+(VectorField a, const VectorField &b)
{
  a += b;
  return a;
}

VectorField operator-(VectorField a, const VectorField &b)
{
  a -= b;
  return a;
}

VectorField operator*(double a, VectorField v)
{
  v *= a;
  return v;
}

double spectral_energy(const std::vector<Complex> &coefficients, const SpectralLayout &layout)
{
  double sum = 0.0;
  for (std::size_t s = 0; s < coefficients.size(); ++s)
  {
    sum += layout.hermitian_weight(s) * std::norm(coefficients[s]);
  }
  return sum;
}

}  // namespace bem
