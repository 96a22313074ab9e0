// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <memory>
#include <span>
#include <vector>

#include "bem/field/layout.hpp"

namespace bem
{

//
// Real scalar field sampled on the grid of a SpectralLayout.
//
// A field holds its physical samples, its half-spectrum coefficients, or both; whichever is
// missing is computed on first request and cached. Mutable access to the samples drops the
// spectrum. Linear combinations of fields that both carry spectra are formed on the spectra
// directly, so a chain of Runge-Kutta stages does not bounce through the transform. Copies
// share the (immutable) spectrum. Lazy filling is not synchronized, so a field must not be
// read from several threads before both representations have been materialized.
//
class ScalarField
{
public:
  explicit ScalarField(LayoutPtr layout);
  ScalarField(LayoutPtr layout, std::vector<double> values);

  // Builds the field from half-spectrum coefficients (1/N^3 normalization). The coefficients
  // are kept as the cache, so they should be Hermitian-consistent.
  static ScalarField from_spectrum(LayoutPtr layout, std::vector<Complex> coefficients);

  const SpectralLayout &layout() const { return *layout_; }
  const LayoutPtr &layout_ptr() const { return layout_; }
  std::size_t size() const { return layout_->grid_size(); }

  std::span<const double> values() const
  {
    if (!values_valid_)
    {
      materialize_values();
    }
    return values_;
  }
  std::span<double> mutable_values()
  {
    if (!values_valid_)
    {
      materialize_values();
    }
    spectrum_.reset();
    return values_;
  }
  double operator[](std::size_t p) const { return values()[p]; }

  const std::vector<Complex> &spectrum() const;
  bool has_spectrum() const { return spectrum_ != nullptr; }

  double mean() const;
  double max_abs() const;
  bool all_finite() const;

  ScalarField &operator+=(const ScalarField &other);
  ScalarField &operator-=(const ScalarField &other);
  ScalarField &operator*=(double a);
  // this += a * x
  ScalarField &axpy(double a, const ScalarField &x);
  void fill(double value);

private:
  void check_same_layout(const ScalarField &other) const;
  ScalarField(LayoutPtr layout, std::vector<Complex> coefficients);
  void materialize_values() const;
  std::vector<Complex> &own_spectrum();
  void drop_values();

  LayoutPtr layout_;
  mutable std::vector<double> values_;
  mutable bool values_valid_ = true;
  // Shared between copies; written in place only while uniquely owned.
  mutable std::shared_ptr<std::vector<Complex>> spectrum_;
};

ScalarField operator+(ScalarField a, const ScalarField &b);
ScalarField operator-(ScalarField a, const ScalarField &b);
ScalarField operator*(double a, ScalarField f);

// Three Cartesian components on a shared layout.
class VectorField
{
public:
  explicit VectorField(const LayoutPtr &layout);
  VectorField(ScalarField x, ScalarField y, ScalarField z);

  ScalarField &operator[](int axis) { return comp_[axis]; }
  const ScalarField &operator[](int axis) const { return comp_[axis]; }
  const SpectralLayout &layout() const { return comp_[0].layout(); }
  const LayoutPtr &layout_ptr() const { return comp_[0].layout_ptr(); }

  VectorField &operator+=(const VectorField &other);
  VectorField &operator-=(const VectorField &other);
  VectorField &operator*=(double a);
  VectorField &axpy(double a, const VectorField &x);

  // Largest pointwise Euclidean length.
  double max_abs() const;

private:
  std::array<ScalarField, 3> comp_;
};

VectorField operator+(VectorField a, const VectorField &b);
VectorField operator-(VectorField a, const VectorField &b);
VectorField operator*(double a, VectorField v);

// Sum over the full spectrum of |c|^2 (half-spectrum storage accounted for). Times the box
// volume this is the squared grid L2 norm.
double spectral_energy(const std::vector<Complex> &coefficients, const SpectralLayout &layout);

}  // namespace bem
