// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "bem/field/field.hpp"

namespace bem
{

// Relative tolerance used to decide that a field has (numerically) zero mean: the L2 norm of
// the mean part must not exceed this fraction of the full L2 norm.
inline constexpr double kZeroMeanTolerance = 1e-10;

// Applies fn(s, c) -> Complex to every half-spectrum coefficient and transforms back.
template <class Fn>
ScalarField map_spectrum(const ScalarField &f, Fn &&fn)
{
  const auto &in = f.spectrum();
  std::vector<Complex> out(in.size());
  for (std::size_t s = 0; s < in.size(); ++s)
  {
    out[s] = fn(s, in[s]);
  }
  return ScalarField::from_spectrum(f.layout_ptr(), std::move(out));
}

// True when |mean| sqrt(V) <= tol * ||f||_{L2}.
bool has_zero_mean(const ScalarField &f, double tol = kZeroMeanTolerance);
// Throws NonZeroMean (with `context` in the message) when has_zero_mean fails.
void require_zero_mean(const ScalarField &f, const char *context);

// d f / d x_axis: multiplication by i xi_axis. The unpaired Nyquist plane of that axis is
// zeroed so the result stays real.
ScalarField derivative(const ScalarField &f, int axis);

// Lambda^s f: coefficients scaled by |xi|^s, zero mode mapped to zero. For s < 0 the field
// must have zero mean (NonZeroMean otherwise).
ScalarField fractional_laplacian(const ScalarField &f, double s);

// Leray projection: removes the gradient part so that div = 0 in spectral space.
VectorField solenoidal_project(const VectorField &v);

// Curl-free E with div E = rho on the torus: E_hat = -i xi rho_hat / |xi|^2. Requires
// zero-mean rho.
VectorField gauss_electric_field(const ScalarField &rho);

// Zeroes every coefficient outside the two-thirds mask.
ScalarField dealias(const ScalarField &f);
VectorField dealias(const VectorField &v);

ScalarField divergence(const VectorField &v);
VectorField gradient(const ScalarField &f);
VectorField curl(const VectorField &v);

// Removes the zero mode.
ScalarField remove_mean(const ScalarField &f);

// ||div v|| / max(||grad v||, floor), all spectral; a scale-free solenoidality measure.
double divergence_residual(const VectorField &v);

}  // namespace bem
