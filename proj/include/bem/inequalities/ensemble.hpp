// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "bem/field/field.hpp"

namespace bem
{

struct EnsembleSpec
{
  std::uint64_t seed = 1;
  int count = 100;
  // Spectral envelope |f_hat(xi)| ~ |xi|^(-slope).
  double slope = 1.0;
  // Integer modes with every |m_i| <= max_mode are populated.
  int max_mode = 6;
  bool zero_mean = true;
};

//
// Seeded random band-limited fields. Each Fourier coefficient is drawn from its own
// generator keyed by (seed, member, mode), so member i describes the same trigonometric
// polynomial on every grid that resolves max_mode; this is what makes 32^3 and 64^3 results
// directly comparable.
//
class FieldEnsemble
{
public:
  explicit FieldEnsemble(EnsembleSpec spec);

  const EnsembleSpec &spec() const { return spec_; }
  int size() const { return spec_.count; }

  // Throws ConfigError if the layout cannot hold max_mode under the two-thirds mask.
  ScalarField member(int index, const LayoutPtr &layout) const;

private:
  EnsembleSpec spec_;
};

// Random-phase field with the given per-mode amplitude function of the wavevector, keyed
// like FieldEnsemble members. Used by the harness for data with a prescribed spectrum.
template <class Amplitude>
ScalarField random_phase_field(const LayoutPtr &layout, std::uint64_t seed, std::uint64_t stream,
                               int max_mode, Amplitude &&amplitude);

// Gaussian bump exp(-|x - c|^2 / (2 width^2)) (periodized by nearest image) minus its
// mean. A single-signed monopole: the endpoint example for the negative-order embeddings.
ScalarField centered_bump(const LayoutPtr &layout, double width);

namespace detail
{
// Standard complex Gaussian for one mode (real and imaginary parts N(0, 1/2)), keyed by
// (seed, stream, canonical mode). Conjugated when m is not canonical.
Complex mode_sample(std::uint64_t seed, std::uint64_t stream, int mx, int my, int mz);
}  // namespace detail

template <class Amplitude>
ScalarField random_phase_field(const LayoutPtr &layout, std::uint64_t seed, std::uint64_t stream,
                               int max_mode, Amplitude &&amplitude)
{
  std::vector<Complex> c(layout->spectral_size());
  for (std::size_t s = 0; s < c.size(); ++s)
  {
    const auto m = layout->mode(s);
    if (std::abs(m[0]) > max_mode || std::abs(m[1]) > max_mode || std::abs(m[2]) > max_mode)
    {
      continue;
    }
    const double a = amplitude(layout->wavevector(s), layout->wavenumber(s));
    if (a != 0.0)
    {
      c[s] = a * detail::mode_sample(seed, stream, m[0], m[1], m[2]);
    }
  }
  return ScalarField::from_spectrum(layout, std::move(c));
}

}  // namespace bem
