// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace bem
{

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

class FftEngine;

//
// Geometry of the periodic box [0, L)^3 sampled on an N^3 grid, together with the
// half-complex spectral index space used by the real-to-complex transforms.
//
// Physical sample (i, j, k) sits at (i h, j h, k h) and has flat index (i N + j) N + k.
// Spectral coefficient (i, j, k), 0 <= k <= N/2, has flat index (i N + j)(N/2 + 1) + k and
// integer mode m = (wrap(i), wrap(j), k) with wrap(i) = i for i <= N/2 and i - N otherwise.
// The forward transform carries the factor 1/N^3, so the coefficient of the zero mode is
// the grid mean and the inverse transform is a plain sum.
//
class SpectralLayout
{
public:
  // Resolution must be even and >= 8; box_length must be positive.
  static std::shared_ptr<const SpectralLayout> create(int resolution, double box_length);

  int resolution() const { return n_; }
  double box_length() const { return length_; }
  double spacing() const { return length_ / n_; }
  double volume() const { return length_ * length_ * length_; }
  double cell_volume() const
  {
    const double h = spacing();
    return h * h * h;
  }
  std::size_t grid_size() const { return grid_size_; }
  std::size_t spectral_size() const { return spectral_size_; }
  int half_extent() const { return n_ / 2 + 1; }

  // Signed integer mode of spectral flat index s.
  std::array<int, 3> mode(std::size_t s) const;
  // 2 pi m / L for spectral flat index s.
  Vec3 wavevector(std::size_t s) const
  {
    const auto m = mode(s);
    return {unit_ * m[0], unit_ * m[1], unit_ * m[2]};
  }
  double wavenumber(std::size_t s) const { return wavenumber_[s]; }
  std::span<const double> wavenumbers() const { return wavenumber_; }
  double fundamental() const { return unit_; }

  // Two-thirds rule: false iff some |m_i| > N/3.
  bool dealias_keep(std::size_t s) const { return keep_[s] != 0; }
  // True if |m_axis| == N/2 (the unpaired Nyquist plane of that axis).
  bool is_nyquist(std::size_t s, int axis) const { return (nyquist_[s] >> axis) & 1u; }
  // Multiplicity of a half-spectrum coefficient in the full spectrum: 1 on the k = 0 and
  // k = N/2 planes, 2 elsewhere.
  double hermitian_weight(std::size_t s) const { return hweight_[s]; }

  Vec3 position(std::size_t p) const;

  // Real samples -> coefficients (scaled by 1/N^3).
  void forward(std::span<const double> in, std::span<Complex> out) const;
  // Coefficients -> real samples. The input is not modified.
  void inverse(std::span<const Complex> in, std::span<double> out) const;

  SpectralLayout(int resolution, double box_length);
  ~SpectralLayout();
  SpectralLayout(const SpectralLayout &) = delete;
  SpectralLayout &operator=(const SpectralLayout &) = delete;

private:
  int n_;
  double length_;
  double unit_;
  std::size_t grid_size_;
  std::size_t spectral_size_;
  std::vector<double> wavenumber_;
  std::vector<unsigned char> keep_;
  std::vector<unsigned char> nyquist_;
  std::vector<double> hweight_;
  std::unique_ptr<FftEngine> fft_;
};

using LayoutPtr = std::shared_ptr<const SpectralLayout>;

}  // namespace bem
