// SPDX-License-Identifier: Apache-2.0

#include "bem/field/layout.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "bem/errors.hpp"

namespace bem
{

namespace
{

// The FFTW planner is not re-entrant.
std::mutex &planner_mutex()
{
  static std::mutex m;
  return m;
}

}  // namespace

// Owns the r2c/c2r plans for one layout. FFTW_ESTIMATE keeps plan selection (and hence
// every transform result) deterministic from run to run.
class FftEngine
{
public:
  explicit FftEngine(int n) : n_(n)
  {
    const std::size_t real_size = std::size_t(n) * n * n;
    const std::size_t cplx_size = std::size_t(n) * n * (n / 2 + 1);
    std::vector<double> r(real_size);
    std::vector<Complex> c(cplx_size);
    std::lock_guard lock(planner_mutex());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    forward_ = fftw_plan_dft_r2c_3d(n, n, n, r.data(), reinterpret_cast<fftw_complex *>(c.data()),
                                    flags);
    inverse_ = fftw_plan_dft_c2r_3d(n, n, n, reinterpret_cast<fftw_complex *>(c.data()), r.data(),
                                    flags);
    if (!forward_ || !inverse_)
    {
      throw Error("FFTW plan creation failed");
    }
  }

  ~FftEngine()
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(inverse_);
  }

  void forward(const double *in, Complex *out) const
  {
    // r2c never writes to its input, the cast only satisfies the C signature.
    fftw_execute_dft_r2c(forward_, const_cast<double *>(in), reinterpret_cast<fftw_complex *>(out));
  }

  void inverse(Complex *in_destroyed, double *out) const
  {
    fftw_execute_dft_c2r(inverse_, reinterpret_cast<fftw_complex *>(in_destroyed), out);
  }

private:
  int n_;
  fftw_plan forward_ = nullptr;
  fftw_plan inverse_ = nullptr;
};

std::shared_ptr<const SpectralLayout> SpectralLayout::create(int resolution, double box_length)
{
  return std::make_shared<const SpectralLayout>(resolution, box_length);
}

SpectralLayout::SpectralLayout(int resolution, double box_length)
  : n_(resolution), length_(box_length)
{
  if (resolution < 8 || resolution % 2 != 0)
  {
    throw ConfigError("resolution must be even and >= 8, got " + std::to_string(resolution));
  }
  if (!(box_length > 0.0) || !std::isfinite(box_length))
  {
    throw ConfigError("box length must be positive");
  }
  unit_ = 2.0 * std::numbers::pi / length_;
  grid_size_ = std::size_t(n_) * n_ * n_;
  spectral_size_ = std::size_t(n_) * n_ * (n_ / 2 + 1);
  wavenumber_.resize(spectral_size_);
  keep_.resize(spectral_size_);
  nyquist_.resize(spectral_size_);
  hweight_.resize(spectral_size_);
  const int nz = n_ / 2 + 1;
  for (std::size_t s = 0; s < spectral_size_; ++s)
  {
    const auto m = mode(s);
    const double kx = unit_ * m[0], ky = unit_ * m[1], kz = unit_ * m[2];
    wavenumber_[s] = std::sqrt(kx * kx + ky * ky + kz * kz);
    const bool keep = 3 * std::abs(m[0]) <= n_ && 3 * std::abs(m[1]) <= n_ &&
                      3 * std::abs(m[2]) <= n_;
    keep_[s] = keep ? 1 : 0;
    unsigned char nyq = 0;
    for (int a = 0; a < 3; ++a)
    {
      if (std::abs(m[a]) == n_ / 2)
      {
        nyq |= static_cast<unsigned char>(1u << a);
      }
    }
    nyquist_[s] = nyq;
    const int k = int(s % nz);
    hweight_[s] = (k == 0 || k == n_ / 2) ? 1.0 : 2.0;
  }
  fft_ = std::make_unique<FftEngine>(n_);
}

SpectralLayout::~SpectralLayout() = default;

std::array<int, 3> SpectralLayout::mode(std::size_t s) const
{
  const int nz = n_ / 2 + 1;
  const int k = int(s % nz);
  const std::size_t ij = s / nz;
  const int j = int(ij % n_);
  const int i = int(ij / n_);
  auto wrap = [this](int q) { return q <= n_ / 2 ? q : q - n_; };
  return {wrap(i), wrap(j), k};
}

Vec3 SpectralLayout::position(std::size_t p) const
{
  const std::size_t k = p % n_;
  const std::size_t j = (p / n_) % n_;
  const std::size_t i = p / (std::size_t(n_) * n_);
  const double h = spacing();
  return {h * double(i), h * double(j), h * double(k)};
}

void SpectralLayout::forward(std::span<const double> in, std::span<Complex> out) const
{
  if (in.size() != grid_size_ || out.size() != spectral_size_)
  {
    throw ConfigError("forward transform: size mismatch");
  }
  fft_->forward(in.data(), out.data());
  const double scale = 1.0 / double(grid_size_);
  for (auto &c : out)
  {
    c *= scale;
  }
}

void SpectralLayout::inverse(std::span<const Complex> in, std::span<double> out) const
{
  if (in.size() != spectral_size_ || out.size() != grid_size_)
  {
    throw ConfigError("inverse transform: size mismatch");
  }
  thread_local std::vector<Complex> scratch;
  scratch.assign(in.begin(), in.end());
  fft_->inverse(scratch.data(), out.data());
}

}  // namespace bem
