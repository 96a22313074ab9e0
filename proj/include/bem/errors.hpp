// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace bem
{

// Root of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// A negative-order multiplier or a torus Poisson solve met a field whose mean is not
// negligible relative to its L2 norm.
class NonZeroMean : public Error
{
public:
  using Error::Error;
};

// 1 + mu * n dropped below the positivity floor somewhere on the grid.
class DensityUnderflow : public Error
{
public:
  using Error::Error;
};

class BlowUpDetected : public Error
{
public:
  BlowUpDetected(double time, const std::string &what)
    : Error("blow-up detected at t = " + std::to_string(time) + ": " + what), time_(time)
  {
  }
  double time() const { return time_; }

private:
  double time_;
};

class StepLimitExceeded : public Error
{
public:
  StepLimitExceeded(double time, long steps)
    : Error("step limit " + std::to_string(steps) + " reached at t = " + std::to_string(time)),
      time_(time)
  {
  }
  double time() const { return time_; }

private:
  double time_;
};

class QuadratureNotConverged : public Error
{
public:
  using Error::Error;
};

class InsufficientSamples : public Error
{
public:
  using Error::Error;
};

class NonPositiveValues : public Error
{
public:
  using Error::Error;
};

class IncompatibleExponents : public Error
{
public:
  using Error::Error;
};

class AmplitudeTooLarge : public Error
{
public:
  using Error::Error;
};

class ExponentOutOfRange : public Error
{
public:
  using Error::Error;
};

class NonZeroMeanSource : public Error
{
public:
  using Error::Error;
};

// Invalid configuration or precondition violation at an API boundary.
class ConfigError : public Error
{
public:
  using Error::Error;
};

}  // namespace bem
