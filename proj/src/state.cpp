// SPDX-License-Identifier: Apache-2.0

#include "bem/model/state.hpp"

#include <algorithm>

namespace bem
{

State &State::axpy(double a, const State &x)
{
  n1.axpy(a, x.n1);
  n2.axpy(a, x.n2);
  u1.axpy(a, x.u1);
  u2.axpy(a, x.u2);
  E.axpy(a, x.E);
  B.axpy(a, x.B);
  return *this;
}

State &State::operator*=(double a)
{
  for_each_component([a](ScalarField &f) { f *= a; });
  return *this;
}

bool State::all_finite() const
{
  bool ok = true;
  for_each_component([&ok](const ScalarField &f) { ok = ok && f.all_finite(); });
  return ok;
}

double State::max_abs() const
{
  double m = 0.0;
  for_each_component([&m](const ScalarField &f) { m = std::max(m, f.max_abs()); });
  return m;
}

}  // namespace bem
