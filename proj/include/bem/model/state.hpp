// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "bem/field/field.hpp"

namespace bem
{

// The six reformulated unknowns: sum and difference of the species densities and
// velocities, the electric field, and the magnetic perturbation about B_infinity.
struct State
{
  explicit State(const LayoutPtr &layout)
    : n1(layout), n2(layout), u1(layout), u2(layout), E(layout), B(layout)
  {
  }

  ScalarField n1;
  ScalarField n2;
  VectorField u1;
  VectorField u2;
  VectorField E;
  VectorField B;

  const SpectralLayout &layout() const { return n1.layout(); }
  const LayoutPtr &layout_ptr() const { return n1.layout_ptr(); }

  // this += a * x, component by component.
  State &axpy(double a, const State &x);
  State &operator*=(double a);

  // Every sample finite.
  bool all_finite() const;
  // Largest absolute sample over all fourteen components.
  double max_abs() const;

  template <class Fn>
  void for_each_component(Fn &&fn)
  {
    fn(n1);
    for (int a = 0; a < 3; ++a) fn(u1[a]);
    fn(n2);
    for (int a = 0; a < 3; ++a) fn(u2[a]);
    for (int a = 0; a < 3; ++a) fn(E[a]);
    for (int a = 0; a < 3; ++a) fn(B[a]);
  }

  template <class Fn>
  void for_each_component(Fn &&fn) const
  {
    fn(n1);
    for (int a = 0; a < 3; ++a) fn(u1[a]);
    fn(n2);
    for (int a = 0; a < 3; ++a) fn(u2[a]);
    for (int a = 0; a < 3; ++a) fn(E[a]);
    for (int a = 0; a < 3; ++a) fn(B[a]);
  }
};

// Component order used by for_each_component and by the Fourier symbol:
// n1, u1(3), n2, u2(3), E(3), B(3).
inline constexpr int kStateComponents = 14;

}  // namespace bem
