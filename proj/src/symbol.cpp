// SPDX-License-Identifier: Apache-2.0

#include "bem/linear/symbol.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "bem/errors.hpp"

namespace bem
{

Symbol symbol_matrix(const Vec3 &xi, const ModelParams &params)
{
  using C = std::complex<double>;
  const C I{0.0, 1.0};
  const double nu = params.nu();
  const auto &b = params.b_infinity();
  Matrix14 A = Matrix14::Zero();
  constexpr int n1 = 0, u1 = 1, n2 = 4, u2 = 5, E = 8, B = 11;

  // v x b as a matrix acting on v: (v x b)_a = eps_{abc} v_b b_c.
  const double cross_b[3][3] = {{0.0, b[2], -b[1]}, {-b[2], 0.0, b[0]}, {b[1], -b[0], 0.0}};
  // (xi x w)_a as a matrix acting on w.
  const double cross_xi[3][3] = {
    {0.0, -xi[2], xi[1]}, {xi[2], 0.0, -xi[0]}, {-xi[1], xi[0], 0.0}};

  for (int a = 0; a < 3; ++a)
  {
    A(n1, u1 + a) = -I * xi[a];
    A(n2, u2 + a) = -I * xi[a];
    A(u1 + a, n1) = -I * xi[a];
    A(u2 + a, n2) = -I * xi[a];
    A(u1 + a, u1 + a) = -nu;
    A(u2 + a, u2 + a) = -nu;
    A(u2 + a, E + a) = 2.0 * nu;
    A(E + a, u2 + a) = -nu;
    for (int c = 0; c < 3; ++c)
    {
      A(u1 + a, u2 + c) += cross_b[a][c];
      A(u2 + a, u1 + c) += cross_b[a][c];
      A(E + a, B + c) = I * nu * cross_xi[a][c];
      A(B + a, E + c) = -I * nu * cross_xi[a][c];
    }
  }
  return {xi, A, params};
}

Eigen::Matrix<double, 14, 1> energy_weight()
{
  Eigen::Matrix<double, 14, 1> w;
  w << 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2;
  return w;
}

Eigen::Matrix<double, 14, 1> relaxation_pattern()
{
  Eigen::Matrix<double, 14, 1> r;
  r << 0, 1, 1, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0;
  return r;
}

Matrix14 propagator(const Symbol &symbol, double t)
{
  if (!(t >= 0.0))
  {
    throw ConfigError("evolution time must be non-negative");
  }
  if (t == 0.0)
  {
    return Matrix14::Identity();
  }
  const Matrix14 tA = t * symbol.A;
  return tA.exp();
}

Vector14 evolve_mode(const Symbol &symbol, double t, const Vector14 &u0)
{
  return propagator(symbol, t) * u0;
}

}  // namespace bem
