//! \file euler_gas.hpp
//! \brief Ideal-gas relations, Roe averages and the characteristic
//!        decompositions of the 1D/2D Euler flux Jacobians.

#ifndef LOPWENO_EULER_GAS_HPP_
#define LOPWENO_EULER_GAS_HPP_

#include <array>
#include <cmath>

#include "lopweno/errors.hpp"

namespace lopweno {

inline constexpr double kGamma = 1.4;

struct Primitive {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
  double c = 0.0;
};

// p = (gamma-1)(E - rho u^2 / 2), c = sqrt(gamma p / rho).
inline Primitive primitives(double rho, double mom, double ener,
                            double gamma = kGamma, long cell = -1) {
  if (!(rho > 0.0)) throw NegativeDensityError("nonpositive density", cell);
  const double u = mom / rho;
  const double p = (gamma - 1.0) * (ener - 0.5 * rho * u * u);
  if (!(p > 0.0)) throw NegativePressureError("nonpositive pressure", cell);
  return {rho, u, p, std::sqrt(gamma * p / rho)};
}

inline double total_energy(double rho, double u, double p, double gamma = kGamma) {
  return p / (gamma - 1.0) + 0.5 * rho * u * u;
}

// Roe-averaged state and the left/right eigenvector matrices of the 1D Euler
// flux Jacobian; eigenvalues are (u-c, u, u+c).
struct Eigen1D {
  double u = 0.0, h = 0.0, c = 0.0;
  std::array<std::array<double, 3>, 3> left{};
  std::array<std::array<double, 3>, 3> right{};
};

inline Eigen1D roe_average(const Primitive& l, const Primitive& r,
                           double gamma = kGamma) {
  const double sl = std::sqrt(l.rho);
  const double sr = std::sqrt(r.rho);
  const double inv = 1.0 / (sl + sr);
  const double u = (sl * l.u + sr * r.u) * inv;
  const double hl = l.c * l.c / (gamma - 1.0) + 0.5 * l.u * l.u;
  const double hr = r.c * r.c / (gamma - 1.0) + 0.5 * r.u * r.u;
  const double h = (sl * hl + sr * hr) * inv;
  const double c2 = (gamma - 1.0) * (h - 0.5 * u * u);
  if (!(c2 > 0.0)) throw NegativeSoundSpeedError("roe_average: c^2 <= 0");
  const double c = std::sqrt(c2);

  Eigen1D e;
  e.u = u;
  e.h = h;
  e.c = c;
  e.right = {{{1.0, 1.0, 1.0},
              {u - c, u, u + c},
              {h - u * c, 0.5 * u * u, h + u * c}}};
  const double b2 = (gamma - 1.0) / c2;
  const double b1 = 0.5 * b2 * u * u;
  e.left = {{{0.5 * (b1 + u / c), 0.5 * (-b2 * u - 1.0 / c), 0.5 * b2},
             {1.0 - b1, b2 * u, -b2},
             {0.5 * (b1 - u / c), 0.5 * (-b2 * u + 1.0 / c), 0.5 * b2}}};
  return e;
}

inline std::array<double, 3> apply3(const std::array<std::array<double, 3>, 3>& m,
                                    const std::array<double, 3>& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
          m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
          m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

inline std::array<double, 3> euler_flux1d(const std::array<double, 3>& q,
                                          double gamma = kGamma) {
  const double u = q[1] / q[0];
  const double p = (gamma - 1.0) * (q[2] - 0.5 * q[1] * u);
  return {q[1], q[1] * u + p, u * (q[2] + p)};
}

// 2D primitives for the four-component system (rho, rho u, rho v, E).
struct Primitive2D {
  double rho = 0.0, u = 0.0, v = 0.0, p = 0.0, c = 0.0;
};

inline Primitive2D primitives2d(double rho, double mx, double my, double ener,
                                double gamma = kGamma, long cell = -1) {
  if (!(rho > 0.0)) throw NegativeDensityError("nonpositive density", cell);
  const double u = mx / rho;
  const double v = my / rho;
  const double p = (gamma - 1.0) * (ener - 0.5 * rho * (u * u + v * v));
  if (!(p > 0.0)) throw NegativePressureError("nonpositive pressure", cell);
  return {rho, u, v, p, std::sqrt(gamma * p / rho)};
}

inline double total_energy2d(double rho, double u, double v, double p,
                             double gamma = kGamma) {
  return p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v);
}

// Characteristic decomposition for one sweep direction of the 2D system.
// "un" is the sweep-normal velocity, "ut" the transverse one; conserved
// components are ordered (rho, rho un, rho ut, E), i.e. the caller swaps the
// momentum slots for y-sweeps.
struct Eigen2D {
  double un = 0.0, ut = 0.0, h = 0.0, c = 0.0;
  std::array<std::array<double, 4>, 4> left{};
  std::array<std::array<double, 4>, 4> right{};
};

inline Eigen2D roe_average2d(const Primitive2D& l, const Primitive2D& r, bool x_sweep,
                             double gamma = kGamma) {
  const double sl = std::sqrt(l.rho);
  const double sr = std::sqrt(r.rho);
  const double inv = 1.0 / (sl + sr);
  const double ul = x_sweep ? l.u : l.v;
  const double ur = x_sweep ? r.u : r.v;
  const double tl = x_sweep ? l.v : l.u;
  const double tr = x_sweep ? r.v : r.u;
  const double un = (sl * ul + sr * ur) * inv;
  const double ut = (sl * tl + sr * tr) * inv;
  const double hl = l.c * l.c / (gamma - 1.0) + 0.5 * (l.u * l.u + l.v * l.v);
  const double hr = r.c * r.c / (gamma - 1.0) + 0.5 * (r.u * r.u + r.v * r.v);
  const double h = (sl * hl + sr * hr) * inv;
  const double q2 = 0.5 * (un * un + ut * ut);
  const double c2 = (gamma - 1.0) * (h - q2);
  if (!(c2 > 0.0)) throw NegativeSoundSpeedError("roe_average2d: c^2 <= 0");
  const double c = std::sqrt(c2);

  Eigen2D e;
  e.un = un;
  e.ut = ut;
  e.h = h;
  e.c = c;
  e.right = {{{1.0, 1.0, 0.0, 1.0},
              {un - c, un, 0.0, un + c},
              {ut, ut, 1.0, ut},
              {h - un * c, q2, ut, h + un * c}}};
  const double b2 = (gamma - 1.0) / c2;
  const double b1 = b2 * q2;
  e.left = {{{0.5 * (b1 + un / c), 0.5 * (-b2 * un - 1.0 / c), -0.5 * b2 * ut, 0.5 * b2},
             {1.0 - b1, b2 * un, b2 * ut, -b2},
             {-ut, 0.0, 1.0, 0.0},
             {0.5 * (b1 - un / c), 0.5 * (-b2 * un + 1.0 / c), -0.5 * b2 * ut, 0.5 * b2}}};
  return e;
}

inline std::array<double, 4> apply4(const std::array<std::array<double, 4>, 4>& m,
                                    const std::array<double, 4>& v) {
  std::array<double, 4> out;
  for (int i = 0; i < 4; ++i)
    out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] + m[i][3] * v[3];
  return out;
}

// Sweep-normal flux of the (rho, rho un, rho ut, E) ordering.
inline std::array<double, 4> euler_flux2d(const std::array<double, 4>& q,
                                          double gamma = kGamma) {
  const double un = q[1] / q[0];
  const double ut = q[2] / q[0];
  const double p = (gamma - 1.0) * (q[3] - 0.5 * q[0] * (un * un + ut * ut));
  return {q[1], q[1] * un + p, q[1] * ut, un * (q[3] + p)};
}

}  // namespace lopweno

#endif  // LOPWENO_EULER_GAS_HPP_
