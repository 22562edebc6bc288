//! \file stencil.hpp
//! \brief Five-cell stencil window, substencil polynomials and smoothness
//!        indicators of the fifth-order WENO reconstruction.
//!
//! Substencil values follow Jiang & Shu, JCP 126 (1996); the window holds the
//! cell averages u[j-2..j+2] feeding the interface value at x_{j+1/2}.

#ifndef LOPWENO_STENCIL_HPP_
#define LOPWENO_STENCIL_HPP_

#include <array>
#include <cmath>

namespace lopweno {

// Five consecutive cell averages, v[0] = u_{j-2} .. v[4] = u_{j+2}.
using StencilWindow = std::array<double, 5>;

// Ideal weights d_k of the central upstream fifth-order combination.
inline constexpr std::array<double, 3> kIdealWeights{0.1, 0.6, 0.3};

inline StencilWindow reversed(const StencilWindow& w) {
  return {w[4], w[3], w[2], w[1], w[0]};
}

// Third-order interface values u^k_{j+1/2} of the three substencils.
inline std::array<double, 3> substencil_reconstruct(const StencilWindow& w) {
  return {
      (2.0 * w[0] - 7.0 * w[1] + 11.0 * w[2]) / 6.0,
      (-w[1] + 5.0 * w[2] + 2.0 * w[3]) / 6.0,
      (2.0 * w[2] + 5.0 * w[3] - w[4]) / 6.0,
  };
}

inline double sq(double x) { return x * x; }

// Jiang-Shu smoothness indicators IS_k; zero exactly on locally linear data.
inline std::array<double, 3> smoothness_indicators(const StencilWindow& w) {
  constexpr double c0 = 13.0 / 12.0;
  constexpr double c1 = 0.25;
  return {
      c0 * sq(w[0] - 2.0 * w[1] + w[2]) + c1 * sq(w[0] - 4.0 * w[1] + 3.0 * w[2]),
      c0 * sq(w[1] - 2.0 * w[2] + w[3]) + c1 * sq(w[1] - w[3]),
      c0 * sq(w[2] - 2.0 * w[3] + w[4]) + c1 * sq(3.0 * w[2] - 4.0 * w[3] + w[4]),
  };
}

}  // namespace lopweno

#endif  // LOPWENO_STENCIL_HPP_
