//! \file riemann_exact.hpp
//! \brief Exact Riemann solver for the 1D ideal-gas Euler equations.

#ifndef LOPWENO_RIEMANN_EXACT_HPP_
#define LOPWENO_RIEMANN_EXACT_HPP_

#include "lopweno/euler_gas.hpp"

namespace lopweno {

struct RiemannState {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
};

struct RiemannStar {
  double p = 0.0;  // star-region pressure
  double u = 0.0;  // star-region velocity
};

// Newton iteration on the pressure function; throws VacuumFormationError when
// the states generate vacuum and NoConvergenceError past the iteration cap.
RiemannStar solve_riemann(const RiemannState& left, const RiemannState& right,
                          double gamma = kGamma, double tol = 1e-12);

// Self-similar solution sampled at xi = x/t.
RiemannState sample_riemann(const RiemannState& left, const RiemannState& right,
                            const RiemannStar& star, double xi, double gamma = kGamma);

}  // namespace lopweno

#endif  // LOPWENO_RIEMANN_EXACT_HPP_
