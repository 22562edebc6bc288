//! \file riemann_exact.cpp
//! \brief Classical exact Riemann solution (see Toro, "Riemann Solvers and
//!        Numerical Methods for Fluid Dynamics", ch. 4).

#include "lopweno/riemann_exact.hpp"

#include <algorithm>
#include <cmath>

namespace lopweno {

namespace {

// Pressure function for one side and its derivative w.r.t. p.
void side_function(double p, const RiemannState& s, double gamma, double& f,
                   double& df) {
  const double c = std::sqrt(gamma * s.p / s.rho);
  if (p > s.p) {  // shock branch
    const double a = 2.0 / ((gamma + 1.0) * s.rho);
    const double b = (gamma - 1.0) / (gamma + 1.0) * s.p;
    const double root = std::sqrt(a / (p + b));
    f = (p - s.p) * root;
    df = root * (1.0 - 0.5 * (p - s.p) / (p + b));
  } else {  // rarefaction branch
    const double pr = p / s.p;
    f = 2.0 * c / (gamma - 1.0) * (std::pow(pr, 0.5 * (gamma - 1.0) / gamma) - 1.0);
    df = std::pow(pr, -0.5 * (gamma + 1.0) / gamma) / (s.rho * c);
  }
}

}  // namespace

RiemannStar solve_riemann(const RiemannState& left, const RiemannState& right,
                          double gamma, double tol) {
  const double cl = std::sqrt(gamma * left.p / left.rho);
  const double cr = std::sqrt(gamma * right.p / right.rho);
  const double du = right.u - left.u;
  if (2.0 * (cl + cr) / (gamma - 1.0) <= du)
    throw VacuumFormationError("riemann: pressure positivity violated");

  // Two-rarefaction guess, floored away from zero.
  const double z = 0.5 * (gamma - 1.0) / gamma;
  double p = std::pow((cl + cr - 0.5 * (gamma - 1.0) * du) /
                          (cl / std::pow(left.p, z) + cr / std::pow(right.p, z)),
                      1.0 / z);
  p = std::max(p, tol);

  for (int it = 0; it < 100; ++it) {
    double fl, dfl, fr, dfr;
    side_function(p, left, gamma, fl, dfl);
    side_function(p, right, gamma, fr, dfr);
    const double g = fl + fr + du;
    const double step = g / (dfl + dfr);
    double p_new = p - step;
    if (p_new <= 0.0) p_new = 0.5 * p;
    if (std::fabs(p_new - p) <= tol * 0.5 * (p_new + p)) {
      p = p_new;
      double ul, dul, ur, dur;
      side_function(p, left, gamma, ul, dul);
      side_function(p, right, gamma, ur, dur);
      return {p, 0.5 * (left.u + right.u) + 0.5 * (ur - ul)};
    }
    p = p_new;
  }
  throw NoConvergenceError("riemann: pressure iteration did not converge");
}

RiemannState sample_riemann(const RiemannState& left, const RiemannState& right,
                            const RiemannStar& star, double xi, double gamma) {
  const double g1 = (gamma - 1.0) / (gamma + 1.0);
  const double g2 = 0.5 * (gamma - 1.0) / gamma;

  if (xi <= star.u) {  // left of the contact
    const RiemannState& s = left;
    const double c = std::sqrt(gamma * s.p / s.rho);
    if (star.p > s.p) {  // left shock
      const double sp = s.u - c * std::sqrt((gamma + 1.0) / (2.0 * gamma) * star.p / s.p +
                                            g2);
      if (xi <= sp) return s;
      const double rho = s.rho * (star.p / s.p + g1) / (g1 * star.p / s.p + 1.0);
      return {rho, star.u, star.p};
    }
    // left rarefaction
    const double c_star = c * std::pow(star.p / s.p, g2);
    if (xi <= s.u - c) return s;
    if (xi >= star.u - c_star)
      return {s.rho * std::pow(star.p / s.p, 1.0 / gamma), star.u, star.p};
    const double u = (2.0 / (gamma + 1.0)) * (c + 0.5 * (gamma - 1.0) * s.u + xi);
    const double cf = (2.0 / (gamma + 1.0)) * (c + 0.5 * (gamma - 1.0) * (s.u - xi));
    return {s.rho * std::pow(cf / c, 2.0 / (gamma - 1.0)), u,
            s.p * std::pow(cf / c, 2.0 * gamma / (gamma - 1.0))};
  }

  // right of the contact
  const RiemannState& s = right;
  const double c = std::sqrt(gamma * s.p / s.rho);
  if (star.p > s.p) {  // right shock
    const double sp = s.u + c * std::sqrt((gamma + 1.0) / (2.0 * gamma) * star.p / s.p +
                                          g2);
    if (xi >= sp) return s;
    const double rho = s.rho * (star.p / s.p + g1) / (g1 * star.p / s.p + 1.0);
    return {rho, star.u, star.p};
  }
  // right rarefaction
  const double c_star = c * std::pow(star.p / s.p, g2);
  if (xi >= s.u + c) return s;
  if (xi <= star.u + c_star)
    return {s.rho * std::pow(star.p / s.p, 1.0 / gamma), star.u, star.p};
  const double u = (2.0 / (gamma + 1.0)) * (-c + 0.5 * (gamma - 1.0) * s.u + xi);
  const double cf = (2.0 / (gamma + 1.0)) * (c - 0.5 * (gamma - 1.0) * (s.u - xi));
  return {s.rho * std::pow(cf / c, 2.0 / (gamma - 1.0)), u,
          s.p * std::pow(cf / c, 2.0 * gamma / (gamma - 1.0))};
}

}  // namespace lopweno
