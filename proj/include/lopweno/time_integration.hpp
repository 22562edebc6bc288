//! \file time_integration.hpp
//! \brief SSP-RK3 stepping and CFL step-size control.

#ifndef LOPWENO_TIME_INTEGRATION_HPP_
#define LOPWENO_TIME_INTEGRATION_HPP_

#include <cmath>
#include <cstddef>
#include <vector>

#include "lopweno/errors.hpp"

namespace lopweno {

// Either a fixed CFL number or CFL = h^exponent.
struct CflPolicy {
  enum class Mode { Fixed, MeshPowered };
  Mode mode = Mode::Fixed;
  double value = 0.5;  // CFL number, or the mesh-power exponent

  static CflPolicy fixed(double c) { return {Mode::Fixed, c}; }
  static CflPolicy mesh_powered(double e) { return {Mode::MeshPowered, e}; }

  double number(double h) const {
    return mode == Mode::Fixed ? value : std::pow(h, value);
  }
};

// dt = CFL * h / max_wave_speed, truncated so t + dt lands on t_final.
inline double compute_dt(const CflPolicy& policy, double h, double max_wave_speed,
                         double t, double t_final) {
  if (!(max_wave_speed > 0.0))
    throw ZeroWaveSpeedError("compute_dt: nonpositive wave speed");
  double dt = policy.number(h) * h / max_wave_speed;
  if (t + dt > t_final) dt = t_final - t;
  return dt;
}

// 2D variant with the per-direction maxima summed.
inline double compute_dt2(const CflPolicy& policy, double hx, double hy,
                          double max_speed_x, double max_speed_y, double t,
                          double t_final) {
  const double denom = max_speed_x / hx + max_speed_y / hy;
  if (!(denom > 0.0)) throw ZeroWaveSpeedError("compute_dt2: nonpositive wave speed");
  double dt = policy.number(hx) / denom;
  if (t + dt > t_final) dt = t_final - t;
  return dt;
}

inline void check_finite(const std::vector<double>& u, double t, const char* stage) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!std::isfinite(u[i]))
      throw NonFiniteStateError(std::string("non-finite value in ") + stage,
                                static_cast<long>(i), t);
  }
}

// Shu-Osher three-stage SSP-RK3:
//   u1 = u + dt L(u)
//   u2 = 3/4 u + 1/4 (u1 + dt L(u1))
//   u' = 1/3 u + 2/3 (u2 + dt L(u2))
// rhs(u, t, dudt) must be a pure function of its arguments. The caller
// provides the two scratch fields to keep repeated steps allocation-free.
template <typename RhsOp>
void ssp_rk3_step(std::vector<double>& u, RhsOp&& rhs, double t, double dt,
                  std::vector<double>& stage, std::vector<double>& dudt) {
  const std::size_t n = u.size();
  stage.resize(n);
  dudt.resize(n);

  rhs(u, t, dudt);
  for (std::size_t i = 0; i < n; ++i) stage[i] = u[i] + dt * dudt[i];
  check_finite(stage, t, "rk3 stage 1");

  rhs(stage, t + dt, dudt);
  for (std::size_t i = 0; i < n; ++i)
    stage[i] = 0.75 * u[i] + 0.25 * (stage[i] + dt * dudt[i]);
  check_finite(stage, t, "rk3 stage 2");

  rhs(stage, t + 0.5 * dt, dudt);
  for (std::size_t i = 0; i < n; ++i)
    u[i] = (1.0 / 3.0) * u[i] + (2.0 / 3.0) * (stage[i] + dt * dudt[i]);
  check_finite(u, t, "rk3 stage 3");
}

}  // namespace lopweno

#endif  // LOPWENO_TIME_INTEGRATION_HPP_
