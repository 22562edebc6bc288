//! \file reconstruct.hpp
//! \brief Full interface reconstruction pipeline and weight-state capture.

#ifndef LOPWENO_RECONSTRUCT_HPP_
#define LOPWENO_RECONSTRUCT_HPP_

#include <array>
#include <vector>

#include "lopweno/lop.hpp"
#include "lopweno/stencil.hpp"
#include "lopweno/weights.hpp"

namespace lopweno {

// Everything computed for one interface and one scheme; filled on demand so
// hot loops can skip the bookkeeping.
struct WeightState {
  std::array<double, 3> alpha_js{};
  std::array<double, 3> omega_js{};
  std::array<double, 3> lambda1{};
  std::array<double, 3> lambda2{};
  std::array<double, 3> alpha_x{};
  std::array<double, 3> omega_final{};
  bool fallback = false;
};

// u^L_{j+1/2} from the window (u_{j-2}..u_{j+2}). JS uses its own weights,
// ILW the ideal weights, and the Z-type schemes run the generalized mapping
// with the optional order-preserving filter. fallback_count, when given, is
// incremented every time the filter reverts an interface.
inline double reconstruct_interface(const StencilWindow& w, const SchemeConfig& cfg,
                                    const AuxProvider* aux = nullptr,
                                    WeightState* state = nullptr,
                                    long* fallback_count = nullptr) {
  const std::array<double, 3> u = substencil_reconstruct(w);

  if (cfg.scheme == Scheme::ILW && state == nullptr) {
    return kIdealWeights[0] * u[0] + kIdealWeights[1] * u[1] + kIdealWeights[2] * u[2];
  }

  const std::array<double, 3> is = smoothness_indicators(w);
  std::array<double, 3> alpha_js, omega_js;
  js_weights(is, cfg, alpha_js, omega_js);

  std::array<double, 3> omega = omega_js;
  std::array<double, 3> lambda1{kIdealWeights};
  std::array<double, 3> lambda2{};
  std::array<double, 3> alpha_x = alpha_js;
  bool fallback = false;

  if (cfg.scheme == Scheme::ILW) {
    omega = kIdealWeights;
  } else if (is_z_type(cfg.scheme)) {
    const SmoothnessState s = global_indicators(is, w, cfg, aux);
    mapping_coefficients(cfg, s, alpha_js, lambda1, lambda2);
    alpha_x = generalized_alpha(lambda1, lambda2, omega_js);
    std::array<double, 3> alpha_out = alpha_x;
    if (cfg.lop) {
      const LopResult f = lop_filter(omega_js, alpha_js, alpha_x);
      alpha_out = f.alpha;
      fallback = f.fallback;
      if (fallback && fallback_count != nullptr) ++*fallback_count;
    }
    const double inv = 1.0 / (alpha_out[0] + alpha_out[1] + alpha_out[2]);
    for (int k = 0; k < 3; ++k) omega[k] = alpha_out[k] * inv;
  }

  if (state != nullptr) {
    state->alpha_js = alpha_js;
    state->omega_js = omega_js;
    state->lambda1 = lambda1;
    state->lambda2 = lambda2;
    state->alpha_x = alpha_x;
    state->omega_final = omega;
    state->fallback = fallback;
  }
  return omega[0] * u[0] + omega[1] * u[1] + omega[2] * u[2];
}

// u^R_{j+1/2} is the mirror image: reconstruct the reversed window.
inline double reconstruct_interface_right(const StencilWindow& w, const SchemeConfig& cfg,
                                          const AuxProvider* aux = nullptr,
                                          WeightState* state = nullptr,
                                          long* fallback_count = nullptr) {
  return reconstruct_interface(reversed(w), cfg, aux, state, fallback_count);
}

// One (omega_js, omega_final) pair, tagged with where and when it was taken.
struct IMRSample {
  double time = 0.0;
  long cell_index = 0;
  int k = 0;
  double omega_js = 0.0;
  double omega_x = 0.0;
};

inline std::array<IMRSample, 3> imr_record(const WeightState& state, long cell_index,
                                           double time) {
  std::array<IMRSample, 3> out;
  for (int k = 0; k < 3; ++k)
    out[k] = {time, cell_index, k, state.omega_js[k], state.omega_final[k]};
  return out;
}

// Caller-owned, single-writer collector.
using IMRCollector = std::vector<IMRSample>;

}  // namespace lopweno

#endif  // LOPWENO_RECONSTRUCT_HPP_
