//! \file weights.hpp
//! \brief Nonlinear weights: JS weights, global smoothness indicators and the
//!        generalized mapping form of the Z-type weight families.
//!
//! Every Z-type weight handled here is written as the affine map
//!     alpha_k = lambda1(d_k) + lambda2(d_k) * omega_k^JS,
//! which reproduces WENO-Z (Borges et al., JCP 227 (2008)), the eta/tau81
//! variant and WENO-A once the per-scheme coefficient rows are filled in.

#ifndef LOPWENO_WEIGHTS_HPP_
#define LOPWENO_WEIGHTS_HPP_

#include <algorithm>
#include <array>
#include <cmath>

#include "lopweno/errors.hpp"
#include "lopweno/stencil.hpp"

namespace lopweno {

enum class Scheme { JS, ILW, Z, ZETA81, A };

inline bool is_z_type(Scheme s) {
  return s == Scheme::Z || s == Scheme::ZETA81 || s == Scheme::A;
}

inline const char* scheme_name(Scheme s, bool lop = false) {
  switch (s) {
    case Scheme::JS: return "weno-js";
    case Scheme::ILW: return "weno5-ilw";
    case Scheme::Z: return lop ? "lop-gmweno-z" : "weno-z";
    case Scheme::ZETA81: return lop ? "lop-gmweno-zeta81" : "weno-zeta81";
    case Scheme::A: return lop ? "lop-gmweno-a" : "weno-a";
  }
  return "?";
}

// Fully determines the reconstruction map. The lop flag is meaningful only
// for Z-type schemes and is ignored for JS/ILW.
struct SchemeConfig {
  Scheme scheme = Scheme::Z;
  double epsilon = 1e-40;
  int p = 2;  // power in the Z-type ratio; 1 or 2
  bool lop = false;
};

// x^n for the small positive integer powers used in the weight formulas.
inline double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// Per-substencil eta indicators plus the high-order global indicator tau81
// used by scheme ZETA81. The formulas live behind this interface.
struct AuxIndicators {
  std::array<double, 3> eta;
  double tau;
};

class AuxProvider {
 public:
  virtual ~AuxProvider() = default;
  virtual AuxIndicators indicators(const StencilWindow& w,
                                   const std::array<double, 3>& is) const = 0;
  // True when the indicators transcribe the published eta/tau81 formulas
  // rather than a same-asymptotics reconstruction.
  virtual bool is_reference_exact() const { return false; }
};

// Default provider: eta_k reuses the Jiang-Shu indicator structure and tau81
// is the squared fourth undivided difference, an O(h^8) global measure on
// smooth data that stays O(1) across a jump.
class FourthDifferenceAux final : public AuxProvider {
 public:
  AuxIndicators indicators(const StencilWindow& w,
                           const std::array<double, 3>& is) const override {
    const double d4 = w[0] - 4.0 * w[1] + 6.0 * w[2] - 4.0 * w[3] + w[4];
    return {is, sq(d4)};
  }
};

// Smoothness bundle for one interface: local IS_k, the Z global indicator
// tau5 = |IS0 - IS2|, the clamped curvature measure Phi, and (for ZETA81)
// the provider-supplied eta/tau81 values.
struct SmoothnessState {
  std::array<double, 3> is{};
  double tau5 = 0.0;
  double phi = 0.0;
  std::array<double, 3> aux{};
  double tau_aux = 0.0;
  bool has_aux = false;
};

// d_k / (epsilon + IS_k)^2 and its normalization.
inline void js_weights(const std::array<double, 3>& is, const SchemeConfig& cfg,
                       std::array<double, 3>& alpha_js,
                       std::array<double, 3>& omega_js) {
  for (int k = 0; k < 3; ++k)
    alpha_js[k] = kIdealWeights[k] / sq(cfg.epsilon + is[k]);
  const double inv = 1.0 / (alpha_js[0] + alpha_js[1] + alpha_js[2]);
  for (int k = 0; k < 3; ++k) omega_js[k] = alpha_js[k] * inv;
}

inline SmoothnessState global_indicators(const std::array<double, 3>& is,
                                         const StencilWindow& w,
                                         const SchemeConfig& cfg,
                                         const AuxProvider* provider) {
  SmoothnessState s;
  s.is = is;
  s.tau5 = std::fabs(is[0] - is[2]);
  s.phi = std::min(1.0, std::sqrt(std::fabs(is[0] - 2.0 * is[1] + is[2])));
  if (cfg.scheme == Scheme::ZETA81) {
    if (provider == nullptr)
      throw MissingProviderError("scheme zeta81 requires an eta/tau81 provider");
    const AuxIndicators a = provider->indicators(w, is);
    s.aux = a.eta;
    s.tau_aux = a.tau;
    s.has_aux = true;
  }
  return s;
}

// Coefficient rows of the generalized mapping, one row per Z-type scheme.
inline void mapping_coefficients(const SchemeConfig& cfg, const SmoothnessState& s,
                                 const std::array<double, 3>& alpha_js,
                                 std::array<double, 3>& lambda1,
                                 std::array<double, 3>& lambda2) {
  const double alpha_sum = alpha_js[0] + alpha_js[1] + alpha_js[2];
  switch (cfg.scheme) {
    case Scheme::Z: {
      const double t = alpha_sum * ipow(s.tau5, cfg.p);
      for (int k = 0; k < 3; ++k) {
        lambda1[k] = kIdealWeights[k];
        lambda2[k] = t;
      }
      break;
    }
    case Scheme::ZETA81: {
      if (!s.has_aux)
        throw MissingProviderError("scheme zeta81 requires eta/tau81 indicators");
      const double t = alpha_sum * sq(s.tau_aux);
      for (int k = 0; k < 3; ++k) {
        lambda1[k] = kIdealWeights[k];
        lambda2[k] = t * sq(s.is[k] + cfg.epsilon) / sq(s.aux[k] + cfg.epsilon);
      }
      break;
    }
    case Scheme::A: {
      for (int k = 0; k < 3; ++k) {
        const double ratio = ipow(s.tau5 / (s.is[k] + cfg.epsilon), cfg.p);
        const bool b = s.phi * ratio <= 1.0;
        lambda1[k] = b ? kIdealWeights[k] : 0.0;
        lambda2[k] = b ? 0.0
                       : alpha_sum * s.phi * ipow(s.tau5, cfg.p) *
                             ipow(s.is[k] + cfg.epsilon, 2 - cfg.p);
      }
      break;
    }
    default:
      for (int k = 0; k < 3; ++k) {
        lambda1[k] = kIdealWeights[k];
        lambda2[k] = 0.0;
      }
      break;
  }
}

// alpha_k = lambda1_k + lambda2_k * omega_k^JS.
inline std::array<double, 3> generalized_alpha(const std::array<double, 3>& lambda1,
                                               const std::array<double, 3>& lambda2,
                                               const std::array<double, 3>& omega_js) {
  return {lambda1[0] + lambda2[0] * omega_js[0],
          lambda1[1] + lambda2[1] * omega_js[1],
          lambda1[2] + lambda2[2] * omega_js[2]};
}

// Direct WENO-Z weights alpha_k = d_k (1 + (tau5/(IS_k+eps))^p); the oracle
// route for the generalized-form equivalence.
inline std::array<double, 3> direct_z_alpha(const std::array<double, 3>& is,
                                            const SchemeConfig& cfg) {
  const double tau5 = std::fabs(is[0] - is[2]);
  std::array<double, 3> alpha;
  for (int k = 0; k < 3; ++k)
    alpha[k] = kIdealWeights[k] * (1.0 + ipow(tau5 / (is[k] + cfg.epsilon), cfg.p));
  return alpha;
}

}  // namespace lopweno

#endif  // LOPWENO_WEIGHTS_HPP_
