//! \file lop.hpp
//! \brief Locally order-preserving weight filter.
//!
//! A mapped weight set is kept only if it preserves the ordering of the JS
//! weights across every substencil pair; on the first violating pair the
//! whole interface reverts to the unnormalized JS weights.

#ifndef LOPWENO_LOP_HPP_
#define LOPWENO_LOP_HPP_

#include <array>
#include <utility>

namespace lopweno {

// (omega_a - omega_b) * (g_a - g_b) with g taken from the mapped alphas.
inline double lop_idx(int a, int b, const std::array<double, 3>& omega_js,
                      const std::array<double, 3>& alpha_x) {
  return (omega_js[a] - omega_js[b]) * (alpha_x[a] - alpha_x[b]);
}

// Membership in the order-preserving set: strictly positive index, or joint
// equality of both differences. The equalities are exact floating-point
// comparisons; the branch exists for analytically identical values.
inline bool in_S(int a, int b, const std::array<double, 3>& omega_js,
                 const std::array<double, 3>& alpha_x) {
  const double dw = omega_js[a] - omega_js[b];
  const double dg = alpha_x[a] - alpha_x[b];
  return dw * dg > 0.0 || (dw == 0.0 && dg == 0.0);
}

struct LopResult {
  std::array<double, 3> alpha;
  bool fallback;  // true when the filter reverted to the JS weights
};

// Pairs are scanned as (s1, s2), s1 < s2, in increasing order; the first
// violation aborts the remaining checks and forces the global fallback.
// The loop bound is kept generic in the substencil count r.
inline LopResult lop_filter(const std::array<double, 3>& omega_js,
                            const std::array<double, 3>& alpha_js,
                            const std::array<double, 3>& alpha_x) {
  constexpr int r = 3;
  bool order_preserving = true;
  for (int s1 = 0; s1 <= r - 2 && order_preserving; ++s1) {
    for (int s2 = s1 + 1; s2 <= r - 1; ++s2) {
      if (!in_S(s1, s2, omega_js, alpha_x)) {
        order_preserving = false;
        break;
      }
    }
  }
  if (order_preserving) return {alpha_x, false};
  return {alpha_js, true};
}

}  // namespace lopweno

#endif  // LOPWENO_LOP_HPP_
