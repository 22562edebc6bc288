//! \file quadrature.hpp
//! \brief Cell averaging by 5-point Gauss-Legendre quadrature, with interval
//!        splitting at known discontinuity positions.

#ifndef LOPWENO_QUADRATURE_HPP_
#define LOPWENO_QUADRATURE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace lopweno {

// Nodes/weights on [-1, 1].
inline constexpr std::array<double, 5> kGauss5Nodes{
    -0.9061798459386639928, -0.5384693101056830910, 0.0,
    0.5384693101056830910, 0.9061798459386639928};
inline constexpr std::array<double, 5> kGauss5Weights{
    0.2369268850561890875, 0.4786286704993664680, 0.5688888888888888889,
    0.4786286704993664680, 0.2369268850561890875};

template <typename F>
double gauss5(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 5; ++i) s += kGauss5Weights[i] * f(mid + half * kGauss5Nodes[i]);
  return s * half;
}

// Average of f over [a, b], splitting the interval at every breakpoint that
// falls strictly inside so each smooth piece is integrated on its own.
template <typename F>
double cell_average(F&& f, double a, double b, const std::vector<double>& breakpoints) {
  std::vector<double> cuts;
  for (double p : breakpoints)
    if (p > a && p < b) cuts.push_back(p);
  std::sort(cuts.begin(), cuts.end());
  double integral = 0.0;
  double lo = a;
  for (double p : cuts) {
    integral += gauss5(f, lo, p);
    lo = p;
  }
  integral += gauss5(f, lo, b);
  return integral / (b - a);
}

template <typename F>
double cell_average(F&& f, double a, double b) {
  return gauss5(f, a, b) / (b - a);
}

// Maps x into [lo, lo + period).
inline double wrap_periodic(double x, double lo, double period) {
  double r = std::fmod(x - lo, period);
  if (r < 0.0) r += period;
  return lo + r;
}

}  // namespace lopweno

#endif  // LOPWENO_QUADRATURE_HPP_
