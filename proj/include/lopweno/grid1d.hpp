//! \file grid1d.hpp
//! \brief Uniform 1D finite-volume grid with three ghost cells per side.

#ifndef LOPWENO_GRID1D_HPP_
#define LOPWENO_GRID1D_HPP_

#include <vector>

namespace lopweno {

struct Grid1D {
  static constexpr int ng = 3;

  int n = 0;
  double xl = 0.0;
  double xr = 1.0;
  double h = 0.0;

  Grid1D() = default;
  Grid1D(int n_, double xl_, double xr_)
      : n(n_), xl(xl_), xr(xr_), h((xr_ - xl_) / n_) {}

  int total() const { return n + 2 * ng; }
  double center(int j) const { return xl + (j + 0.5) * h; }  // interior j
  double face(int i) const { return xl + i * h; }            // 0..n
  static int gi(int j) { return j + ng; }                    // interior -> ghosted
};

// Periodic wrap: ghost cells copy the opposite end of the interior.
inline void fill_periodic(const Grid1D& g, std::vector<double>& u) {
  const int n = g.n;
  for (int k = 0; k < Grid1D::ng; ++k) {
    u[k] = u[n + k];                                    // left ghosts <- right interior
    u[Grid1D::ng + n + k] = u[Grid1D::ng + k];          // right ghosts <- left interior
  }
}

// Transmissive wrap: zero-order extrapolation of the edge cells.
inline void fill_transmissive(const Grid1D& g, std::vector<double>& u) {
  const int n = g.n;
  for (int k = 0; k < Grid1D::ng; ++k) {
    u[k] = u[Grid1D::ng];
    u[Grid1D::ng + n + k] = u[Grid1D::ng + n - 1];
  }
}

}  // namespace lopweno

#endif  // LOPWENO_GRID1D_HPP_
