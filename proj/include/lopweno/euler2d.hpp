//! \file euler2d.hpp
//! \brief Dimension-by-dimension 2D Euler solver with the benchmark problem
//!        catalog: geometry masking, time-dependent boundary data and the
//!        gravity source of the instability problem.

#ifndef LOPWENO_EULER2D_HPP_
#define LOPWENO_EULER2D_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lopweno/euler_gas.hpp"
#include "lopweno/reconstruct.hpp"
#include "lopweno/time_integration.hpp"

namespace lopweno {

struct Grid2D {
  static constexpr int ng = 3;

  int nx = 0, ny = 0;
  double xl = 0.0, xr = 1.0, yl = 0.0, yr = 1.0;
  double h = 0.0;  // uniform and equal in both directions

  Grid2D() = default;
  Grid2D(int nx_, int ny_, double xl_, double xr_, double yl_, double yr_)
      : nx(nx_), ny(ny_), xl(xl_), xr(xr_), yl(yl_), yr(yr_),
        h((xr_ - xl_) / nx_) {}

  int tx() const { return nx + 2 * ng; }
  int ty() const { return ny + 2 * ng; }
  double xc(int i) const { return xl + (i + 0.5) * h; }  // interior i
  double yc(int j) const { return yl + (j + 0.5) * h; }  // interior j
};

struct BoundarySpec {
  enum class Kind {
    Periodic,
    Reflective,
    Transmissive,
    Dirichlet,
    DmrTop,     // oblique-shock switch along the top edge
    DmrBottom,  // post-shock data left of x0, reflective wall beyond
    Inflow,     // fixed state, alias of Dirichlet
    Outflow,    // zero-order extrapolation, alias of Transmissive
  };
  Kind kind = Kind::Transmissive;
  std::array<double, 4> prim{};  // (rho, u, v, p) for Dirichlet/Inflow

  static BoundarySpec periodic() { return {Kind::Periodic, {}}; }
  static BoundarySpec reflective() { return {Kind::Reflective, {}}; }
  static BoundarySpec transmissive() { return {Kind::Transmissive, {}}; }
  static BoundarySpec dirichlet(std::array<double, 4> prim) {
    return {Kind::Dirichlet, prim};
  }
  static BoundarySpec inflow(std::array<double, 4> prim) {
    return {Kind::Inflow, prim};
  }
  static BoundarySpec outflow() { return {Kind::Outflow, {}}; }
};

enum class Problem2DId {
  ACC1, ACC2, BLAST2D, IMPLOSION, EXPLOSION, SVI, RSR, DMR, FFS, RTI
};

struct Problem2D {
  Problem2DId id = Problem2DId::ACC1;
  double xl = -1.0, xr = 1.0, yl = -1.0, yr = 1.0;
  int nx_default = 80, ny_default = 80;
  double t_final = 2.0;
  CflPolicy cfl = CflPolicy::fixed(0.5);
  double gamma = kGamma;
  bool gravity = false;   // +rho in the y-momentum, +rho v in the energy
  bool has_mask = false;  // solid step region
  BoundarySpec bc_left, bc_right, bc_bottom, bc_top;

  static Problem2D make(Problem2DId id);

  std::array<double, 4> prim_at(double x, double y) const;  // (rho, u, v, p)
  bool masked(double x, double y) const;
  // Exact density for the smooth transport cases (ACC1/ACC2).
  double exact_density(double x, double y, double t) const;
};

class EulerSolver2D {
 public:
  EulerSolver2D(const Problem2D& problem, int nx, int ny, const SchemeConfig& cfg,
                const AuxProvider* aux = nullptr);

  const Grid2D& grid() const { return grid_; }
  const Problem2D& problem() const { return problem_; }
  double time() const { return t_; }
  long steps() const { return steps_; }
  long fallback_count() const { return fallbacks_; }

  std::vector<double>& state() { return state_; }
  const std::vector<double>& state() const { return state_; }

  std::size_t idx(int comp, int gi, int gj) const {
    return (static_cast<std::size_t>(comp) * grid_.ty() + gj) * grid_.tx() + gi;
  }
  double cell(int comp, int i, int j) const {  // interior coordinates
    return state_[idx(comp, i + Grid2D::ng, j + Grid2D::ng)];
  }
  bool cell_masked(int i, int j) const {
    return !mask_.empty() && mask_[(j + Grid2D::ng) * grid_.tx() + i + Grid2D::ng] != 0;
  }

  void apply_boundaries(std::vector<double>& s, double t) const;
  void rhs(const std::vector<double>& s, double t, std::vector<double>& dsdt);
  void step(double dt);
  void advance_to(double t_final);
  std::pair<double, double> max_wave_speeds(const std::vector<double>& s) const;

  Primitive2D cell_primitive(int i, int j) const {
    return primitives2d(cell(0, i, j), cell(1, i, j), cell(2, i, j), cell(3, i, j),
                        problem_.gamma);
  }

 private:
  void fill_mask_x(std::vector<double>& s) const;
  void fill_mask_y(std::vector<double>& s) const;
  void sweep_x(const std::vector<double>& s, double alpha, std::vector<double>& dsdt);
  void sweep_y(const std::vector<double>& s, double alpha, std::vector<double>& dsdt);

  Problem2D problem_;
  Grid2D grid_;
  SchemeConfig cfg_;
  const AuxProvider* aux_;
  std::vector<double> state_;
  std::vector<std::uint8_t> mask_;
  std::vector<double> ghosted_, scratch_a_, scratch_b_, row_flux_;
  std::vector<Primitive2D> prow_;
  int mask_if0_ = 0, mask_jf0_ = 0;  // first masked column / first fluid row
  double t_ = 0.0;
  long steps_ = 0;
  long fallbacks_ = 0;
};

// Profile of (position, density) along the row/column whose center is
// nearest to `coordinate` on the given axis (0 = fix x, 1 = fix y).
std::vector<std::pair<double, double>> slice(const EulerSolver2D& solver, int axis,
                                             double coordinate);

// Excess total variation of the values over a monotone transit.
double excess_total_variation(const std::vector<std::pair<double, double>>& profile,
                              double x_min, double x_max);

double linf_density_error(const EulerSolver2D& solver, double t);

struct EulerRun2DDiagnostics {
  long steps = 0;
  double t = 0.0;
  double min_density = 0.0;
  double min_pressure = 0.0;
  long fallbacks = 0;
};

EulerRun2DDiagnostics run2d(EulerSolver2D& solver, double t_final);

}  // namespace lopweno

#endif  // LOPWENO_EULER2D_HPP_
