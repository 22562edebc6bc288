//! \file euler1d.hpp
//! \brief 1D Euler solver: characteristic-wise WENO reconstruction, global
//!        Lax-Friedrichs flux, shock-tube and shock-density benchmarks.

#ifndef LOPWENO_EULER1D_HPP_
#define LOPWENO_EULER1D_HPP_

#include <utility>
#include <vector>

#include "lopweno/euler_gas.hpp"
#include "lopweno/grid1d.hpp"
#include "lopweno/reconstruct.hpp"
#include "lopweno/riemann_exact.hpp"
#include "lopweno/time_integration.hpp"

namespace lopweno {

enum class EulerIC1D { SOD, LAX, SHU_OSHER, TITAREV_TORO };

struct EulerProblem1D {
  EulerIC1D ic = EulerIC1D::SOD;
  double xl = 0.0, xr = 1.0;
  double x_jump = 0.5;
  double t_final = 0.25;
  CflPolicy cfl = CflPolicy::fixed(0.5);
  int default_n = 300;

  static EulerProblem1D make(EulerIC1D ic);

  // Point value of the primitive initial data (rho, u, p).
  RiemannState prim_at(double x) const;
  bool is_shock_tube() const { return ic == EulerIC1D::SOD || ic == EulerIC1D::LAX; }
  RiemannState left_state() const { return prim_at(xl); }
  RiemannState right_state() const;
};

// Conserved fields (rho, rho u, E) stored component-major over the ghosted
// grid; transmissive boundaries.
class EulerSolver1D {
 public:
  EulerSolver1D(const EulerProblem1D& problem, int n, const SchemeConfig& cfg,
                const AuxProvider* aux = nullptr);

  const Grid1D& grid() const { return grid_; }
  std::vector<double>& state() { return state_; }
  const std::vector<double>& state() const { return state_; }
  double time() const { return t_; }
  long steps() const { return steps_; }

  int stride() const { return grid_.total(); }
  double& at(std::vector<double>& s, int comp, int gi) const {
    return s[comp * stride() + gi];
  }
  double at(const std::vector<double>& s, int comp, int gi) const {
    return s[comp * stride() + gi];
  }

  // Max |u| + c over the interior cells of the given state.
  double max_wave_speed(const std::vector<double>& s) const;

  void rhs(const std::vector<double>& s, double t, std::vector<double>& dsdt);
  void step(double dt);
  void advance_to(double t_final);

  // Interior primitive profiles of the current state.
  void profiles(std::vector<double>& rho, std::vector<double>& u,
                std::vector<double>& p) const;

  long fallback_count() const { return fallbacks_; }

 private:
  void check_positivity() const;

  EulerProblem1D problem_;
  Grid1D grid_;
  SchemeConfig cfg_;
  const AuxProvider* aux_;
  std::vector<double> state_;
  std::vector<double> scratch_a_, scratch_b_, ghosted_, fluxes_;
  std::vector<Primitive> prims_cache_;
  double t_ = 0.0;
  long steps_ = 0;
  long fallbacks_ = 0;
};

struct EulerRun1DResult {
  Grid1D grid;
  std::vector<double> rho, u, p;  // interior profiles at t_final
  long steps = 0;
  bool has_reference = false;
  std::vector<double> rho_ref;  // same sampling as rho
  double l1_density = 0.0;      // h * sum |rho - rho_ref|
};

// Reference density curve as (x, rho) samples; used for the shock-density
// problems where the reference is a fine-grid WENO-JS run.
struct ReferenceCurve {
  std::vector<double> x;
  std::vector<double> rho;
};

// Marches to t_final. Shock tubes are compared against the exact Riemann
// solution; other problems against `reference` when provided.
EulerRun1DResult run(const EulerProblem1D& problem, int n, const SchemeConfig& cfg,
                     const AuxProvider* aux = nullptr,
                     const ReferenceCurve* reference = nullptr);

// Exact (rho, u, p) of the shock-tube problem at (x, t).
RiemannState shock_tube_exact(const EulerProblem1D& problem, double x, double t);

}  // namespace lopweno

#endif  // LOPWENO_EULER1D_HPP_
