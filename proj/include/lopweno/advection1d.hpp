//! \file advection1d.hpp
//! \brief Finite-volume solver for u_t + u_x = 0 on periodic domains, with
//!        the benchmark initial conditions, exact solutions and error norms.

#ifndef LOPWENO_ADVECTION1D_HPP_
#define LOPWENO_ADVECTION1D_HPP_

#include <vector>

#include "lopweno/grid1d.hpp"
#include "lopweno/reconstruct.hpp"
#include "lopweno/time_integration.hpp"

namespace lopweno {

enum class AdvectionIC { SLP, BICWP, HCP, STEP, SINE };

struct AdvectionProblem {
  AdvectionIC ic = AdvectionIC::SINE;
  double xl = -1.0;
  double xr = 1.0;
  double t_final = 2.0;
  CflPolicy cfl = CflPolicy::fixed(0.5);
  int default_n = 200;

  static AdvectionProblem make(AdvectionIC ic);

  double period() const { return xr - xl; }
  // Pointwise initial profile and its non-smooth abscissas (jumps/corners).
  double u0(double x) const;
  std::vector<double> breakpoints() const;
};

// L1/L2/Linf errors plus convergence orders and increased-error percentages.
// Orders and chi values are filled only where a comparison run exists.
struct ErrorReport {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  double order_l1 = 0.0;
  double order_linf = 0.0;
  bool has_order = false;
  double chi1 = 0.0;
  double chi2 = 0.0;
  bool has_chi = false;
};

// Exact cell averages (5-point Gauss per smooth piece) of the initial data.
std::vector<double> initialize(const AdvectionProblem& problem, const Grid1D& grid);

// Initial data translated by t with periodic wrap, cell-averaged the same way.
std::vector<double> exact_solution(const AdvectionProblem& problem, const Grid1D& grid,
                                   double t);

ErrorReport error_norms(const std::vector<double>& numeric,
                        const std::vector<double>& exact, const Grid1D& grid);

// chi_j = (L_j - L_j^ILW) / L_j^ILW * 100%.
void increased_errors(ErrorReport& report, const ErrorReport& ilw_report);

// Semi-discrete right-hand side: global Lax-Friedrichs interface fluxes of
// f(u) = u differenced per cell. The field is ghosted; ghosts are refilled.
class AdvectionSolver {
 public:
  AdvectionSolver(const AdvectionProblem& problem, const Grid1D& grid,
                  const SchemeConfig& cfg, const AuxProvider* aux = nullptr)
      : problem_(problem), grid_(grid), cfg_(cfg), aux_(aux),
        flux_(grid.n + 1, 0.0) {}

  void rhs(const std::vector<double>& u, double t, std::vector<double>& dudt);

  long fallback_count() const { return fallbacks_; }
  const Grid1D& grid() const { return grid_; }

  // Weight-state sweep over all interfaces of the current field.
  void record_imr(const std::vector<double>& u, double time, IMRCollector& out);

 private:
  AdvectionProblem problem_;
  Grid1D grid_;
  SchemeConfig cfg_;
  const AuxProvider* aux_;
  std::vector<double> flux_;
  std::vector<double> ghosted_;
  long fallbacks_ = 0;
};

struct AdvectionRunResult {
  std::vector<double> field;  // ghosted
  ErrorReport report;
  long steps = 0;
  long fallbacks = 0;
};

// March to t_final with SSP-RK3 under the problem's CFL policy; IMR samples,
// when requested, are taken at the final time over all interfaces.
AdvectionRunResult run(const AdvectionProblem& problem, const Grid1D& grid,
                       const SchemeConfig& cfg, const AuxProvider* aux = nullptr,
                       IMRCollector* imr = nullptr);

}  // namespace lopweno

#endif  // LOPWENO_ADVECTION1D_HPP_
