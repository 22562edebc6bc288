//! \file advection1d.cpp

#include "lopweno/advection1d.hpp"

#include <cmath>
#include <numbers>

#include "lopweno/errors.hpp"
#include "lopweno/quadrature.hpp"

namespace lopweno {

namespace {

constexpr double kPi = std::numbers::pi;

// SLP constants.
constexpr double kZ = -0.7;
constexpr double kDeltaHat = 0.005;
const double kBeta = std::log(2.0) / (36.0 * kDeltaHat * kDeltaHat);
constexpr double kA = 0.5;
constexpr double kAlpha = 10.0;

double gauss_bump(double x, double beta, double z) {
  return std::exp(-beta * (x - z) * (x - z));
}

double ellipse_bump(double x, double alpha, double a) {
  return std::sqrt(std::max(1.0 - alpha * alpha * (x - a) * (x - a), 0.0));
}

double slp_profile(double x) {
  if (x >= -0.8 && x <= -0.6) {
    return (gauss_bump(x, kBeta, kZ - kDeltaHat) + 4.0 * gauss_bump(x, kBeta, kZ) +
            gauss_bump(x, kBeta, kZ + kDeltaHat)) /
           6.0;
  }
  if (x >= -0.4 && x <= -0.2) return 1.0;
  if (x >= 0.0 && x <= 0.2) return 1.0 - std::fabs(10.0 * (x - 0.1));
  if (x >= 0.4 && x <= 0.6) {
    return (ellipse_bump(x, kAlpha, kA - kDeltaHat) + 4.0 * ellipse_bump(x, kAlpha, kA) +
            ellipse_bump(x, kAlpha, kA + kDeltaHat)) /
           6.0;
  }
  return 0.0;
}

double bicwp_profile(double x) {
  if ((x > -0.6 && x <= -0.4) || (x > 0.2 && x <= 0.4) || (x > 0.6 && x <= 0.8))
    return 0.5;
  if ((x > -0.8 && x <= -0.6) || (x > -0.4 && x <= -0.2) || (x > 0.4 && x <= 0.6))
    return 1.0;
  return 0.0;
}

double hcp_profile(double x) {
  const double s = x - 5.0;
  const double c = std::cos(kPi * s);
  double c10 = c * c;                 // c^2
  c10 = c10 * c10 * c10 * c10 * c10;  // c^10
  return -std::exp(-std::pow(s * s, 5)) * c10;
}

}  // namespace

AdvectionProblem AdvectionProblem::make(AdvectionIC ic) {
  AdvectionProblem p;
  p.ic = ic;
  switch (ic) {
    case AdvectionIC::SLP:
      p.xl = -1.0; p.xr = 1.0; p.t_final = 2000.0;
      p.cfl = CflPolicy::fixed(0.1); p.default_n = 100;
      break;
    case AdvectionIC::BICWP:
      p.xl = -1.0; p.xr = 1.0; p.t_final = 2000.0;
      p.cfl = CflPolicy::fixed(0.1); p.default_n = 100;
      break;
    case AdvectionIC::HCP:
      p.xl = 3.5; p.xr = 6.5; p.t_final = 300.0;
      p.cfl = CflPolicy::mesh_powered(2.0 / 3.0); p.default_n = 300;
      break;
    case AdvectionIC::STEP:
      p.xl = -1.0; p.xr = 1.0; p.t_final = 200.0;
      p.cfl = CflPolicy::fixed(0.1); p.default_n = 200;
      break;
    case AdvectionIC::SINE:
      p.xl = -1.0; p.xr = 1.0; p.t_final = 2.0;
      p.cfl = CflPolicy::mesh_powered(2.0 / 3.0); p.default_n = 80;
      break;
  }
  return p;
}

double AdvectionProblem::u0(double x) const {
  switch (ic) {
    case AdvectionIC::SLP: return slp_profile(x);
    case AdvectionIC::BICWP: return bicwp_profile(x);
    case AdvectionIC::HCP: return hcp_profile(x);
    case AdvectionIC::STEP: return x <= 0.0 ? 1.0 : 0.0;
    case AdvectionIC::SINE: return std::sin(kPi * x);
  }
  return 0.0;
}

std::vector<double> AdvectionProblem::breakpoints() const {
  switch (ic) {
    case AdvectionIC::SLP:
      return {-0.8, -0.6, -0.4, -0.2, 0.0, 0.1, 0.2, 0.4, 0.6};
    case AdvectionIC::BICWP:
      return {-0.8, -0.6, -0.4, -0.2, 0.2, 0.4, 0.6, 0.8};
    case AdvectionIC::STEP:
      return {0.0, 1.0};  // jump at 0 and at the periodic seam
    default:
      return {};
  }
}

namespace {

void check_domain(const AdvectionProblem& p, const Grid1D& g) {
  if (g.xl != p.xl || g.xr != p.xr || g.n < 10)
    throw DomainMismatchError("grid does not cover the problem domain");
}

// Cell averages of u0(x - shift) under periodic extension, split at the
// translated breakpoints and at the periodic seam so every Gauss panel sees
// a smooth integrand.
std::vector<double> averaged_profile(const AdvectionProblem& p, const Grid1D& g,
                                     double shift) {
  const double period = p.period();
  std::vector<double> cuts;
  for (double b : p.breakpoints()) cuts.push_back(wrap_periodic(b + shift, p.xl, period));
  if (shift != 0.0) cuts.push_back(wrap_periodic(p.xl + shift, p.xl, period));

  auto profile = [&](double x) { return p.u0(wrap_periodic(x - shift, p.xl, period)); };

  std::vector<double> u(g.total(), 0.0);
  for (int j = 0; j < g.n; ++j)
    u[Grid1D::gi(j)] = cell_average(profile, g.face(j), g.face(j + 1), cuts);
  fill_periodic(g, u);
  return u;
}

}  // namespace

std::vector<double> initialize(const AdvectionProblem& problem, const Grid1D& grid) {
  check_domain(problem, grid);
  return averaged_profile(problem, grid, 0.0);
}

std::vector<double> exact_solution(const AdvectionProblem& problem, const Grid1D& grid,
                                   double t) {
  check_domain(problem, grid);
  const double shift = std::fmod(t, problem.period());
  return averaged_profile(problem, grid, shift);
}

ErrorReport error_norms(const std::vector<double>& numeric,
                        const std::vector<double>& exact, const Grid1D& grid) {
  ErrorReport r;
  for (int j = 0; j < grid.n; ++j) {
    const double e = std::fabs(numeric[Grid1D::gi(j)] - exact[Grid1D::gi(j)]);
    r.l1 += e;
    r.l2 += grid.h * e * e;
    r.linf = std::max(r.linf, e);
  }
  r.l1 *= grid.h;
  r.l2 = std::sqrt(r.l2);
  return r;
}

void increased_errors(ErrorReport& report, const ErrorReport& ilw_report) {
  if (ilw_report.l1 == 0.0 || ilw_report.l2 == 0.0)
    throw ZeroBaselineError("increased_errors: zero ILW baseline");
  report.chi1 = (report.l1 - ilw_report.l1) / ilw_report.l1 * 100.0;
  report.chi2 = (report.l2 - ilw_report.l2) / ilw_report.l2 * 100.0;
  report.has_chi = true;
}

void AdvectionSolver::rhs(const std::vector<double>& u, double /*t*/,
                          std::vector<double>& dudt) {
  const int n = grid_.n;
  ghosted_ = u;
  fill_periodic(grid_, ghosted_);
  const double* v = ghosted_.data();

  // Global Lax-Friedrichs flux with alpha = max|f'(u)| = 1 reduces to the
  // upwind value f_hat = u^L for f(u) = u.
  for (int i = 0; i <= n; ++i) {
    const StencilWindow w{v[i], v[i + 1], v[i + 2], v[i + 3], v[i + 4]};
    flux_[i] = reconstruct_interface(w, cfg_, aux_, nullptr, &fallbacks_);
  }

  dudt.assign(u.size(), 0.0);
  const double inv_h = 1.0 / grid_.h;
  for (int j = 0; j < n; ++j)
    dudt[Grid1D::gi(j)] = -(flux_[j + 1] - flux_[j]) * inv_h;
}

void AdvectionSolver::record_imr(const std::vector<double>& u, double time,
                                 IMRCollector& out) {
  ghosted_ = u;
  fill_periodic(grid_, ghosted_);
  const double* v = ghosted_.data();
  WeightState state;
  for (int i = 0; i <= grid_.n; ++i) {
    const StencilWindow w{v[i], v[i + 1], v[i + 2], v[i + 3], v[i + 4]};
    reconstruct_interface(w, cfg_, aux_, &state);
    for (const IMRSample& s : imr_record(state, i, time)) out.push_back(s);
  }
}

AdvectionRunResult run(const AdvectionProblem& problem, const Grid1D& grid,
                       const SchemeConfig& cfg, const AuxProvider* aux,
                       IMRCollector* imr) {
  check_domain(problem, grid);
  AdvectionSolver solver(problem, grid, cfg, aux);
  std::vector<double> u = initialize(problem, grid);
  std::vector<double> stage, dudt;

  auto rhs = [&](const std::vector<double>& f, double t, std::vector<double>& out) {
    solver.rhs(f, t, out);
  };

  double t = 0.0;
  long steps = 0;
  while (t < problem.t_final) {
    const double dt = compute_dt(problem.cfl, grid.h, 1.0, t, problem.t_final);
    if (!(dt > 0.0)) break;
    try {
      ssp_rk3_step(u, rhs, t, dt, stage, dudt);
    } catch (const NonFiniteStateError& e) {
      throw NonFiniteStateError(std::string(e.what()) + " (advection run)",
                                e.index - Grid1D::ng, t);
    }
    t += dt;
    ++steps;
  }

  if (imr != nullptr) solver.record_imr(u, problem.t_final, *imr);

  AdvectionRunResult result;
  result.report = error_norms(u, exact_solution(problem, grid, problem.t_final), grid);
  result.field = std::move(u);
  result.steps = steps;
  result.fallbacks = solver.fallback_count();
  return result;
}

}  // namespace lopweno
