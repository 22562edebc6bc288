//! \file euler1d.cpp

#include "lopweno/euler1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lopweno {

EulerProblem1D EulerProblem1D::make(EulerIC1D ic) {
  EulerProblem1D p;
  p.ic = ic;
  switch (ic) {
    case EulerIC1D::SOD:
      p.xl = 0.0; p.xr = 1.0; p.x_jump = 0.5; p.t_final = 0.25; p.default_n = 300;
      break;
    case EulerIC1D::LAX:
      p.xl = -5.0; p.xr = 5.0; p.x_jump = 0.0; p.t_final = 1.3; p.default_n = 300;
      break;
    case EulerIC1D::SHU_OSHER:
      p.xl = -5.0; p.xr = 5.0; p.x_jump = -4.0; p.t_final = 1.8; p.default_n = 300;
      break;
    case EulerIC1D::TITAREV_TORO:
      p.xl = -5.0; p.xr = 5.0; p.x_jump = -4.5; p.t_final = 5.0; p.default_n = 1500;
      break;
  }
  return p;
}

RiemannState EulerProblem1D::prim_at(double x) const {
  switch (ic) {
    case EulerIC1D::SOD:
      return x <= x_jump ? RiemannState{1.0, 0.0, 1.0} : RiemannState{0.125, 0.0, 0.1};
    case EulerIC1D::LAX:
      return x <= x_jump ? RiemannState{0.445, 0.698, 3.528}
                         : RiemannState{0.5, 0.0, 0.571};
    case EulerIC1D::SHU_OSHER:
      return x <= x_jump ? RiemannState{3.857143, 2.629369, 10.333333}
                         : RiemannState{1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0};
    case EulerIC1D::TITAREV_TORO:
      return x <= x_jump
                 ? RiemannState{1.515695, 0.5233346, 1.80500}
                 : RiemannState{1.0 + 0.1 * std::sin(20.0 * std::numbers::pi * x), 0.0,
                                1.0};
  }
  return {};
}

RiemannState EulerProblem1D::right_state() const { return prim_at(xr); }

EulerSolver1D::EulerSolver1D(const EulerProblem1D& problem, int n,
                             const SchemeConfig& cfg, const AuxProvider* aux)
    : problem_(problem), grid_(n, problem.xl, problem.xr), cfg_(cfg), aux_(aux) {
  state_.assign(3 * stride(), 0.0);
  fluxes_.assign(3 * (n + 1), 0.0);
  for (int j = 0; j < n; ++j) {
    const RiemannState s = problem.prim_at(grid_.center(j));
    const int gi = Grid1D::gi(j);
    at(state_, 0, gi) = s.rho;
    at(state_, 1, gi) = s.rho * s.u;
    at(state_, 2, gi) = total_energy(s.rho, s.u, s.p);
  }
}

double EulerSolver1D::max_wave_speed(const std::vector<double>& s) const {
  double m = 0.0;
  for (int j = 0; j < grid_.n; ++j) {
    const int gi = Grid1D::gi(j);
    const Primitive pr = primitives(at(s, 0, gi), at(s, 1, gi), at(s, 2, gi), kGamma, j);
    m = std::max(m, std::fabs(pr.u) + pr.c);
  }
  return m;
}

void EulerSolver1D::rhs(const std::vector<double>& s, double /*t*/,
                        std::vector<double>& dsdt) {
  const int n = grid_.n;
  const int str = stride();

  ghosted_ = s;
  for (int c = 0; c < 3; ++c) {
    for (int k = 0; k < Grid1D::ng; ++k) {
      ghosted_[c * str + k] = ghosted_[c * str + Grid1D::ng];
      ghosted_[c * str + Grid1D::ng + n + k] = ghosted_[c * str + Grid1D::ng + n - 1];
    }
  }

  // Global LF dissipation speed, recomputed from the current stage.
  double alpha_lf = 0.0;
  std::vector<Primitive>& prims = prims_cache_;
  prims.resize(n + 6);
  for (int g = 0; g < n + 6; ++g) {
    prims[g] = primitives(ghosted_[g], ghosted_[str + g], ghosted_[2 * str + g], kGamma,
                          g - Grid1D::ng);
    if (g >= Grid1D::ng && g < Grid1D::ng + n)
      alpha_lf = std::max(alpha_lf, std::fabs(prims[g].u) + prims[g].c);
  }

  for (int i = 0; i <= n; ++i) {
    // Interface i separates ghosted cells i+2 and i+3.
    const Eigen1D eig = roe_average(prims[i + 2], prims[i + 3]);

    // Project the six cell averages the two windows touch.
    std::array<std::array<double, 3>, 6> ch;
    for (int m = 0; m < 6; ++m) {
      const std::array<double, 3> q{ghosted_[i + m], ghosted_[str + i + m],
                                    ghosted_[2 * str + i + m]};
      ch[m] = apply3(eig.left, q);
    }

    std::array<double, 3> wl, wr;
    for (int c = 0; c < 3; ++c) {
      const StencilWindow win_l{ch[0][c], ch[1][c], ch[2][c], ch[3][c], ch[4][c]};
      const StencilWindow win_r{ch[5][c], ch[4][c], ch[3][c], ch[2][c], ch[1][c]};
      wl[c] = reconstruct_interface(win_l, cfg_, aux_, nullptr, &fallbacks_);
      wr[c] = reconstruct_interface(win_r, cfg_, aux_, nullptr, &fallbacks_);
    }
    const std::array<double, 3> ul = apply3(eig.right, wl);
    const std::array<double, 3> ur = apply3(eig.right, wr);

    const std::array<double, 3> fl = euler_flux1d(ul);
    const std::array<double, 3> fr = euler_flux1d(ur);
    for (int c = 0; c < 3; ++c)
      fluxes_[c * (n + 1) + i] = 0.5 * (fl[c] + fr[c] - alpha_lf * (ur[c] - ul[c]));
  }

  dsdt.assign(s.size(), 0.0);
  const double inv_h = 1.0 / grid_.h;
  for (int c = 0; c < 3; ++c)
    for (int j = 0; j < n; ++j)
      dsdt[c * str + Grid1D::gi(j)] =
          -(fluxes_[c * (n + 1) + j + 1] - fluxes_[c * (n + 1) + j]) * inv_h;
}

void EulerSolver1D::check_positivity() const {
  for (int j = 0; j < grid_.n; ++j) {
    const int gi = Grid1D::gi(j);
    primitives(at(state_, 0, gi), at(state_, 1, gi), at(state_, 2, gi), kGamma, j);
  }
}

void EulerSolver1D::step(double dt) {
  auto rhs_op = [this](const std::vector<double>& f, double t, std::vector<double>& out) {
    rhs(f, t, out);
  };
  ssp_rk3_step(state_, rhs_op, t_, dt, scratch_a_, scratch_b_);
  check_positivity();
  t_ += dt;
  ++steps_;
}

void EulerSolver1D::advance_to(double t_final) {
  while (t_ < t_final) {
    const double dt = compute_dt(problem_.cfl, grid_.h, max_wave_speed(state_), t_,
                                 t_final);
    if (!(dt > 0.0)) break;
    step(dt);
  }
}

void EulerSolver1D::profiles(std::vector<double>& rho, std::vector<double>& u,
                             std::vector<double>& p) const {
  rho.resize(grid_.n);
  u.resize(grid_.n);
  p.resize(grid_.n);
  for (int j = 0; j < grid_.n; ++j) {
    const int gi = Grid1D::gi(j);
    const Primitive pr =
        primitives(at(state_, 0, gi), at(state_, 1, gi), at(state_, 2, gi), kGamma, j);
    rho[j] = pr.rho;
    u[j] = pr.u;
    p[j] = pr.p;
  }
}

RiemannState shock_tube_exact(const EulerProblem1D& problem, double x, double t) {
  const RiemannState l = problem.left_state();
  const RiemannState r = problem.right_state();
  if (t <= 0.0) return x <= problem.x_jump ? l : r;
  const RiemannStar star = solve_riemann(l, r);
  return sample_riemann(l, r, star, (x - problem.x_jump) / t);
}

EulerRun1DResult run(const EulerProblem1D& problem, int n, const SchemeConfig& cfg,
                     const AuxProvider* aux, const ReferenceCurve* reference) {
  EulerSolver1D solver(problem, n, cfg, aux);
  solver.advance_to(problem.t_final);

  EulerRun1DResult out;
  out.grid = solver.grid();
  out.steps = solver.steps();
  solver.profiles(out.rho, out.u, out.p);

  if (problem.is_shock_tube()) {
    out.has_reference = true;
    out.rho_ref.resize(n);
    for (int j = 0; j < n; ++j)
      out.rho_ref[j] = shock_tube_exact(problem, out.grid.center(j), problem.t_final).rho;
  } else if (reference != nullptr && !reference->x.empty()) {
    out.has_reference = true;
    out.rho_ref.resize(n);
    for (int j = 0; j < n; ++j) {
      const double x = out.grid.center(j);
      const auto it = std::lower_bound(reference->x.begin(), reference->x.end(), x);
      std::size_t k = it - reference->x.begin();
      if (k == reference->x.size()) k = reference->x.size() - 1;
      if (k > 0 && std::fabs(reference->x[k - 1] - x) < std::fabs(reference->x[k] - x))
        --k;
      out.rho_ref[j] = reference->rho[k];
    }
  }
  if (out.has_reference) {
    for (int j = 0; j < n; ++j)
      out.l1_density += std::fabs(out.rho[j] - out.rho_ref[j]);
    out.l1_density *= out.grid.h;
  }
  return out;
}

}  // namespace lopweno
