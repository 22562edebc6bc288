//! \file euler2d.cpp

#include "lopweno/euler2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lopweno/quadrature.hpp"

namespace lopweno {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDmrX0 = 1.0 / 6.0;
const double kDmrTheta = kPi / 6.0;

// SVI vortex constants.
constexpr double kSviEps = 0.3;
constexpr double kSviRc = 0.05;
constexpr double kSviAlpha = 0.204;
constexpr double kSviXc = 0.25;
constexpr double kSviYc = 0.5;
constexpr double kSviPR = 1.3;

std::array<double, 4> dmr_post_shock() {
  return {8.0, 8.25 * std::cos(kDmrTheta), -8.25 * std::sin(kDmrTheta), 116.5};
}

std::array<double, 4> dmr_pre_shock() { return {1.4, 0.0, 0.0, 1.0}; }

}  // namespace

Problem2D Problem2D::make(Problem2DId id) {
  Problem2D p;
  p.id = id;
  switch (id) {
    case Problem2DId::ACC1:
    case Problem2DId::ACC2:
      p.xl = -1.0; p.xr = 1.0; p.yl = -1.0; p.yr = 1.0;
      p.nx_default = 80; p.ny_default = 80; p.t_final = 2.0;
      p.cfl = CflPolicy::mesh_powered(2.0 / 3.0);
      p.bc_left = p.bc_right = p.bc_bottom = p.bc_top = BoundarySpec::periodic();
      break;
    case Problem2DId::BLAST2D:
      p.xl = 0.0; p.xr = 1.0; p.yl = 0.0; p.yr = 0.4;
      p.nx_default = 300; p.ny_default = 120; p.t_final = 0.038;
      p.bc_left = p.bc_right = BoundarySpec::reflective();
      p.bc_bottom = p.bc_top = BoundarySpec::transmissive();
      break;
    case Problem2DId::IMPLOSION:
      p.xl = -20.0; p.xr = 20.0; p.yl = -20.0; p.yr = 20.0;
      p.nx_default = 400; p.ny_default = 400; p.t_final = 4.2;
      p.bc_left = p.bc_right = p.bc_bottom = p.bc_top = BoundarySpec::reflective();
      break;
    case Problem2DId::EXPLOSION:
      p.xl = -10.0; p.xr = 10.0; p.yl = -10.0; p.yr = 10.0;
      p.nx_default = 400; p.ny_default = 400; p.t_final = 5.0;
      p.bc_left = p.bc_right = p.bc_bottom = p.bc_top = BoundarySpec::transmissive();
      break;
    case Problem2DId::SVI:
      p.xl = 0.0; p.xr = 1.0; p.yl = 0.0; p.yr = 1.0;
      p.nx_default = 800; p.ny_default = 800; p.t_final = 0.6;
      p.bc_left = p.bc_right = p.bc_bottom = p.bc_top = BoundarySpec::transmissive();
      break;
    case Problem2DId::RSR: {
      p.xl = 0.0; p.xr = 4.0; p.yl = 0.0; p.yr = 1.0;
      p.nx_default = 800; p.ny_default = 200; p.t_final = 2.5;
      p.bc_left = BoundarySpec::dirichlet({1.0, 2.9, 0.0, 1.0 / kGamma});
      p.bc_right = BoundarySpec::transmissive();
      p.bc_bottom = BoundarySpec::reflective();
      p.bc_top = BoundarySpec::dirichlet({1.69997, 2.61934, -0.50632, 1.52819});
      break;
    }
    case Problem2DId::DMR:
      p.xl = 0.0; p.xr = 4.0; p.yl = 0.0; p.yr = 1.0;
      p.nx_default = 2000; p.ny_default = 500; p.t_final = 0.2;
      p.bc_left = BoundarySpec::inflow(dmr_post_shock());
      p.bc_right = BoundarySpec::outflow();
      p.bc_bottom = {BoundarySpec::Kind::DmrBottom, dmr_post_shock()};
      p.bc_top = {BoundarySpec::Kind::DmrTop, {}};
      break;
    case Problem2DId::FFS:
      p.xl = 0.0; p.xr = 3.0; p.yl = 0.0; p.yr = 1.0;
      p.nx_default = 900; p.ny_default = 300; p.t_final = 4.0;
      p.has_mask = true;
      p.bc_left = BoundarySpec::inflow({1.4, 3.0, 0.0, 1.0});
      p.bc_right = BoundarySpec::outflow();
      p.bc_bottom = BoundarySpec::reflective();
      p.bc_top = BoundarySpec::reflective();
      break;
    case Problem2DId::RTI:
      p.xl = 0.0; p.xr = 0.25; p.yl = 0.0; p.yr = 1.0;
      p.nx_default = 240; p.ny_default = 960; p.t_final = 1.98;
      p.gamma = 5.0 / 3.0;
      p.gravity = true;
      p.bc_left = p.bc_right = BoundarySpec::reflective();
      p.bc_bottom = BoundarySpec::dirichlet({2.0, 0.0, 0.0, 1.0});
      p.bc_top = BoundarySpec::dirichlet({1.0, 0.0, 0.0, 2.5});
      break;
  }
  return p;
}

std::array<double, 4> Problem2D::prim_at(double x, double y) const {
  switch (id) {
    case Problem2DId::ACC1:
      return {1.0 + 0.2 * std::sin(kPi * (x + y)), 0.7, 0.3, 1.0};
    case Problem2DId::ACC2: {
      const double s = kPi * (x + y);
      return {1.0 + 0.2 * std::sin(s - std::sin(s) / kPi), 0.7, 0.3, 1.0};
    }
    case Problem2DId::BLAST2D:
      if (x < 0.1) return {1.0, 0.0, 0.0, 1000.0};
      if (x < 0.9) return {1.0, 0.0, 0.0, 0.01};
      return {1.0, 0.0, 0.0, 100.0};
    case Problem2DId::IMPLOSION:
      return std::sqrt(x * x + y * y) < 0.4
                 ? std::array<double, 4>{1.0, 0.0, 0.0, 1.0}
                 : std::array<double, 4>{0.125, 0.0, 0.0, 0.1};
    case Problem2DId::EXPLOSION:
      return std::sqrt(x * x + y * y) < 4.0
                 ? std::array<double, 4>{2.0, 0.0, 0.0, 5.0}
                 : std::array<double, 4>{1.0, 0.0, 0.0, 1.0};
    case Problem2DId::SVI: {
      const double g = gamma;
      const double rho_l = 1.0, u_l = std::sqrt(g), p_l = 1.0;
      if (x >= 0.5) {
        const double rho_r =
            rho_l * (g - 1.0 + (g + 1.0) * kSviPR) / (g + 1.0 + (g - 1.0) * kSviPR);
        const double u_r =
            u_l * (1.0 - kSviPR) / std::sqrt(g - 1.0 + kSviPR * (g + 1.0));
        return {rho_r, u_r, 0.0, kSviPR};
      }
      const double r2 = ((x - kSviXc) * (x - kSviXc) + (y - kSviYc) * (y - kSviYc)) /
                        (kSviRc * kSviRc);
      const double e1 = std::exp(kSviAlpha * (1.0 - r2));
      const double dT =
          -(g - 1.0) * kSviEps * kSviEps * std::exp(2.0 * kSviAlpha * (1.0 - r2)) /
          (4.0 * kSviAlpha * g);
      const double drho = rho_l * rho_l / ((g - 1.0) * p_l) * dT;
      const double du = kSviEps * (y - kSviYc) / kSviRc * e1;
      const double dv = -kSviEps * (x - kSviXc) / kSviRc * e1;
      const double dp = g * rho_l * rho_l / ((g - 1.0) * rho_l) * dT;
      return {rho_l + drho, u_l + du, 0.0 + dv, p_l + dp};
    }
    case Problem2DId::RSR:
      return {1.0, 2.9, 0.0, 1.0 / kGamma};
    case Problem2DId::DMR:
      return x < kDmrX0 + y / std::sqrt(3.0) ? dmr_post_shock() : dmr_pre_shock();
    case Problem2DId::FFS:
      return {1.4, 3.0, 0.0, 1.0};
    case Problem2DId::RTI: {
      const double g = gamma;
      if (y <= 0.5) {
        const double p = 2.0 * y + 1.0;
        const double c = std::sqrt(g * p / 2.0);
        return {2.0, 0.0, -0.025 * c * std::cos(8.0 * kPi * x), p};
      }
      const double p = y + 1.5;
      const double c = std::sqrt(g * p / 1.0);
      return {1.0, 0.0, -0.025 * c * std::cos(8.0 * kPi * x), p};
    }
  }
  return {};
}

bool Problem2D::masked(double x, double y) const {
  return has_mask && x > 0.6 && y < 0.2;
}

double Problem2D::exact_density(double x, double y, double t) const {
  // Constant-velocity transport of the initial density wave.
  const double xs = wrap_periodic(x - 0.7 * t, xl, xr - xl);
  const double ys = wrap_periodic(y - 0.3 * t, yl, yr - yl);
  return prim_at(xs, ys)[0];
}

EulerSolver2D::EulerSolver2D(const Problem2D& problem, int nx, int ny,
                             const SchemeConfig& cfg, const AuxProvider* aux)
    : problem_(problem), grid_(nx, ny, problem.xl, problem.xr, problem.yl, problem.yr),
      cfg_(cfg), aux_(aux) {
  const int tx = grid_.tx();
  const int ty = grid_.ty();
  state_.assign(4 * static_cast<std::size_t>(tx) * ty, 0.0);

  if (problem_.has_mask) {
    mask_.assign(static_cast<std::size_t>(tx) * ty, 0);
    mask_if0_ = nx;
    mask_jf0_ = 0;
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        if (problem_.masked(grid_.xc(i), grid_.yc(j))) {
          mask_[(j + Grid2D::ng) * tx + i + Grid2D::ng] = 1;
          mask_if0_ = std::min(mask_if0_, i);
          mask_jf0_ = std::max(mask_jf0_, j + 1);
        }
  }

  // Point-sampled primitive data at the cell centers; every ghosted cell gets
  // a valid state so frozen solid cells stay integrable.
  for (int gj = 0; gj < ty; ++gj)
    for (int gi = 0; gi < tx; ++gi) {
      const double x = grid_.xl + (gi - Grid2D::ng + 0.5) * grid_.h;
      const double y = grid_.yl + (gj - Grid2D::ng + 0.5) * grid_.h;
      const double xq = std::clamp(x, grid_.xl, grid_.xr);
      const double yq = std::clamp(y, grid_.yl, grid_.yr);
      const std::array<double, 4> pr = problem_.prim_at(xq, yq);
      state_[idx(0, gi, gj)] = pr[0];
      state_[idx(1, gi, gj)] = pr[0] * pr[1];
      state_[idx(2, gi, gj)] = pr[0] * pr[2];
      state_[idx(3, gi, gj)] = total_energy2d(pr[0], pr[1], pr[2], pr[3], problem_.gamma);
    }
}

void EulerSolver2D::apply_boundaries(std::vector<double>& s, double t) const {
  const int nx = grid_.nx;
  const int ny = grid_.ny;
  const int tx = grid_.tx();
  const int ng = Grid2D::ng;
  const double gamma = problem_.gamma;

  auto set_prim = [&](int c, int gi, int gj, const std::array<double, 4>& pr) {
    const std::size_t base = (static_cast<std::size_t>(c) * grid_.ty() + gj) * tx + gi;
    switch (c) {
      case 0: s[base] = pr[0]; break;
      case 1: s[base] = pr[0] * pr[1]; break;
      case 2: s[base] = pr[0] * pr[2]; break;
      default: s[base] = total_energy2d(pr[0], pr[1], pr[2], pr[3], gamma); break;
    }
  };

  // Left/right ghosts for the interior rows.
  for (int gj = ng; gj < ng + ny; ++gj) {
    for (int d = 0; d < ng; ++d) {
      const int ghost_l = ng - 1 - d;
      const int ghost_r = ng + nx + d;
      for (int c = 0; c < 4; ++c) {
        double vl, vr;
        switch (problem_.bc_left.kind) {
          case BoundarySpec::Kind::Periodic: vl = s[idx(c, ng + nx - 1 - d, gj)]; break;
          case BoundarySpec::Kind::Reflective:
            vl = s[idx(c, ng + d, gj)];
            if (c == 1) vl = -vl;
            break;
          case BoundarySpec::Kind::Dirichlet:
          case BoundarySpec::Kind::Inflow: {
            set_prim(c, ghost_l, gj, problem_.bc_left.prim);
            vl = s[idx(c, ghost_l, gj)];
            break;
          }
          default: vl = s[idx(c, ng, gj)]; break;  // transmissive/outflow
        }
        s[idx(c, ghost_l, gj)] = vl;

        switch (problem_.bc_right.kind) {
          case BoundarySpec::Kind::Periodic: vr = s[idx(c, ng + d, gj)]; break;
          case BoundarySpec::Kind::Reflective:
            vr = s[idx(c, ng + nx - 1 - d, gj)];
            if (c == 1) vr = -vr;
            break;
          case BoundarySpec::Kind::Dirichlet:
          case BoundarySpec::Kind::Inflow: {
            set_prim(c, ghost_r, gj, problem_.bc_right.prim);
            vr = s[idx(c, ghost_r, gj)];
            break;
          }
          default: vr = s[idx(c, ng + nx - 1, gj)]; break;
        }
        s[idx(c, ghost_r, gj)] = vr;
      }
    }
  }

  // Bottom/top ghosts for the interior columns.
  const double dmr_foot = kDmrX0 + (1.0 + 20.0 * t) / std::sqrt(3.0);
  for (int gi = ng; gi < ng + nx; ++gi) {
    const double x = grid_.xc(gi - ng);
    for (int d = 0; d < ng; ++d) {
      const int ghost_b = ng - 1 - d;
      const int ghost_t = ng + ny + d;

      switch (problem_.bc_bottom.kind) {
        case BoundarySpec::Kind::Periodic:
          for (int c = 0; c < 4; ++c) s[idx(c, gi, ghost_b)] = s[idx(c, gi, ng + ny - 1 - d)];
          break;
        case BoundarySpec::Kind::Reflective:
          for (int c = 0; c < 4; ++c) {
            double v = s[idx(c, gi, ng + d)];
            if (c == 2) v = -v;
            s[idx(c, gi, ghost_b)] = v;
          }
          break;
        case BoundarySpec::Kind::Dirichlet:
        case BoundarySpec::Kind::Inflow:
          for (int c = 0; c < 4; ++c) set_prim(c, gi, ghost_b, problem_.bc_bottom.prim);
          break;
        case BoundarySpec::Kind::DmrBottom:
          if (x < kDmrX0) {
            for (int c = 0; c < 4; ++c) set_prim(c, gi, ghost_b, problem_.bc_bottom.prim);
          } else {
            for (int c = 0; c < 4; ++c) {
              double v = s[idx(c, gi, ng + d)];
              if (c == 2) v = -v;
              s[idx(c, gi, ghost_b)] = v;
            }
          }
          break;
        default:
          for (int c = 0; c < 4; ++c) s[idx(c, gi, ghost_b)] = s[idx(c, gi, ng)];
          break;
      }

      switch (problem_.bc_top.kind) {
        case BoundarySpec::Kind::Periodic:
          for (int c = 0; c < 4; ++c) s[idx(c, gi, ghost_t)] = s[idx(c, gi, ng + d)];
          break;
        case BoundarySpec::Kind::Reflective:
          for (int c = 0; c < 4; ++c) {
            double v = s[idx(c, gi, ng + ny - 1 - d)];
            if (c == 2) v = -v;
            s[idx(c, gi, ghost_t)] = v;
          }
          break;
        case BoundarySpec::Kind::Dirichlet:
        case BoundarySpec::Kind::Inflow:
          for (int c = 0; c < 4; ++c) set_prim(c, gi, ghost_t, problem_.bc_top.prim);
          break;
        case BoundarySpec::Kind::DmrTop: {
          const std::array<double, 4> pr =
              x < dmr_foot ? dmr_post_shock() : dmr_pre_shock();
          for (int c = 0; c < 4; ++c) set_prim(c, gi, ghost_t, pr);
          break;
        }
        default:
          for (int c = 0; c < 4; ++c) s[idx(c, gi, ghost_t)] = s[idx(c, gi, ng + ny - 1)];
          break;
      }
    }
  }
}

void EulerSolver2D::fill_mask_x(std::vector<double>& s) const {
  if (mask_.empty()) return;
  const int ng = Grid2D::ng;
  for (int j = 0; j < mask_jf0_; ++j) {
    const int gj = j + ng;
    for (int d = 0; d < ng; ++d) {
      const int gi = mask_if0_ + d + ng;       // solid cell
      const int gm = mask_if0_ - 1 - d + ng;   // mirrored fluid cell
      if (mask_if0_ + d >= grid_.nx || mask_if0_ - 1 - d < 0) continue;
      for (int c = 0; c < 4; ++c) {
        double v = s[idx(c, gm, gj)];
        if (c == 1) v = -v;
        s[idx(c, gi, gj)] = v;
      }
    }
  }
}

void EulerSolver2D::fill_mask_y(std::vector<double>& s) const {
  if (mask_.empty()) return;
  const int ng = Grid2D::ng;
  for (int i = mask_if0_; i < grid_.nx; ++i) {
    const int gi = i + ng;
    for (int d = 0; d < ng; ++d) {
      const int gj = mask_jf0_ - 1 - d + ng;  // solid cell
      const int gm = mask_jf0_ + d + ng;      // mirrored fluid cell
      if (mask_jf0_ - 1 - d < 0 || mask_jf0_ + d >= grid_.ny) continue;
      for (int c = 0; c < 4; ++c) {
        double v = s[idx(c, gm, gj)];
        if (c == 2) v = -v;
        s[idx(c, gi, gj)] = v;
      }
    }
  }
}

std::pair<double, double> EulerSolver2D::max_wave_speeds(
    const std::vector<double>& s) const {
  double ax = 0.0, ay = 0.0;
  for (int j = 0; j < grid_.ny; ++j)
    for (int i = 0; i < grid_.nx; ++i) {
      if (cell_masked(i, j)) continue;
      const int gi = i + Grid2D::ng;
      const int gj = j + Grid2D::ng;
      const Primitive2D pr =
          primitives2d(s[idx(0, gi, gj)], s[idx(1, gi, gj)], s[idx(2, gi, gj)],
                       s[idx(3, gi, gj)], problem_.gamma,
                       static_cast<long>(j) * grid_.nx + i);
      ax = std::max(ax, std::fabs(pr.u) + pr.c);
      ay = std::max(ay, std::fabs(pr.v) + pr.c);
    }
  return {ax, ay};
}

void EulerSolver2D::sweep_x(const std::vector<double>& s, double alpha,
                            std::vector<double>& dsdt) {
  const int nx = grid_.nx;
  const int ny = grid_.ny;
  const int ng = Grid2D::ng;
  const double gamma = problem_.gamma;
  const double inv_h = 1.0 / grid_.h;

  std::vector<Primitive2D>& prow = prow_;
  prow.resize(nx + 4);
  std::vector<double>& flux = row_flux_;
  flux.resize(4 * (nx + 1));

  for (int j = 0; j < ny; ++j) {
    const int gj = j + ng;
    for (int gi = ng - 1; gi <= ng + nx; ++gi)
      prow[gi - ng + 1] = primitives2d(s[idx(0, gi, gj)], s[idx(1, gi, gj)],
                                       s[idx(2, gi, gj)], s[idx(3, gi, gj)], gamma,
                                       static_cast<long>(j) * nx + gi - ng);

    for (int i = 0; i <= nx; ++i) {
      const Eigen2D eig = roe_average2d(prow[i], prow[i + 1], true, gamma);

      std::array<std::array<double, 4>, 6> ch;
      for (int m = 0; m < 6; ++m) {
        const int g = i + m;
        const std::array<double, 4> q{s[idx(0, g, gj)], s[idx(1, g, gj)],
                                      s[idx(2, g, gj)], s[idx(3, g, gj)]};
        ch[m] = apply4(eig.left, q);
      }

      std::array<double, 4> wl, wr;
      for (int c = 0; c < 4; ++c) {
        const StencilWindow win_l{ch[0][c], ch[1][c], ch[2][c], ch[3][c], ch[4][c]};
        const StencilWindow win_r{ch[5][c], ch[4][c], ch[3][c], ch[2][c], ch[1][c]};
        wl[c] = reconstruct_interface(win_l, cfg_, aux_, nullptr, &fallbacks_);
        wr[c] = reconstruct_interface(win_r, cfg_, aux_, nullptr, &fallbacks_);
      }
      const std::array<double, 4> ul = apply4(eig.right, wl);
      const std::array<double, 4> ur = apply4(eig.right, wr);
      const std::array<double, 4> fl = euler_flux2d(ul, gamma);
      const std::array<double, 4> fr = euler_flux2d(ur, gamma);
      for (int c = 0; c < 4; ++c)
        flux[c * (nx + 1) + i] = 0.5 * (fl[c] + fr[c] - alpha * (ur[c] - ul[c]));
    }

    for (int c = 0; c < 4; ++c)
      for (int i = 0; i < nx; ++i)
        dsdt[idx(c, i + ng, gj)] -=
            (flux[c * (nx + 1) + i + 1] - flux[c * (nx + 1) + i]) * inv_h;
  }
}

void EulerSolver2D::sweep_y(const std::vector<double>& s, double alpha,
                            std::vector<double>& dsdt) {
  const int nx = grid_.nx;
  const int ny = grid_.ny;
  const int ng = Grid2D::ng;
  const double gamma = problem_.gamma;
  const double inv_h = 1.0 / grid_.h;

  std::vector<Primitive2D>& prow = prow_;
  prow.resize(ny + 4);
  std::vector<double>& flux = row_flux_;
  flux.resize(4 * (ny + 1));

  for (int i = 0; i < nx; ++i) {
    const int gi = i + ng;
    for (int gj = ng - 1; gj <= ng + ny; ++gj)
      prow[gj - ng + 1] = primitives2d(s[idx(0, gi, gj)], s[idx(1, gi, gj)],
                                       s[idx(2, gi, gj)], s[idx(3, gi, gj)], gamma,
                                       static_cast<long>(gj - ng) * nx + i);

    for (int j = 0; j <= ny; ++j) {
      const Eigen2D eig = roe_average2d(prow[j], prow[j + 1], false, gamma);

      // Swapped component order: (rho, rho v, rho u, E).
      std::array<std::array<double, 4>, 6> ch;
      for (int m = 0; m < 6; ++m) {
        const int g = j + m;
        const std::array<double, 4> q{s[idx(0, gi, g)], s[idx(2, gi, g)],
                                      s[idx(1, gi, g)], s[idx(3, gi, g)]};
        ch[m] = apply4(eig.left, q);
      }

      std::array<double, 4> wl, wr;
      for (int c = 0; c < 4; ++c) {
        const StencilWindow win_l{ch[0][c], ch[1][c], ch[2][c], ch[3][c], ch[4][c]};
        const StencilWindow win_r{ch[5][c], ch[4][c], ch[3][c], ch[2][c], ch[1][c]};
        wl[c] = reconstruct_interface(win_l, cfg_, aux_, nullptr, &fallbacks_);
        wr[c] = reconstruct_interface(win_r, cfg_, aux_, nullptr, &fallbacks_);
      }
      const std::array<double, 4> ul = apply4(eig.right, wl);
      const std::array<double, 4> ur = apply4(eig.right, wr);
      const std::array<double, 4> fl = euler_flux2d(ul, gamma);
      const std::array<double, 4> fr = euler_flux2d(ur, gamma);
      for (int c = 0; c < 4; ++c)
        flux[c * (ny + 1) + j] = 0.5 * (fl[c] + fr[c] - alpha * (ur[c] - ul[c]));
    }

    for (int j = 0; j < ny; ++j) {
      dsdt[idx(0, gi, j + ng)] -= (flux[j + 1] - flux[j]) * inv_h;
      dsdt[idx(2, gi, j + ng)] -=
          (flux[(ny + 1) + j + 1] - flux[(ny + 1) + j]) * inv_h;
      dsdt[idx(1, gi, j + ng)] -=
          (flux[2 * (ny + 1) + j + 1] - flux[2 * (ny + 1) + j]) * inv_h;
      dsdt[idx(3, gi, j + ng)] -=
          (flux[3 * (ny + 1) + j + 1] - flux[3 * (ny + 1) + j]) * inv_h;
    }
  }
}

void EulerSolver2D::rhs(const std::vector<double>& s, double t,
                        std::vector<double>& dsdt) {
  ghosted_ = s;
  apply_boundaries(ghosted_, t);

  const std::pair<double, double> alpha = max_wave_speeds(ghosted_);

  dsdt.assign(s.size(), 0.0);
  fill_mask_x(ghosted_);
  sweep_x(ghosted_, alpha.first, dsdt);
  fill_mask_y(ghosted_);
  sweep_y(ghosted_, alpha.second, dsdt);

  if (problem_.gravity) {
    for (int j = 0; j < grid_.ny; ++j)
      for (int i = 0; i < grid_.nx; ++i) {
        const int gi = i + Grid2D::ng;
        const int gj = j + Grid2D::ng;
        dsdt[idx(2, gi, gj)] += ghosted_[idx(0, gi, gj)];
        dsdt[idx(3, gi, gj)] += ghosted_[idx(2, gi, gj)];
      }
  }

  if (!mask_.empty()) {
    for (int j = 0; j < grid_.ny; ++j)
      for (int i = 0; i < grid_.nx; ++i)
        if (cell_masked(i, j))
          for (int c = 0; c < 4; ++c) dsdt[idx(c, i + Grid2D::ng, j + Grid2D::ng)] = 0.0;
  }
}

void EulerSolver2D::step(double dt) {
  auto rhs_op = [this](const std::vector<double>& f, double t, std::vector<double>& out) {
    rhs(f, t, out);
  };
  try {
    ssp_rk3_step(state_, rhs_op, t_, dt, scratch_a_, scratch_b_);
  } catch (const NonFiniteStateError& e) {
    const long per_comp = static_cast<long>(grid_.tx()) * grid_.ty();
    const long flat = e.index % per_comp;
    const long gi = flat % grid_.tx();
    const long gj = flat / grid_.tx();
    throw NonFiniteStateError(std::string(e.what()) + " at cell (" +
                                  std::to_string(gi - Grid2D::ng) + "," +
                                  std::to_string(gj - Grid2D::ng) + ")",
                              flat, t_);
  }
  t_ += dt;
  ++steps_;
}

void EulerSolver2D::advance_to(double t_final) {
  while (t_ < t_final) {
    const std::pair<double, double> alpha = max_wave_speeds(state_);
    const double dt = compute_dt2(problem_.cfl, grid_.h, grid_.h, alpha.first,
                                  alpha.second, t_, t_final);
    if (!(dt > 0.0)) break;
    step(dt);
  }
}

std::vector<std::pair<double, double>> slice(const EulerSolver2D& solver, int axis,
                                             double coordinate) {
  const Grid2D& g = solver.grid();
  std::vector<std::pair<double, double>> out;
  if (axis == 0) {  // fixed x: profile along y
    if (coordinate < g.xl || coordinate > g.xr)
      throw OutOfDomainError("slice: x coordinate outside domain");
    int i = static_cast<int>(std::floor((coordinate - g.xl) / g.h));
    i = std::clamp(i, 0, g.nx - 1);
    for (int j = 0; j < g.ny; ++j) out.emplace_back(g.yc(j), solver.cell(0, i, j));
  } else {  // fixed y: profile along x
    if (coordinate < g.yl || coordinate > g.yr)
      throw OutOfDomainError("slice: y coordinate outside domain");
    int j = static_cast<int>(std::floor((coordinate - g.yl) / g.h));
    j = std::clamp(j, 0, g.ny - 1);
    for (int i = 0; i < g.nx; ++i) out.emplace_back(g.xc(i), solver.cell(0, i, j));
  }
  return out;
}

double excess_total_variation(const std::vector<std::pair<double, double>>& profile,
                              double x_min, double x_max) {
  std::vector<double> v;
  for (const auto& [x, rho] : profile)
    if (x >= x_min && x <= x_max) v.push_back(rho);
  if (v.size() < 2) return 0.0;
  double tv = 0.0;
  for (std::size_t k = 1; k < v.size(); ++k) tv += std::fabs(v[k] - v[k - 1]);
  return tv - std::fabs(v.back() - v.front());
}

double linf_density_error(const EulerSolver2D& solver, double t) {
  const Grid2D& g = solver.grid();
  double e = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      e = std::max(e, std::fabs(solver.cell(0, i, j) -
                                solver.problem().exact_density(g.xc(i), g.yc(j), t)));
  return e;
}

EulerRun2DDiagnostics run2d(EulerSolver2D& solver, double t_final) {
  solver.advance_to(t_final);
  EulerRun2DDiagnostics d;
  d.steps = solver.steps();
  d.t = solver.time();
  d.fallbacks = solver.fallback_count();
  d.min_density = 1e300;
  d.min_pressure = 1e300;
  const Grid2D& g = solver.grid();
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      if (solver.cell_masked(i, j)) continue;
      const Primitive2D pr = solver.cell_primitive(i, j);
      d.min_density = std::min(d.min_density, pr.rho);
      d.min_pressure = std::min(d.min_pressure, pr.p);
    }
  return d;
}

}  // namespace lopweno
