//! \file harness.hpp
//! \brief Run configuration, convergence tables and the benchmark drivers
//!        shared by the CLI and the acceptance suite.

#ifndef LOPWENO_HARNESS_HPP_
#define LOPWENO_HARNESS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lopweno/advection1d.hpp"
#include "lopweno/euler1d.hpp"
#include "lopweno/euler2d.hpp"
#include "lopweno/weights.hpp"

namespace lopweno {

struct RunConfig {
  std::string problem;  // sine|step|slp|bicwp|hcp|sod|lax|shu-osher|titarev-toro|
                        // acc1|acc2|blast2d|implosion|explosion|svi|rsr|dmr|ffs|rti
  Scheme scheme = Scheme::Z;
  bool lop = false;
  int n = 0;  // 0: problem default; 2D runs derive ny from the aspect ratio
  std::optional<double> cfl;      // fixed CFL number override
  std::optional<double> cfl_pow;  // CFL = h^exponent override
  std::optional<double> t_final;
  double epsilon = 1e-40;
  int p = 2;
  bool imr = false;
  bool full = false;  // unlocks the paper-scale runs
  std::string out_dir = ".";
  std::uint64_t seed = 0;  // property-test corpora only

  SchemeConfig scheme_config() const {
    return {scheme, epsilon, p, lop};
  }
};

struct ConvergenceRow {
  double resolution = 0.0;  // N or dx
  double l1 = 0.0;
  double order_l1 = 0.0;
  double linf = 0.0;
  double order_linf = 0.0;
  bool has_l1 = true;
  bool has_order = false;
};

struct ConvergenceTable {
  std::string label;
  std::vector<ConvergenceRow> rows;
};

// Fills orders between consecutive rows from the stored resolutions
// (interpreted as N when increasing, dx when decreasing).
void fill_orders(ConvergenceTable& table);

// Interface-reconstruction accuracy at the critical point of x^l e^x:
// exact cell averages on (-1,1), one reconstruction at the interface
// adjacent to x = 0, Linf error against the exact point value.
ConvergenceTable critical_point_test(int l, const std::vector<double>& dx_list,
                                     const SchemeConfig& cfg,
                                     const AuxProvider* aux = nullptr);

// Advection error/order table over a resolution list.
ConvergenceTable convergence_sweep(const AdvectionProblem& problem,
                                   const std::vector<int>& n_list,
                                   const SchemeConfig& cfg,
                                   const AuxProvider* aux = nullptr);

// 2D accuracy problems: Linf density error over a resolution list.
ConvergenceTable acc_convergence(Problem2DId id, const std::vector<int>& n_list,
                                 const SchemeConfig& cfg,
                                 const AuxProvider* aux = nullptr);

void emit_table(const ConvergenceTable& table, const std::string& path);

// One self-describing JSON sidecar per emitted artifact.
void write_metadata(const RunConfig& cfg, const std::string& path,
                    const std::vector<std::pair<std::string, double>>& extras = {});

// Executes one configured run and writes its CSV outputs; returns the paths.
std::vector<std::string> execute_run(const RunConfig& cfg);

// Dispatches independent jobs to a small worker pool; the pool size comes
// from LOPWENO_WORKERS (default: hardware concurrency, at least 1).
void run_parallel(std::vector<std::function<void()>> jobs);
int worker_count();

const char* build_id();

}  // namespace lopweno

#endif  // LOPWENO_HARNESS_HPP_
