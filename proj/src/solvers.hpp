#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "problems.hpp"

namespace pdio {

struct SolverConfig {
  int max_iters = 1000;
  double tol = 1e-10;  // stop when |grad f + A^T y| + |A x - grad g(y)| <= tol
  Vector x0;           // empty -> zeros
  Vector y0;           // empty -> zeros
  // Used for the distance columns when the saddle point has no closed form.
  std::optional<SaddlePoint> known_saddle;
};

enum class TerminalStatus { kConverged, kMaxIters, kDiverged };

// Per-iteration record of a solver run.  dist_* and err_e are NaN when the
// saddle point resp. the exact inner map are unavailable.
struct SolverTrace {
  std::vector<Vector> xs;
  std::vector<Vector> ys;
  std::vector<double> dist_x;
  std::vector<double> dist_y;
  std::vector<double> err_e;    // |y^k - phi(x^k)|
  std::vector<double> residual; // saddle residual at (x^k, y^k)
  TerminalStatus status = TerminalStatus::kMaxIters;
  std::vector<std::string> warnings;

  std::size_t iterations() const { return xs.empty() ? 0 : xs.size() - 1; }
};

struct RateEstimate {
  double rho = 0.0;
  double fit_residual = 0.0;
  std::size_t window_begin = 0;
  std::size_t window_end = 0;
};

// Primal-dual gradient method: simultaneous updates
//   x+ = x - eta1 (grad f(x) + A^T y),   y+ = y + eta2 (A x - grad g(y)).
SolverTrace pdgm_run(const MinimaxProblem& prob, double eta1, double eta2,
                     const SolverConfig& cfg);

// Exact primal gradient method: y^k = phi(x^k) in closed form (quadratic g),
// then x+ = x - eta1 (grad f(x) + A^T y^k).  err_e is identically zero.
SolverTrace exact_gradient_run(const MinimaxProblem& prob, double eta1,
                               const SolverConfig& cfg);

// Inexact gradient method driven by a dynamic oracle: the x-update reads the
// oracle output y^k, and the oracle then consumes x^k (both updates see the
// k-th iterates, matching the simultaneous PDGM ordering).
SolverTrace inexact_gradient_run(const MinimaxProblem& prob, double eta1,
                                 const OracleParams& oracle, const SolverConfig& cfg);

// Least-squares slope of log dist_x over the tail window (last half of the
// iterations above the 1e-12 floor); rho = exp(slope).
RateEstimate fit_rate(const SolverTrace& trace);

// Same fit applied to an arbitrary nonnegative series.
RateEstimate fit_rate_series(const std::vector<double>& series);

}  // namespace pdio
