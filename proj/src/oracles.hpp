#pragma once

#include <vector>

#include "functions.hpp"
#include "linalg.hpp"

namespace pdio {

// Parameters of the first-order state-space family
//   xi1+ = (1+c1) xi1 - c1 xi2 - eta2 (grad g(v) - A x)
//   xi2+ = xi1
//   v    = (1+c2) xi1 - c2 xi2        (feedback point)
//   y    = (1+c3) xi1 - c3 xi2        (oracle output)
// c1 = c2 = c3 = 0 is plain gradient descent; c1 = c2 != 0, c3 = 0 is
// Nesterov's accelerated method; c1 != 0, c2 = c3 = 0 is heavy ball.
struct OracleParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double eta2 = 1.0;
};

struct OracleState {
  Vector xi1;
  Vector xi2;
};

// One oracle transition: y is the output at the new state, v the feedback
// point the gradient was evaluated at.
struct OracleStep {
  Vector y;
  Vector v;
};

// Initializes xi1 = xi2 = y0 so the first output equals y0 for any
// parameters.
OracleState oracle_init(const OracleParams& params, const Vector& y0);

// Output y = (1+c3) xi1 - c3 xi2 of the current state.
Vector oracle_output(const OracleParams& params, const OracleState& state);

// Feedback point v = (1+c2) xi1 - c2 xi2 of the current state.
Vector oracle_feedback(const OracleParams& params, const OracleState& state);

// Advances the state by one step driven by input x.
OracleStep oracle_step(const OracleParams& params, OracleState& state,
                       const SmoothFunction& g, const Matrix& A, const Vector& x);

// Plain gradient descent with the largest admissible step 2/(mu_g+beta_g).
OracleParams gd_params(double mu_g, double beta_g);

// Nesterov's accelerated method: c1 = c2 = (sqrt(beta)-sqrt(mu))/(sqrt(beta)+sqrt(mu)),
// eta2 = 1/beta_g.
OracleParams nesterov_params(double mu_g, double beta_g);

// Classical heavy-ball tuning; no convergence guarantee is claimed for the
// composed method (see certify_assumption2_quadratic).
OracleParams heavy_ball_params(double mu_g, double beta_g);
// Fully caller-chosen heavy-ball coefficients.
OracleParams heavy_ball_params_custom(double c1, double eta2);

// Advisory admissibility gate for the Nesterov preset; the composed method
// is only certified for small condition numbers.
bool nesterov_admissible(double mu_g, double beta_g, double kappa_limit = 10.0);

// phi(x) = grad g*(A x), the exact inner maximizer.
Vector exact_oracle(const QuadraticFunction& g, const Matrix& A, const Vector& x);

// Runs the oracle along an input sequence and returns |y^k - phi(x^k)| for
// each k (the output error against the exact oracle).  Quadratic g only.
std::vector<double> definition1_probe(const OracleParams& params,
                                      const QuadraticFunction& g, const Matrix& A,
                                      const std::vector<Vector>& x_seq,
                                      const Vector& y0);

}  // namespace pdio
