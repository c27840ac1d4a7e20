#include "oracles.hpp"

#include <cmath>
#include <utility>

#include "errors.hpp"

namespace pdio {

namespace {

// w = xi1 + c (xi1 - xi2), written so that c = 0 reproduces xi1 bit for bit.
Vector state_blend(double c, const OracleState& state) {
  Vector w = state.xi1;
  if (c != 0.0) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] += c * (state.xi1[i] - state.xi2[i]);
    }
  }
  return w;
}

}  // namespace

OracleState oracle_init(const OracleParams&, const Vector& y0) {
  return OracleState{y0, y0};
}

Vector oracle_output(const OracleParams& params, const OracleState& state) {
  return state_blend(params.c3, state);
}

Vector oracle_feedback(const OracleParams& params, const OracleState& state) {
  return state_blend(params.c2, state);
}

OracleStep oracle_step(const OracleParams& params, OracleState& state,
                       const SmoothFunction& g, const Matrix& A, const Vector& x) {
  if (state.xi1.size() != state.xi2.size() || state.xi1.size() != g.dim() ||
      A.rows() != g.dim() || A.cols() != x.size()) {
    throw DimensionError("oracle_step: dimension mismatch");
  }
  const Vector v = oracle_feedback(params, state);
  const Vector ax = matvec(A, x);
  Vector d = g.gradient(v);
  d -= ax;  // grad g(v) - A x

  Vector xi1_next = state_blend(params.c1, state);
  for (std::size_t i = 0; i < xi1_next.size(); ++i) {
    xi1_next[i] -= params.eta2 * d[i];
  }
  state.xi2 = state.xi1;
  state.xi1 = std::move(xi1_next);

  OracleStep step;
  step.y = oracle_output(params, state);
  step.v = v;
  return step;
}

OracleParams gd_params(double mu_g, double beta_g) {
  if (!(0.0 < mu_g && mu_g <= beta_g)) {
    throw std::invalid_argument("gd_params: need 0 < mu_g <= beta_g");
  }
  return OracleParams{0.0, 0.0, 0.0, 2.0 / (mu_g + beta_g)};
}

OracleParams nesterov_params(double mu_g, double beta_g) {
  if (!(0.0 < mu_g && mu_g <= beta_g)) {
    throw std::invalid_argument("nesterov_params: need 0 < mu_g <= beta_g");
  }
  const double gamma = (std::sqrt(beta_g) - std::sqrt(mu_g)) /
                       (std::sqrt(beta_g) + std::sqrt(mu_g));
  return OracleParams{gamma, gamma, 0.0, 1.0 / beta_g};
}

OracleParams heavy_ball_params(double mu_g, double beta_g) {
  if (!(0.0 < mu_g && mu_g <= beta_g)) {
    throw std::invalid_argument("heavy_ball_params: need 0 < mu_g <= beta_g");
  }
  const double sm = std::sqrt(mu_g), sb = std::sqrt(beta_g);
  const double c1 = ((sb - sm) / (sb + sm)) * ((sb - sm) / (sb + sm));
  return OracleParams{c1, 0.0, 0.0, 4.0 / ((sm + sb) * (sm + sb))};
}

OracleParams heavy_ball_params_custom(double c1, double eta2) {
  if (!(eta2 > 0.0)) throw std::invalid_argument("heavy_ball_params_custom: eta2 > 0");
  return OracleParams{c1, 0.0, 0.0, eta2};
}

bool nesterov_admissible(double mu_g, double beta_g, double kappa_limit) {
  return beta_g / mu_g <= kappa_limit;
}

Vector exact_oracle(const QuadraticFunction& g, const Matrix& A, const Vector& x) {
  return conjugate_gradient(g, matvec(A, x));
}

std::vector<double> definition1_probe(const OracleParams& params,
                                      const QuadraticFunction& g, const Matrix& A,
                                      const std::vector<Vector>& x_seq,
                                      const Vector& y0) {
  OracleState state = oracle_init(params, y0);
  std::vector<double> errors;
  errors.reserve(x_seq.size());
  for (const Vector& x : x_seq) {
    const Vector y = oracle_output(params, state);
    errors.push_back(norm(y - exact_oracle(g, A, x)));
    oracle_step(params, state, g, A, x);
  }
  return errors;
}

}  // namespace pdio
