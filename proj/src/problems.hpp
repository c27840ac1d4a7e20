#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "functions.hpp"
#include "linalg.hpp"

namespace pdio {

// The smooth convex-concave model
//   min_x max_y  f(x) + y^T A x - g(y)
// with f in S(0, beta_f), g in S(mu_g, beta_g), mu_g > 0, and A of full
// column rank.  Immutable after construction.
class MinimaxProblem {
 public:
  MinimaxProblem(std::shared_ptr<const SmoothFunction> f,
                 std::shared_ptr<const SmoothFunction> g, Matrix A);

  const SmoothFunction& f() const { return *f_; }
  const SmoothFunction& g() const { return *g_; }
  const std::shared_ptr<const SmoothFunction>& f_ptr() const { return f_; }
  const std::shared_ptr<const SmoothFunction>& g_ptr() const { return g_; }
  const Matrix& A() const { return A_; }

  std::size_t n() const { return A_.cols(); }
  std::size_t m() const { return A_.rows(); }

  const SingularExtremes& sigma() const { return sigma_; }

  // Non-null when g (resp. f) is quadratic; f_linear when f is linear.
  const QuadraticFunction* g_quadratic() const;
  const QuadraticFunction* f_quadratic() const;
  const LinearFunction* f_linear() const;

  // Generator seed when the instance came from random_quadratic_instance.
  std::uint64_t seed = 0;

 private:
  std::shared_ptr<const SmoothFunction> f_;
  std::shared_ptr<const SmoothFunction> g_;
  Matrix A_;
  SingularExtremes sigma_;
};

// Constants of the induced primal problem p(x) = f(x) + g*(Ax):
//   mu_p = sigma_min^2 / beta_g,  beta_p = sigma_max^2 / mu_g + beta_f,
//   alpha = mu beta / (mu + beta) for both p and g,  beta_psi = sigma_max / mu_g.
struct ProblemConstants {
  double mu_g = 0.0;
  double beta_g = 0.0;
  double beta_f = 0.0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double mu_p = 0.0;
  double beta_p = 0.0;
  double alpha_p = 0.0;
  double alpha_g = 0.0;
  double beta_psi = 0.0;
};

ProblemConstants derive_constants(const MinimaxProblem& prob);

struct SaddlePoint {
  Vector x_star;
  Vector y_star;
};

// The exact inner maximizer y = grad g*(A x); quadratic g only.
Vector phi_map(const MinimaxProblem& prob, const Vector& x);

// grad p(x) = grad f(x) + A^T phi(x); quadratic g only.
Vector primal_gradient(const MinimaxProblem& prob, const Vector& x);

// p(x) = f(x) + g*(Ax); quadratic g only.
double primal_value(const MinimaxProblem& prob, const Vector& x);

// Closed-form saddle point for quadratic g and linear/quadratic f, via a
// Cholesky solve of the Schur complement Qf + A^T Qg^{-1} A.
SaddlePoint saddle_point(const MinimaxProblem& prob);

// Residual |grad f(x) + A^T y| + |A x - grad g(y)| of the optimality system.
double saddle_residual(const MinimaxProblem& prob, const Vector& x, const Vector& y);

// Deterministic random instance: g quadratic with Hessian eigenvalues
// log-spaced on [1, kappa] (so mu_g = 1, beta_g = kappa), f linear with a
// standard normal coefficient, and A synthesized with singular values
// log-spaced on [1, 1.2].  Requires m >= n >= 1 and m >= 2 when kappa > 1.
MinimaxProblem random_quadratic_instance(std::size_t n, std::size_t m, double kappa,
                                         std::uint64_t seed);

// The minimax problem whose dual is the equality-constrained program
//   max -g(y)  s.t.  A^T y = b,
// built as f(x) = -b^T x and g~(y) = g(y) + (w/2) |A^T y - b|^2.  The
// augmented-Lagrangian correspondence holds when the penalty weight w
// equals the primal step size eta1, which is the default.
MinimaxProblem equality_constrained_builder(std::shared_ptr<const SmoothFunction> g,
                                            Matrix A, Vector b, double eta1);
MinimaxProblem equality_constrained_builder(std::shared_ptr<const SmoothFunction> g,
                                            Matrix A, Vector b, double eta1,
                                            double penalty_weight);

}  // namespace pdio
