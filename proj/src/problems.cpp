#include "problems.hpp"

#include <cmath>
#include <utility>

#include "errors.hpp"
#include "rng.hpp"

namespace pdio {

MinimaxProblem::MinimaxProblem(std::shared_ptr<const SmoothFunction> f,
                               std::shared_ptr<const SmoothFunction> g, Matrix A)
    : f_(std::move(f)), g_(std::move(g)), A_(std::move(A)) {
  if (!f_ || !g_) throw std::invalid_argument("MinimaxProblem: null function");
  if (f_->dim() != A_.cols() || g_->dim() != A_.rows()) {
    throw DimensionError("MinimaxProblem: A must be m x n with f on R^n, g on R^m");
  }
  if (!(g_->mu() > 0.0)) {
    throw std::invalid_argument("MinimaxProblem: g must be strongly convex (mu_g > 0)");
  }
  sigma_ = singular_extremes(A_);
  if (sigma_.sigma_min <= 1e-10 * sigma_.sigma_max || sigma_.sigma_max == 0.0) {
    throw RankDeficientError("MinimaxProblem: A must have full column rank");
  }
}

const QuadraticFunction* MinimaxProblem::g_quadratic() const {
  return dynamic_cast<const QuadraticFunction*>(g_.get());
}

const QuadraticFunction* MinimaxProblem::f_quadratic() const {
  return dynamic_cast<const QuadraticFunction*>(f_.get());
}

const LinearFunction* MinimaxProblem::f_linear() const {
  return dynamic_cast<const LinearFunction*>(f_.get());
}

ProblemConstants derive_constants(const MinimaxProblem& prob) {
  ProblemConstants c;
  c.mu_g = prob.g().mu();
  c.beta_g = prob.g().beta();
  c.beta_f = prob.f().beta();
  c.sigma_min = prob.sigma().sigma_min;
  c.sigma_max = prob.sigma().sigma_max;
  c.mu_p = c.sigma_min * c.sigma_min / c.beta_g;
  c.beta_p = c.sigma_max * c.sigma_max / c.mu_g + c.beta_f;
  c.alpha_p = c.mu_p * c.beta_p / (c.mu_p + c.beta_p);
  c.alpha_g = c.mu_g * c.beta_g / (c.mu_g + c.beta_g);
  c.beta_psi = c.sigma_max / c.mu_g;
  return c;
}

namespace {

const QuadraticFunction& require_quadratic_g(const MinimaxProblem& prob,
                                             const char* who) {
  const QuadraticFunction* gq = prob.g_quadratic();
  if (!gq) {
    throw std::invalid_argument(std::string(who) +
                                ": exact oracle unavailable, g is not quadratic");
  }
  return *gq;
}

}  // namespace

Vector phi_map(const MinimaxProblem& prob, const Vector& x) {
  const QuadraticFunction& gq = require_quadratic_g(prob, "phi_map");
  return conjugate_gradient(gq, matvec(prob.A(), x));
}

Vector primal_gradient(const MinimaxProblem& prob, const Vector& x) {
  return prob.f().gradient(x) + tmatvec(prob.A(), phi_map(prob, x));
}

double primal_value(const MinimaxProblem& prob, const Vector& x) {
  const QuadraticFunction& gq = require_quadratic_g(prob, "primal_value");
  const Vector s = matvec(prob.A(), x);
  const Vector y = conjugate_gradient(gq, s);
  // g*(s) = s^T y - g(y) at the maximizer y.
  return prob.f().value(x) + dot(s, y) - gq.value(y);
}

SaddlePoint saddle_point(const MinimaxProblem& prob) {
  const QuadraticFunction& gq = require_quadratic_g(prob, "saddle_point");

  Matrix Qf;
  Vector qf;
  if (const QuadraticFunction* fq = prob.f_quadratic()) {
    Qf = fq->Q();
    qf = fq->q();
  } else if (const LinearFunction* fl = prob.f_linear()) {
    Qf = Matrix(prob.n(), prob.n());
    qf = fl->b();
  } else {
    throw std::invalid_argument(
        "saddle_point: closed form needs quadratic g and linear/quadratic f");
  }

  // Schur complement in x:  (Qf + A^T Qg^{-1} A) x = A^T Qg^{-1} q_g - q_f.
  const Matrix& L = *gq.chol();
  const std::size_t n = prob.n(), m = prob.m();
  Matrix X(m, n);  // X = L^{-1} A, column by column
  for (std::size_t j = 0; j < n; ++j) {
    Vector col(m);
    for (std::size_t i = 0; i < m; ++i) col[i] = prob.A()(i, j);
    const Vector z = forward_substitute(L, col);
    for (std::size_t i = 0; i < m; ++i) X(i, j) = z[i];
  }
  Matrix S = Qf;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t r = 0; r < m; ++r) s += X(r, i) * X(r, j);
      S(i, j) += s;
    }
  const Vector rhs = tmatvec(X, forward_substitute(L, gq.q())) - qf;

  SaddlePoint sp;
  sp.x_star = solve_spd(S, rhs);
  sp.y_star = conjugate_gradient(gq, matvec(prob.A(), sp.x_star));

  const double res = saddle_residual(prob, sp.x_star, sp.y_star);
  const double scale = 1.0 + norm(sp.x_star) + norm(sp.y_star);
  if (!(res <= 1e-10 * scale)) {
    throw NoConvergence("saddle_point: residual above tolerance");
  }
  return sp;
}

double saddle_residual(const MinimaxProblem& prob, const Vector& x, const Vector& y) {
  const Vector gx = prob.f().gradient(x) + tmatvec(prob.A(), y);
  const Vector gy = matvec(prob.A(), x) - prob.g().gradient(y);
  return norm(gx) + norm(gy);
}

MinimaxProblem random_quadratic_instance(std::size_t n, std::size_t m, double kappa,
                                         std::uint64_t seed) {
  if (n < 1 || m < n) {
    throw std::invalid_argument("random_quadratic_instance: need m >= n >= 1");
  }
  if (!(kappa >= 1.0)) {
    throw std::invalid_argument("random_quadratic_instance: need kappa >= 1");
  }
  if (kappa > 1.0 && m < 2) {
    throw std::invalid_argument(
        "random_quadratic_instance: m >= 2 required to span [1, kappa]");
  }
  Rng rng(seed);

  // Hessian of g by eigen-synthesis: eigenvalues log-spaced on [1, kappa].
  Matrix G(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) G(i, j) = rng.normal();
  const Matrix V = orthonormal_columns(G);
  Vector lam(m, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    lam[i] = (m == 1) ? 1.0 : std::pow(kappa, static_cast<double>(i) / (m - 1));
  }
  Matrix Q(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < m; ++k) s += V(i, k) * lam[k] * V(j, k);
      Q(i, j) = Q(j, i) = s;
    }

  Vector qg(m);
  for (std::size_t i = 0; i < m; ++i) qg[i] = rng.normal();

  // A = U diag(s) W^T with singular values log-spaced on [1, 1.2]; the mild
  // spread keeps instances well inside the regime where the accelerated
  // oracle helps (see README).
  constexpr double kSigmaSpread = 1.2;
  Matrix GU(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) GU(i, j) = rng.normal();
  const Matrix U = orthonormal_columns(GU);
  Matrix GW(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) GW(i, j) = rng.normal();
  const Matrix W = orthonormal_columns(GW);
  Vector sv(n, 1.0);
  for (std::size_t j = 0; j < n; ++j) {
    sv[j] = (n == 1) ? 1.0 : std::pow(kSigmaSpread, static_cast<double>(j) / (n - 1));
  }
  Matrix A(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += U(i, k) * sv[k] * W(j, k);
      A(i, j) = s;
    }

  Vector b(n);
  for (std::size_t j = 0; j < n; ++j) b[j] = rng.normal();

  MinimaxProblem prob(std::make_shared<LinearFunction>(std::move(b)),
                      std::make_shared<QuadraticFunction>(std::move(Q), std::move(qg)),
                      std::move(A));
  prob.seed = seed;
  return prob;
}

MinimaxProblem equality_constrained_builder(std::shared_ptr<const SmoothFunction> g,
                                            Matrix A, Vector b, double eta1) {
  return equality_constrained_builder(std::move(g), std::move(A), std::move(b), eta1,
                                      eta1);
}

MinimaxProblem equality_constrained_builder(std::shared_ptr<const SmoothFunction> g,
                                            Matrix A, Vector b, double eta1,
                                            double penalty_weight) {
  if (!(eta1 > 0.0) || !(penalty_weight > 0.0)) {
    throw std::invalid_argument("equality_constrained_builder: weights must be > 0");
  }
  if (!g) throw std::invalid_argument("equality_constrained_builder: null g");
  if (g->dim() != A.rows() || b.size() != A.cols()) {
    throw DimensionError("equality_constrained_builder: dimension mismatch");
  }
  const std::size_t m = A.rows(), n = A.cols();
  const double w = penalty_weight;

  std::shared_ptr<const SmoothFunction> g_tilde;
  if (const auto* gq = dynamic_cast<const QuadraticFunction*>(g.get())) {
    // Quadratic penalty folds into the quadratic data:
    //   Q~ = Q + w A A^T,  q~ = q - w A b,  c~ = c + (w/2) |b|^2.
    Matrix Qt = gq->Q();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += A(i, k) * A(j, k);
        Qt(i, j) += w * s;
        if (i != j) Qt(j, i) = Qt(i, j);
      }
    Vector qt = gq->q() - w * matvec(A, b);
    const double ct = gq->c() + 0.5 * w * dot(b, b);
    g_tilde = std::make_shared<QuadraticFunction>(std::move(Qt), std::move(qt), ct);
  } else {
    const double smax = singular_extremes(A).sigma_max;
    const double mu_t = g->mu();  // penalty only adds curvature
    const double beta_t = g->beta() + w * smax * smax;
    Matrix Acopy = A;
    Vector bcopy = b;
    auto base = g;
    g_tilde = std::make_shared<CustomFunction>(
        m, mu_t, beta_t,
        [base, Acopy, bcopy, w](const Vector& y) {
          const Vector r = tmatvec(Acopy, y) - bcopy;
          return base->value(y) + 0.5 * w * dot(r, r);
        },
        [base, Acopy, bcopy, w](const Vector& y) {
          const Vector r = tmatvec(Acopy, y) - bcopy;
          return base->gradient(y) + w * matvec(Acopy, r);
        });
  }

  auto f = std::make_shared<LinearFunction>(-b);
  return MinimaxProblem(std::move(f), std::move(g_tilde), std::move(A));
}

}  // namespace pdio
