#include "functions.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "errors.hpp"

namespace pdio {

SmoothFunction::SmoothFunction(double mu, double beta) : mu_(mu), beta_(beta) {
  set_constants(mu, beta);
}

void SmoothFunction::set_constants(double mu, double beta) {
  if (!(mu >= 0.0) || !(beta >= mu) || !std::isfinite(beta)) {
    throw std::invalid_argument("SmoothFunction: need 0 <= mu <= beta < inf");
  }
  mu_ = mu;
  beta_ = beta;
}

QuadraticFunction::QuadraticFunction(Matrix Q, Vector q, double c)
    : SmoothFunction(0.0, 0.0), Q_(std::move(Q)), q_(std::move(q)), c_(c) {
  if (Q_.rows() != Q_.cols() || Q_.rows() != q_.size()) {
    throw DimensionError("QuadraticFunction: Q must be square and match q");
  }
  if (!is_symmetric(Q_)) {
    throw std::invalid_argument("QuadraticFunction: Q must be symmetric");
  }
  const SymmetricEigen eig = jacobi_eigen(Q_);
  const double lo = eig.values[0];
  const double hi = eig.values[Q_.rows() - 1];
  if (lo < -1e-10 * std::max(std::abs(hi), 1.0)) {
    throw std::invalid_argument("QuadraticFunction: Q must be positive semidefinite");
  }
  set_constants(std::max(lo, 0.0), std::max(hi, 0.0));
  if (lo > 0.0) chol_ = cholesky(Q_);
}

double QuadraticFunction::value(const Vector& x) const {
  return 0.5 * dot(x, matvec(Q_, x)) + dot(q_, x) + c_;
}

Vector QuadraticFunction::gradient(const Vector& x) const {
  Vector g = matvec(Q_, x);
  g += q_;
  return g;
}

LinearFunction::LinearFunction(Vector b, double c)
    : SmoothFunction(0.0, 0.0), b_(std::move(b)), c_(c) {}

CustomFunction::CustomFunction(std::size_t dim, double mu, double beta,
                               std::function<double(const Vector&)> value,
                               std::function<Vector(const Vector&)> gradient)
    : SmoothFunction(mu, beta),
      dim_(dim),
      value_(std::move(value)),
      gradient_(std::move(gradient)) {}

bool sector_check(double mu, double beta, const SectorPair& pair) {
  if (!(0.0 <= mu && mu <= beta)) {
    throw std::invalid_argument("sector_check: need 0 <= mu <= beta");
  }
  if (pair.u.size() != pair.y.size()) {
    throw DimensionError("sector_check: pair dimensions differ");
  }
  const double uu = dot(pair.u, pair.u);
  const double yy = dot(pair.y, pair.y);
  const double uy = dot(pair.u, pair.y);
  const double form = -2.0 * mu * beta * uu + 2.0 * (mu + beta) * uy - 2.0 * yy;
  return form >= -1e-12 * (uu + yy);
}

Vector conjugate_gradient(const QuadraticFunction& g, const Vector& s) {
  if (s.size() != g.dim()) {
    throw DimensionError("conjugate_gradient: dimension mismatch");
  }
  if (!g.chol()) {
    throw NotPositiveDefinite("conjugate_gradient: Q is singular");
  }
  return backward_substitute(*g.chol(), forward_substitute(*g.chol(), s - g.q()));
}

double grad_check(const SmoothFunction& fun, const Vector& x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("grad_check: h must be positive");
  const Vector analytic = fun.gradient(x);
  double worst = 0.0;
  Vector xp = x, xm = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xp[i] = x[i] + h;
    xm[i] = x[i] - h;
    const double fd = (fun.value(xp) - fun.value(xm)) / (2.0 * h);
    xp[i] = x[i];
    xm[i] = x[i];
    const double denom = std::max({1.0, std::abs(analytic[i]), std::abs(fd)});
    worst = std::max(worst, std::abs(fd - analytic[i]) / denom);
  }
  return worst;
}

}  // namespace pdio
