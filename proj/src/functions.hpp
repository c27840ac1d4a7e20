#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "linalg.hpp"

namespace pdio {

// A smooth convex function together with its declared strong-convexity
// modulus mu and smoothness constant beta (the class S(mu, beta)).  The
// constants are trusted metadata; only quadratics validate them against
// the actual spectrum.
class SmoothFunction {
 public:
  virtual ~SmoothFunction() = default;

  virtual double value(const Vector& x) const = 0;
  virtual Vector gradient(const Vector& x) const = 0;
  virtual std::size_t dim() const = 0;

  double mu() const { return mu_; }
  double beta() const { return beta_; }

 protected:
  SmoothFunction(double mu, double beta);

  // For subclasses that derive the constants from their own data.
  void set_constants(double mu, double beta);

 private:
  double mu_;
  double beta_;
};

// x -> 1/2 x^T Q x + q^T x + c with symmetric Q.  The (mu, beta) constants
// are the extreme eigenvalues of Q.
class QuadraticFunction final : public SmoothFunction {
 public:
  QuadraticFunction(Matrix Q, Vector q, double c = 0.0);

  double value(const Vector& x) const override;
  Vector gradient(const Vector& x) const override;
  std::size_t dim() const override { return q_.size(); }

  const Matrix& Q() const { return Q_; }
  const Vector& q() const { return q_; }
  double c() const { return c_; }

  // Lower Cholesky factor of Q; present only when Q > 0.
  const std::optional<Matrix>& chol() const { return chol_; }

 private:
  Matrix Q_;
  Vector q_;
  double c_;
  std::optional<Matrix> chol_;
};

// x -> b^T x + c; gradient is constant, so mu = beta = 0.
class LinearFunction final : public SmoothFunction {
 public:
  explicit LinearFunction(Vector b, double c = 0.0);

  double value(const Vector& x) const override { return dot(b_, x) + c_; }
  Vector gradient(const Vector&) const override { return b_; }
  std::size_t dim() const override { return b_.size(); }

  const Vector& b() const { return b_; }

 private:
  Vector b_;
  double c_;
};

// User-supplied callbacks with declared constants.
class CustomFunction final : public SmoothFunction {
 public:
  CustomFunction(std::size_t dim, double mu, double beta,
                 std::function<double(const Vector&)> value,
                 std::function<Vector(const Vector&)> gradient);

  double value(const Vector& x) const override { return value_(x); }
  Vector gradient(const Vector& x) const override { return gradient_(x); }
  std::size_t dim() const override { return dim_; }

 private:
  std::size_t dim_;
  std::function<double(const Vector&)> value_;
  std::function<Vector(const Vector&)> gradient_;
};

// A candidate (input difference, gradient difference) pair.
struct SectorPair {
  Vector u;
  Vector y;
};

// True iff (u, y) satisfies the Sector(mu, beta) quadratic inequality
//   -2 mu beta |u|^2 + 2 (mu+beta) u^T y - 2 |y|^2 >= 0
// up to a relative slack of 1e-12 (|u|^2 + |y|^2).
bool sector_check(double mu, double beta, const SectorPair& pair);

// Gradient of the convex conjugate of a strongly convex quadratic:
// returns y = Q^{-1}(s - q), i.e. the unique y with grad g(y) = s.
Vector conjugate_gradient(const QuadraticFunction& g, const Vector& s);

// Max relative component error between the analytic gradient and a
// central-difference estimate with step h.
double grad_check(const SmoothFunction& fun, const Vector& x, double h);

}  // namespace pdio
