#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace pdio {

// Dense column vector of doubles.  Dimension is fixed per instance.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n, double fill = 0.0) : data_(n, fill) {}
  Vector(std::initializer_list<double> xs) : data_(xs) {}

  static Vector zeros(std::size_t n) { return Vector(n); }

  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  Vector& operator*=(double s);

 private:
  std::vector<double> data_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(double s, Vector a);
Vector operator-(Vector a);

double dot(const Vector& a, const Vector& b);
double norm(const Vector& v);

// Dense row-major matrix.  Dimensions are fixed per instance.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  Matrix transpose() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(double s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(double s, Matrix a);

// y = M v.
Vector matvec(const Matrix& M, const Vector& v);
// y = M^T v without forming the transpose.
Vector tmatvec(const Matrix& M, const Vector& v);
Matrix matmul(const Matrix& A, const Matrix& B);

double frobenius_norm(const Matrix& M);
bool is_symmetric(const Matrix& M, double rel_tol = 1e-8);

struct SingularExtremes {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
};

// Extreme singular values via a symmetric eigen-decomposition of the
// smaller Gram matrix (A^T A or A A^T).
SingularExtremes singular_extremes(const Matrix& A);

// Largest eigenvalue modulus of a square matrix.  Symmetric input goes
// through Jacobi; 1x1/2x2 use closed forms; everything else uses a
// Hessenberg reduction followed by shifted complex QR with deflation.
// `tol` is the relative deflation threshold of the QR sweep.
double spectral_radius(const Matrix& M, double tol = 1e-12);

// All eigenvalues of a general square real matrix.
std::vector<std::complex<double>> eigenvalues(const Matrix& M, double tol = 1e-12);

struct SymmetricEigen {
  Vector values;    // ascending
  Matrix vectors;   // columns are the matching eigenvectors
};

// Cyclic Jacobi rotations; converges when the off-diagonal Frobenius norm
// drops below `tol` relative to the matrix norm.
SymmetricEigen jacobi_eigen(const Matrix& S, double tol = 1e-12);

// Lower Cholesky factor of a symmetric matrix, or nullopt when the matrix
// is not positive definite (the failure doubles as the P > 0 test).
std::optional<Matrix> cholesky(const Matrix& P);

// Solves P x = b for symmetric positive definite P; throws
// NotPositiveDefinite otherwise.
Vector solve_spd(const Matrix& P, const Vector& b);

// Triangular solves against a lower Cholesky factor L (i.e. applications
// of (L L^T)^{-1} pieces).
Vector forward_substitute(const Matrix& L, const Vector& b);   // L z = b
Vector backward_substitute(const Matrix& L, const Vector& z);  // L^T x = z

// Orthonormalizes the columns of G (twice-through modified Gram-Schmidt).
Matrix orthonormal_columns(const Matrix& G);

}  // namespace pdio
