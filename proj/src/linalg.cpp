#include "linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>

#include "errors.hpp"

namespace pdio {

namespace {

void require_same_size(const Vector& a, const Vector& b, const char* who) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(who) + ": vector sizes differ");
  }
}

void require_square(const Matrix& M, const char* who) {
  if (M.rows() != M.cols() || M.rows() == 0) {
    throw DimensionError(std::string(who) + ": square matrix required");
  }
}

}  // namespace

Vector& Vector::operator+=(const Vector& rhs) {
  require_same_size(*this, rhs, "Vector::operator+=");
  for (std::size_t i = 0; i < size(); ++i) data_[i] += rhs[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  require_same_size(*this, rhs, "Vector::operator-=");
  for (std::size_t i = 0; i < size(); ++i) data_[i] -= rhs[i];
  return *this;
}

Vector& Vector::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator*(double s, Vector a) { return a *= s; }
Vector operator-(Vector a) { return a *= -1.0; }

double dot(const Vector& a, const Vector& b) {
  require_same_size(a, b, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vector& v) { return std::sqrt(dot(v, v)); }

Matrix Matrix::identity(std::size_t n) {
  Matrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
  return I;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix M(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("Matrix::from_rows: ragged rows");
    std::size_t j = 0;
    for (double x : row) M(i, j++) = x;
    ++i;
  }
  return M;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix M(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) M(i, i) = d[i];
  return M;
}

Matrix Matrix::transpose() const {
  Matrix T(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
  return T;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionError("Matrix::operator+=: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionError("Matrix::operator-=: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(double s, Matrix a) { return a *= s; }

Vector matvec(const Matrix& M, const Vector& v) {
  if (M.cols() != v.size()) throw DimensionError("matvec: dimension mismatch");
  Vector y(M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    double s = 0.0;
    const double* row = M.data() + i * M.cols();
    for (std::size_t j = 0; j < M.cols(); ++j) s += row[j] * v[j];
    y[i] = s;
  }
  return y;
}

Vector tmatvec(const Matrix& M, const Vector& v) {
  if (M.rows() != v.size()) throw DimensionError("tmatvec: dimension mismatch");
  Vector y(M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i) {
    const double* row = M.data() + i * M.cols();
    const double vi = v[i];
    for (std::size_t j = 0; j < M.cols(); ++j) y[j] += row[j] * vi;
  }
  return y;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
  if (A.cols() != B.rows()) throw DimensionError("matmul: dimension mismatch");
  Matrix C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t k = 0; k < A.cols(); ++k) {
      const double a = A(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) += a * B(k, j);
    }
  }
  return C;
}

double frobenius_norm(const Matrix& M) {
  double s = 0.0;
  for (std::size_t i = 0; i < M.rows() * M.cols(); ++i) s += M.data()[i] * M.data()[i];
  return std::sqrt(s);
}

bool is_symmetric(const Matrix& M, double rel_tol) {
  if (M.rows() != M.cols()) return false;
  double scale = 0.0;
  for (std::size_t i = 0; i < M.rows() * M.cols(); ++i) {
    scale = std::max(scale, std::abs(M.data()[i]));
  }
  if (scale == 0.0) return true;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = i + 1; j < M.cols(); ++j) {
      if (std::abs(M(i, j) - M(j, i)) > rel_tol * scale) return false;
    }
  }
  return true;
}

SymmetricEigen jacobi_eigen(const Matrix& S, double tol) {
  require_square(S, "jacobi_eigen");
  if (!is_symmetric(S)) throw DimensionError("jacobi_eigen: symmetric matrix required");
  const std::size_t n = S.rows();
  Matrix A = S;
  // Work on the symmetrized copy so tiny input asymmetry cannot drift.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (A(i, j) + A(j, i));
      A(i, j) = A(j, i) = avg;
    }
  Matrix V = Matrix::identity(n);
  const double fro = std::max(frobenius_norm(A), std::numeric_limits<double>::min());

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * A(p, q) * A(p, q);
    if (std::sqrt(off) <= tol * fro) break;
    if (sweep == max_sweeps - 1) {
      throw NoConvergence("jacobi_eigen: sweep cap reached");
    }

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const double app = A(p, p), aqq = A(q, q);
        A(p, p) = app - t * apq;
        A(q, q) = aqq + t * apq;
        A(p, q) = A(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = A(r, p), arq = A(r, q);
            A(r, p) = A(p, r) = c * arp - s * arq;
            A(r, q) = A(q, r) = s * arp + c * arq;
          }
          const double vrp = V(r, p), vrq = V(r, q);
          V(r, p) = c * vrp - s * vrq;
          V(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return A(a, a) < A(b, b); });

  SymmetricEigen out;
  out.values = Vector(n);
  out.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = A(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = V(i, order[j]);
  }
  return out;
}

SingularExtremes singular_extremes(const Matrix& A) {
  if (A.rows() == 0 || A.cols() == 0) {
    throw DimensionError("singular_extremes: empty matrix");
  }
  const bool tall = A.rows() >= A.cols();
  const std::size_t k = tall ? A.cols() : A.rows();
  Matrix gram(k, k);
  if (tall) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        double s = 0.0;
        for (std::size_t r = 0; r < A.rows(); ++r) s += A(r, i) * A(r, j);
        gram(i, j) = gram(j, i) = s;
      }
  } else {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        double s = 0.0;
        for (std::size_t c = 0; c < A.cols(); ++c) s += A(i, c) * A(j, c);
        gram(i, j) = gram(j, i) = s;
      }
  }
  const SymmetricEigen eig = jacobi_eigen(gram);
  SingularExtremes out;
  out.sigma_min = std::sqrt(std::max(eig.values[0], 0.0));
  out.sigma_max = std::sqrt(std::max(eig.values[k - 1], 0.0));
  return out;
}

namespace {

using Cplx = std::complex<double>;

// Parlett-Reinsch diagonal balancing (radix 2, similarity only); leaves the
// spectrum untouched while evening out badly scaled rows and columns.
void balance_in_place(std::vector<double>& a, std::size_t n) {
  for (int pass = 0; pass < 50; ++pass) {
    bool converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a[j * n + i]);
        r += std::abs(a[i * n + j]);
      }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      double g = r / 2.0;
      while (c < g) {
        f *= 2.0;
        c *= 4.0;
      }
      g = r * 2.0;
      while (c >= g) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * s && f != 1.0) {
        converged = false;
        const double inv = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] *= inv;
        for (std::size_t j = 0; j < n; ++j) a[j * n + i] *= f;
      }
    }
    if (converged) break;
  }
}

// Householder reduction of a real matrix to upper Hessenberg form.
void hessenberg_in_place(std::vector<double>& a, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm += a[i * n + k] * a[i * n + k];
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    const double x0 = a[(k + 1) * n + k];
    const double alpha = x0 >= 0.0 ? -xnorm : xnorm;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = a[i * n + k];
      if (i == k + 1) v[i] -= alpha;
      vnorm2 += v[i] * v[i];
    }
    if (vnorm2 == 0.0) continue;
    const double scale = 2.0 / vnorm2;
    // A <- (I - 2vv^T/(v^Tv)) A
    for (std::size_t j = k; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += v[i] * a[i * n + j];
      s *= scale;
      for (std::size_t i = k + 1; i < n; ++i) a[i * n + j] -= s * v[i];
    }
    // A <- A (I - 2vv^T/(v^Tv))
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += a[i * n + j] * v[j];
      s *= scale;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= s * v[j];
    }
  }
}

struct Givens {
  double c = 1.0;   // real by construction
  Cplx s = 0.0;
};

// Unitary [[c, s], [-conj(s), c]] with G [f; g] = [r; 0].
Givens make_givens(Cplx f, Cplx g, Cplx& r) {
  Givens G;
  const double af = std::abs(f), ag = std::abs(g);
  if (ag == 0.0) {
    G.c = 1.0;
    G.s = 0.0;
    r = f;
  } else if (af == 0.0) {
    G.c = 0.0;
    G.s = std::conj(g) / ag;
    r = ag;
  } else {
    const double d = std::hypot(af, ag);
    G.c = af / d;
    G.s = (f / af) * (std::conj(g) / d);
    r = (f / af) * d;
  }
  return G;
}

// Eigenvalues of a complex upper Hessenberg matrix via explicit shifted QR
// with deflation (Wilkinson shift, occasional exceptional shift).
std::vector<Cplx> hessenberg_qr_eigenvalues(std::vector<Cplx>& h, std::size_t n,
                                            double tol) {
  std::vector<Cplx> eig(n);
  const double eps = std::max(tol, std::numeric_limits<double>::epsilon());
  auto H = [&](std::size_t i, std::size_t j) -> Cplx& { return h[i * n + j]; };

  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
  int iters_here = 0;
  long total_iters = 0;
  const long cap = 200 * static_cast<long>(n);

  std::vector<Givens> rot(n);
  while (hi >= 0) {
    // Deflate along negligible subdiagonals.
    std::ptrdiff_t lo = hi;
    while (lo > 0) {
      const double sub = std::abs(H(lo, lo - 1));
      if (sub <= eps * (std::abs(H(lo - 1, lo - 1)) + std::abs(H(lo, lo)))) {
        H(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = H(hi, hi);
      --hi;
      iters_here = 0;
      continue;
    }
    if (lo == hi - 1) {
      // Trailing 2x2 block in closed form.
      const Cplx a = H(hi - 1, hi - 1), b = H(hi - 1, hi);
      const Cplx c = H(hi, hi - 1), d = H(hi, hi);
      const Cplx tr = a + d;
      const Cplx disc = std::sqrt(tr * tr - 4.0 * (a * d - b * c));
      eig[hi] = 0.5 * (tr + disc);
      eig[hi - 1] = 0.5 * (tr - disc);
      hi -= 2;
      iters_here = 0;
      continue;
    }

    if (++total_iters > cap) {
      throw NoConvergence("eigenvalues: QR iteration cap reached");
    }

    // Wilkinson shift from the trailing 2x2; exceptional shift on stall.
    Cplx shift;
    if (++iters_here % 16 == 0) {
      shift = H(hi, hi) + 0.75 * std::abs(H(hi, hi - 1));
    } else {
      const Cplx a = H(hi - 1, hi - 1), b = H(hi - 1, hi);
      const Cplx c = H(hi, hi - 1), d = H(hi, hi);
      const Cplx tr = a + d;
      const Cplx disc = std::sqrt(tr * tr - 4.0 * (a * d - b * c));
      const Cplx l1 = 0.5 * (tr + disc), l2 = 0.5 * (tr - disc);
      shift = std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
    }

    for (std::ptrdiff_t i = lo; i <= hi; ++i) H(i, i) -= shift;
    // QR factorization of the active block by Givens rotations...
    for (std::ptrdiff_t j = lo; j < hi; ++j) {
      Cplx r;
      rot[j] = make_givens(H(j, j), H(j + 1, j), r);
      H(j, j) = r;
      H(j + 1, j) = 0.0;
      for (std::ptrdiff_t k = j + 1; k <= hi; ++k) {
        const Cplx t1 = H(j, k), t2 = H(j + 1, k);
        H(j, k) = rot[j].c * t1 + rot[j].s * t2;
        H(j + 1, k) = -std::conj(rot[j].s) * t1 + rot[j].c * t2;
      }
    }
    // ...then form R Q and restore the shift.
    for (std::ptrdiff_t j = lo; j < hi; ++j) {
      for (std::ptrdiff_t i = lo; i <= std::min(j + 1, hi); ++i) {
        const Cplx t1 = H(i, j), t2 = H(i, j + 1);
        H(i, j) = rot[j].c * t1 + std::conj(rot[j].s) * t2;
        H(i, j + 1) = -rot[j].s * t1 + rot[j].c * t2;
      }
    }
    for (std::ptrdiff_t i = lo; i <= hi; ++i) H(i, i) += shift;
  }
  return eig;
}

}  // namespace

std::vector<std::complex<double>> eigenvalues(const Matrix& M, double tol) {
  require_square(M, "eigenvalues");
  const std::size_t n = M.rows();
  if (n == 1) return {Cplx(M(0, 0), 0.0)};
  if (n == 2) {
    const double tr = M(0, 0) + M(1, 1);
    const double det = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
    const double disc = tr * tr / 4.0 - det;
    if (disc >= 0.0) {
      const double root = std::sqrt(disc);
      return {Cplx(tr / 2.0 - root, 0.0), Cplx(tr / 2.0 + root, 0.0)};
    }
    const double imag = std::sqrt(-disc);
    return {Cplx(tr / 2.0, -imag), Cplx(tr / 2.0, imag)};
  }

  std::vector<double> a(M.data(), M.data() + n * n);
  balance_in_place(a, n);
  hessenberg_in_place(a, n);
  std::vector<Cplx> h(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h[i * n + j] = (i > j + 1) ? Cplx(0.0) : Cplx(a[i * n + j], 0.0);
  return hessenberg_qr_eigenvalues(h, n, tol);
}

double spectral_radius(const Matrix& M, double tol) {
  require_square(M, "spectral_radius");
  const std::size_t n = M.rows();
  if (n == 1) return std::abs(M(0, 0));
  if (n == 2) {
    const double tr = M(0, 0) + M(1, 1);
    const double det = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
    const double disc = tr * tr / 4.0 - det;
    if (disc >= 0.0) {
      const double root = std::sqrt(disc);
      return std::max(std::abs(tr / 2.0 - root), std::abs(tr / 2.0 + root));
    }
    return std::sqrt(det);  // complex pair, |lambda|^2 = det
  }
  if (is_symmetric(M, 1e-12)) {
    const SymmetricEigen eig = jacobi_eigen(M);
    return std::max(std::abs(eig.values[0]), std::abs(eig.values[n - 1]));
  }
  double r = 0.0;
  for (const Cplx& z : eigenvalues(M, tol)) r = std::max(r, std::abs(z));
  return r;
}

std::optional<Matrix> cholesky(const Matrix& P) {
  require_square(P, "cholesky");
  if (!is_symmetric(P)) throw DimensionError("cholesky: symmetric matrix required");
  const std::size_t n = P.rows();
  Matrix L(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = P(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
    if (d <= 0.0 || !std::isfinite(d)) return std::nullopt;
    L(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = P(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
      L(i, j) = s / L(j, j);
    }
  }
  return L;
}

Vector forward_substitute(const Matrix& L, const Vector& b) {
  const std::size_t n = L.rows();
  if (b.size() != n) throw DimensionError("forward_substitute: dimension mismatch");
  Vector z(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= L(i, k) * z[k];
    z[i] = s / L(i, i);
  }
  return z;
}

Vector backward_substitute(const Matrix& L, const Vector& z) {
  const std::size_t n = L.rows();
  if (z.size() != n) throw DimensionError("backward_substitute: dimension mismatch");
  Vector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = z[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= L(k, ii) * x[k];
    x[ii] = s / L(ii, ii);
  }
  return x;
}

Vector solve_spd(const Matrix& P, const Vector& b) {
  const auto L = cholesky(P);
  if (!L) throw NotPositiveDefinite("solve_spd: matrix is not positive definite");
  return backward_substitute(*L, forward_substitute(*L, b));
}

Matrix orthonormal_columns(const Matrix& G) {
  const std::size_t m = G.rows(), n = G.cols();
  if (n > m) throw DimensionError("orthonormal_columns: more columns than rows");
  Matrix Q = G;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        double proj = 0.0;
        for (std::size_t i = 0; i < m; ++i) proj += Q(i, k) * Q(i, j);
        for (std::size_t i = 0; i < m; ++i) Q(i, j) -= proj * Q(i, k);
      }
      double nrm = 0.0;
      for (std::size_t i = 0; i < m; ++i) nrm += Q(i, j) * Q(i, j);
      nrm = std::sqrt(nrm);
      if (nrm < 1e-200) throw NoConvergence("orthonormal_columns: degenerate column");
      for (std::size_t i = 0; i < m; ++i) Q(i, j) /= nrm;
    }
  }
  return Q;
}

}  // namespace pdio
