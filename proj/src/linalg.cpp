#include "seriate/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "seriate/errors.hpp"

namespace seriate {

Vector degree_vector(const SymMatrix& s) {
  const std::size_t n = s.order();
  Vector d(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += s(i, j);
    d[i] = sum;
  }
  return d;
}

SymMatrix laplacian(const SymMatrix& s) {
  const std::size_t n = s.order();
  SymMatrix l(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Accumulate the off-diagonal row sum separately so that the row of L
    // sums to exactly zero: l_ii is defined as that sum, and the entries
    // subtracted are the same doubles.
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      off += s(i, j);
      if (j > i) l.set(i, j, -s(i, j));
    }
    l.set(i, i, off);
  }
  return l;
}

namespace {

double offdiag_norm(const Matrix& a) {
  const std::size_t n = a.rows();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

SpectralDecomposition symmetric_eig(const SymMatrix& m, double tol, int max_sweeps) {
  const std::size_t n = m.order();
  if (n == 0) throw BadParameter("empty matrix");
  Matrix a = m.to_matrix();
  Matrix v = Matrix::identity(n);
  const double target = tol * std::max(m.frobenius_norm(), 1e-300);

  int sweep = 0;
  while (offdiag_norm(a) > target) {
    if (sweep++ >= max_sweeps) throw NonConvergence("Jacobi sweep limit reached");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        // Smaller-angle root of t^2 + 2 theta t - 1 = 0 keeps the rotation stable.
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  // Ascending eigenvalue order; equal values keep their column order so the
  // result is deterministic.
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(idx[j], idx[j]);
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, idx[j]);
  }
  return out;
}

std::vector<std::complex<double>> circulant_spectrum(const Vector& c) {
  const std::size_t n = c.size();
  if (n == 0) throw BadParameter("empty first column");
  std::vector<std::complex<double>> lam(n);
  const double step = 2.0 * M_PI / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double ang = -step * static_cast<double>(k) * static_cast<double>(j);
      sum += c[j] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    lam[k] = sum;
  }
  return lam;
}

namespace {

double dot(const Vector& x, const Vector& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm(const Vector& x) { return std::sqrt(dot(x, x)); }

}  // namespace

FiedlerSpace fiedler_space(const SymMatrix& l, double cluster_tol) {
  const std::size_t n = l.order();
  if (n < 2) throw BadParameter("Laplacian must have order >= 2");
  if (cluster_tol <= 0.0) throw BadParameter("cluster_tol must be positive");

  const SpectralDecomposition eig = symmetric_eig(l);
  const double lambda2 = eig.eigenvalues[1];
  if (lambda2 <= cluster_tol) throw DisconnectedGraph("second eigenvalue is numerically zero");

  const double band = cluster_tol * std::max(1.0, std::abs(lambda2));
  std::size_t hi = 2;
  while (hi < n && std::abs(eig.eigenvalues[hi] - lambda2) <= band) ++hi;
  const std::size_t k = hi - 1;

  // Columns for the cluster, re-orthonormalized by modified Gram-Schmidt.
  // Jacobi already returns near-orthonormal vectors; this pass tightens the
  // basis after clustering possibly reordered nearly equal eigenvalues.
  std::vector<Vector> q;
  q.reserve(k);
  for (std::size_t j = 1; j <= k; ++j) {
    Vector col = eig.eigenvectors.col(j);
    for (const Vector& prev : q) {
      const double r = dot(prev, col);
      for (std::size_t i = 0; i < n; ++i) col[i] -= r * prev[i];
    }
    const double nn = norm(col);
    if (nn == 0.0) throw DegenerateBasis("cluster eigenvectors are linearly dependent");
    for (double& x : col) x /= nn;
    q.push_back(std::move(col));
  }

  // Remove any residual component along the all-ones kernel vector and
  // renormalize. The component is O(eig tol), so orthonormality of the
  // basis is preserved to the documented tolerance.
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  for (Vector& col : q) {
    double r = 0.0;
    for (double x : col) r += x * inv_sqrt_n;
    for (double& x : col) x -= r * inv_sqrt_n;
    const double nn = norm(col);
    if (nn == 0.0) throw DegenerateBasis("cluster eigenvector lies in the kernel");
    for (double& x : col) x /= nn;
  }

  FiedlerSpace fs;
  fs.value = lambda2;
  fs.multiplicity = static_cast<int>(k);
  fs.basis = Matrix(n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) fs.basis(i, j) = q[j][i];
  return fs;
}

double seriation_objective(const SymMatrix& f, const Vector& x) {
  const std::size_t n = f.order();
  if (x.size() != n) throw DimensionMismatch("vector length does not match matrix order");
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double d = x[i] - x[j];
      s += f(i, j) * d * d;
    }
  return 0.5 * s;
}

}  // namespace seriate
