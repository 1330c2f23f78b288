#ifndef SERIATE_LINALG_HPP
#define SERIATE_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "seriate/matrix.hpp"

namespace seriate {

inline constexpr double kDefaultEigTol = 1e-13;
inline constexpr int kDefaultMaxSweeps = 100;
inline constexpr double kDefaultClusterTol = 1e-8;

struct SpectralDecomposition {
  Vector eigenvalues;  // ascending; ties keep the order produced by the sweep
  Matrix eigenvectors; // column j pairs with eigenvalues[j], orthonormal
};

struct FiedlerSpace {
  double value = 0.0;   // second-smallest Laplacian eigenvalue
  int multiplicity = 0; // dimension k of its eigenvalue cluster
  Matrix basis;         // n x k, orthonormal, each column orthogonal to the all-ones vector
};

// Row sums d_i = sum_j s_ij, returned as the diagonal of D.
Vector degree_vector(const SymMatrix& s);

// L = D - S. Row sums of L are exactly zero in floating point because the
// diagonal is assembled as the sum of the off-diagonal row entries.
SymMatrix laplacian(const SymMatrix& s);

// Cyclic Jacobi iteration. Stops when the off-diagonal Frobenius norm falls
// below tol * ||M||_F; throws NonConvergence after max_sweeps sweeps.
SpectralDecomposition symmetric_eig(const SymMatrix& m, double tol = kDefaultEigTol,
                                    int max_sweeps = kDefaultMaxSweeps);

// Eigenvalues of the circulant matrix with the given first column, by direct
// DFT summation: lambda_k = sum_j c_j w^{-kj}, w = exp(2 pi i / n). O(n^2),
// which is fine at the sizes this library handles.
std::vector<std::complex<double>> circulant_spectrum(const Vector& first_column);

// Fiedler value, its cluster multiplicity, and an orthonormal basis of the
// cluster's eigenspace. Eigenvalues within cluster_tol * max(1, |lambda_2|)
// of lambda_2 form the cluster. Throws DisconnectedGraph when lambda_2 is
// itself within cluster_tol of zero.
FiedlerSpace fiedler_space(const SymMatrix& laplacian, double cluster_tol = kDefaultClusterTol);

// 1/2 * sum_ij f_ij (x_i - x_j)^2, the quadratic form x^T L x written as the
// weighted sum the seriation literature minimizes.
double seriation_objective(const SymMatrix& f, const Vector& x);

}  // namespace seriate

#endif
