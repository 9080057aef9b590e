#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "posmap/matrix.hpp"

namespace posmap {

/// Ascending eigenvalues with orthonormal eigenvectors stored as columns.
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;

  ComplexVector vector(std::size_t k) const { return vectors.column(k); }
};

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Throws NotHermitian when ||M - M*||_F > tol * ||M||_F and NoConvergence if
/// the sweep budget runs out. Eigenvectors are phase-normalized so that the
/// first non-negligible component is real and positive; equal eigenvalues keep
/// the solver's (deterministic) order.
EigenSystem eig_hermitian(const ComplexMatrix& m, double tol = 1e-10);

struct SvdResult {
  ComplexMatrix u;               ///< rows x k, orthonormal columns
  std::vector<double> singular;  ///< k = min(rows, cols), descending
  ComplexMatrix v;               ///< cols x k, orthonormal columns
};

/// Thin SVD M = U diag(s) V* computed from the eigensystem of M*M, with left
/// vectors recovered as M v / ||M v|| and completed by Gram-Schmidt where the
/// singular value vanishes.
SvdResult svd(const ComplexMatrix& m);

/// f(M) = V f(Lambda) V* for Hermitian M.
ComplexMatrix hermitian_function(const ComplexMatrix& m, const std::function<double(double)>& f);

/// Number of eigenvalues strictly above tol.
std::size_t count_above(const std::vector<double>& values, double tol);

/// Modified Gram-Schmidt on the given vectors; drops vectors whose residual
/// norm falls below drop_tol.
std::vector<ComplexVector> orthonormalize(const std::vector<ComplexVector>& vectors,
                                          double drop_tol = 1e-10);

/// Extends an orthonormal family to an orthonormal basis of C^n.
std::vector<ComplexVector> complete_basis(std::vector<ComplexVector> family, std::size_t n);

}  // namespace posmap
