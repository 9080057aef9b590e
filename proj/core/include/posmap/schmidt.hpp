#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "posmap/matrix.hpp"

namespace posmap {

/// x = sum_i coefficients[i] left[i] (x) right[i], coefficients non-negative
/// and descending. Phases live in the vectors. For degenerate coefficients the
/// individual vector pairs are only defined up to a joint rotation.
struct SchmidtDecomposition {
  std::vector<double> coefficients;
  std::vector<ComplexVector> left_vectors;
  std::vector<ComplexVector> right_vectors;
  std::size_t rank = 0;

  ComplexVector reconstruct() const;
};

/// Coefficient matrix X[i,j] = (e_i (x) e_j, x) of a vector in C^n (x) C^m.
ComplexMatrix coefficient_matrix(std::span<const Complex> x, std::size_t n, std::size_t m);

/// Schmidt decomposition via the SVD of the coefficient matrix. Throws
/// NotNormalized unless ||x|| = 1 within 1e-10.
SchmidtDecomposition schmidt(std::span<const Complex> x, std::size_t n, std::size_t m,
                             double rank_tol = 1e-9);

/// All n coefficients equal 1/sqrt(n) within tol (square factors).
bool is_max_entangled(std::span<const Complex> x, std::size_t n, double tol = 1e-9);

/// Tr((1 (x) P_z) P_x) = ||(1 (x) <z|) x||^2; bounded by the largest squared
/// Schmidt coefficient.
double overlap(std::span<const Complex> x, std::span<const Complex> z, std::size_t n);

}  // namespace posmap
