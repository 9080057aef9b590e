#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "posmap/matrix.hpp"

namespace posmap {

/// Family K_1..K_k of PSD operators; a unital map on the diagonal algebra
/// sends E_ii to K_i.
struct ArvesonDecomposition {
  std::vector<ComplexMatrix> K;
  ComplexMatrix sum;
  std::vector<std::size_t> ranks;  ///< eigenvalues above 1e-9

  /// Computes sum and ranks from the family.
  static ArvesonDecomposition from_family(std::vector<ComplexMatrix> family);
};

/// K_i = block(i, i) = phi(E_ii).
ArvesonDecomposition restrict_to_diagonal(const BipartiteOperator& rho);

/// K_i -> S^{-1/2} K_i S^{-1/2} with S = sum K_i. Throws SingularSum when the
/// smallest eigenvalue of S is at most 1e-10.
ArvesonDecomposition renormalize(const ArvesonDecomposition& k);

/// With M_i = range(K_i), true iff the spaces N_i = span{xi (x) conj(eta)} of
/// vectorized operators |xi><eta| on M_i are linearly independent, i.e.
/// dim(sum N_i) = sum dim(M_i)^2.
bool weak_independence(const ArvesonDecomposition& k, double tol = 1e-9);

/// Every K_i a projector and K_i K_j = 0 for i != j.
bool is_cstar_extreme(const ArvesonDecomposition& k, double tol = 1e-10);

/// K1 = E11, K2 = E22, K3 = (1/2) P_u + E33 with u = (e1 + e3)/sqrt2; the sum
/// is 1 + (1/2) P_u.
ArvesonDecomposition example_3dcex_family();

enum class ArvesonVerdict { Extreme, NotExtreme, Malformed };

std::string_view to_string(ArvesonVerdict verdict) noexcept;

/// Malformed when some K_i is not PSD or sum K_i != 1 within tol; otherwise
/// Extreme iff the ranges are weakly independent.
ArvesonVerdict arveson_extreme_check(const ArvesonDecomposition& k, double tol = 1e-9);

}  // namespace posmap
