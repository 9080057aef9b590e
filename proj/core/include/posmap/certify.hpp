#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "posmap/matrix.hpp"

namespace posmap {

/// Budget for the randomized see-saw searches. Restart k draws its starting
/// point from an Rng seeded with seed + k.
struct SeeSawOptions {
  std::size_t restarts = 100;
  std::size_t max_iters = 200;
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

/// Result of the product-vector search for (x (x) y, rho x (x) y) < 0.
///
/// A witness is a proof that rho is not block positive. Its absence is only
/// evidence up to the search budget.
struct BlockPositivityCertificate {
  double min_value_found = 0.0;
  std::optional<ComplexVector> witness_x;
  std::optional<ComplexVector> witness_y;
  std::size_t restarts_used = 0;
  std::size_t converged_restarts = 0;

  bool has_witness() const noexcept { return witness_x.has_value(); }
};

struct AlphaNormEstimate {
  double value = 0.0;
  ComplexVector maximizer_y;
  ComplexMatrix maximizer_symmetry;
  std::size_t restarts_used = 0;
};

/// Explicit starting point appended after the random restarts.
struct ProductStart {
  ComplexVector x;
  ComplexVector y;
};

/// One see-saw run. history holds the objective after every half step,
/// starting with the value at the initial point.
struct SeeSawRun {
  ComplexVector x;
  ComplexVector y;
  ComplexMatrix symmetry;  // only filled by alpha_ascent
  double value = 0.0;
  std::vector<double> history;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Re (x (x) y, rho x (x) y).
double product_value(const BipartiteOperator& rho, std::span<const Complex> x,
                     std::span<const Complex> y);

/// side = Second: Tr_2(rho (1 (x) m)); side = First: Tr_1(rho (m (x) 1)).
ComplexMatrix partial_contraction(const BipartiteOperator& rho, const ComplexMatrix& m,
                                  Factor side);

/// B(y) = Tr_2(rho (1 (x) P_y)) for side = Second, so that
/// (x, B(y) x) = (x (x) y, rho x (x) y); A(x) = Tr_1(rho (P_x (x) 1)) for side = First.
/// The vector must be a unit vector within 1e-12.
ComplexMatrix contraction(const BipartiteOperator& rho, std::span<const Complex> v, Factor side);

/// Alternating minimization: x <- lowest eigenvector of B(y), y <- lowest
/// eigenvector of A(x), until a full iteration lowers the value by less than
/// tol / 10.
SeeSawRun block_descent(const BipartiteOperator& rho, ComplexVector x0, ComplexVector y0,
                        std::size_t max_iters, double tol);

BlockPositivityCertificate block_positivity(const BipartiteOperator& rho,
                                            const SeeSawOptions& options = {},
                                            std::span<const ProductStart> extra_starts = {});

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& hermitian);

/// sign(B) with the kernel sent to +1; maximizes |Tr(B s)| over symmetries s.
ComplexMatrix sign_symmetry(const ComplexMatrix& hermitian);

/// Ascent on f(y) = ||B(y)||_1. Given y the optimal symmetry is sign(B(y));
/// given s the next y is the eigenvector of Tr_1(rho (s (x) 1)) with the
/// largest |eigenvalue|.
SeeSawRun alpha_ascent(const BipartiteOperator& rho, ComplexVector y0, std::size_t max_iters,
                       double tol);

/// alpha(rho) = max over symmetries s and rank-one projectors p of
/// |Tr rho (s (x) p)|, estimated as the best ascent limit over restarts.
AlphaNormEstimate alpha_norm(const BipartiteOperator& rho, const SeeSawOptions& options = {});

bool is_psd(const ComplexMatrix& m, double tol = 1e-9);
/// Choi matrix is PSD.
bool is_cp(const BipartiteOperator& rho, double tol = 1e-9);
/// Partial transpose of the Choi matrix is PSD.
bool is_cocp(const BipartiteOperator& rho, double tol = 1e-9);

}  // namespace posmap
