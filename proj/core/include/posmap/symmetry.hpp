#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "posmap/certify.hpp"
#include "posmap/matrix.hpp"

namespace posmap {

enum class InvolutionKind { Symmetry, PartialSymmetry, Neither };

std::string_view to_string(InvolutionKind kind) noexcept;

/// Canonical decomposition s = p - q with e = s^2 = p + q.
struct InvolutionClass {
  InvolutionKind kind = InvolutionKind::Neither;
  ComplexMatrix p;
  ComplexMatrix q;
  ComplexMatrix e;
  std::size_t support_rank = 0;
  std::size_t rank_p = 0;
  std::size_t rank_q = 0;
};

/// Detects symmetries (s = s*, s^2 = 1) and partial symmetries (s = s*,
/// s^2 = e a proper nonzero projector) from the spectrum of s; p = (e + s)/2,
/// q = (e - s)/2.
InvolutionClass classify_involution(const ComplexMatrix& s, double tol = 1e-10);
InvolutionClass classify_involution(const BipartiteOperator& s, double tol = 1e-10);

struct SchmidtRangeReport {
  std::size_t samples = 0;
  std::size_t range_dimension = 0;
  double worst_deviation = 0.0;
  ComplexVector worst_vector;
  bool pass = false;
};

/// Samples unit vectors in range(q) of a symmetry s = 1 - 2q and measures the
/// worst deviation of their sorted Schmidt coefficients from
/// (1/sqrt2, 1/sqrt2, 0, ...). Passes iff the deviation is at most 1e-9.
/// Throws NotSymmetry when s is not a symmetry.
SchmidtRangeReport q_range_schmidt_check(const BipartiteOperator& s, std::size_t samples = 500,
                                         std::uint64_t seed = 0);

enum class ReductionFailure { PartialTransposeNotRankOne, NotMaximallyEntangled };

std::string_view to_string(ReductionFailure reason) noexcept;

class NotReducible : public Error {
 public:
  explicit NotReducible(ReductionFailure reason, const std::string& detail = {});
  ReductionFailure reason() const noexcept { return reason_; }

 private:
  ReductionFailure reason_;
};

/// s = (U (x) conj(V)) w (U (x) conj(V))*, where conj(V) is the transpose of V*.
struct ReductionResult {
  ComplexMatrix u;
  ComplexMatrix v;
  ComplexVector entangled_vector;  ///< x with partial_transpose(s) = n P_x
  double reconstruction_error = 0.0;
};

/// Constructive local-unitary reduction of a symmetry to the swap operator.
///
/// The partial transpose of s must be n P_x with x maximally entangled; the
/// Schmidt vectors of x = n^{-1/2} sum u_i (x) v_i give U: e_i -> u_i and
/// V: e_i -> v_i. Throws NotReducible with the failing condition otherwise.
ReductionResult reduce_to_transposition(const BipartiteOperator& s, double tol = 1e-9);

/// Rebuilds (U (x) conj(V)) w (U (x) conj(V))*.
BipartiteOperator reduction_reconstruct(const ReductionResult& r);

/// 1 - 2 (P_x1 + P_x2 + P_x3) with x1 = (e1e1 + e2e2)/sqrt2,
/// x2 = (e1e3 + e3e2)/sqrt2, x3 = (e2e3 - e3e1)/sqrt2.
BipartiteOperator s0_symmetry();

/// (U (x) V) w (U (x) V)* for Haar-random unitaries drawn from Rng(seed).
BipartiteOperator random_symmetry_in_D(std::size_t n, std::uint64_t seed);

/// n^2 - Re Tr(w sigma); zero at sigma = w and positive elsewhere on the set
/// of normalized unital Choi matrices.
double exposedness_gap(const BipartiteOperator& sigma);

enum class PartialFixture {
  EmbeddedSwapPlusE12E3,  ///< w_2 + P_x, x = (e1 + e2) (x) e3 / sqrt2
  EmbeddedSwapPlusE3E3,   ///< w_2 + P_x, x = e3 (x) e3
};

/// Swap of C^2 (x) C^2 embedded in C^3 (x) C^3.
BipartiteOperator embedded_swap_2_in_3();
BipartiteOperator partial_symmetry_fixture(PartialFixture which);

inline constexpr std::string_view kCounterexampleLabel = "conjecture-counterexample-candidate";

struct PartialSymmetryFinding {
  std::size_t trial = 0;
  std::string family;
  std::size_t support_rank = 0;
  bool cp = false;
  bool cocp = false;
  /// kCounterexampleLabel when the member has support rank 7 or is neither
  /// CP nor coCP; empty otherwise.
  std::string flag;
  BipartiteOperator s;
};

struct PartialSymmetrySearchReport {
  std::size_t trials = 0;
  std::size_t partial_symmetries_built = 0;
  std::vector<PartialSymmetryFinding> members;
  std::size_t counterexample_candidates = 0;
};

/// Randomized exploration of partial symmetries in 3 (x) 3 with support rank
/// 5 or 7. Trials 0 and 1 are the two known fixtures; later trials cycle
/// through local-unitary images of embedded-swap constructions, random
/// spectral constructions, and deflated swap operators. Members of the set of
/// normalized unital Choi matrices are reported; nothing is concluded about
/// whether rank-7 members exist.
PartialSymmetrySearchReport partial_symmetry_search(std::size_t trials, std::uint64_t seed,
                                                    const SeeSawOptions& membership_budget = {
                                                        40, 200, 1e-9, 0});

}  // namespace posmap
