#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "posmap/certify.hpp"
#include "posmap/matrix.hpp"

namespace posmap {

/// Images phi(E_ij) of the matrix units under a linear map M_n -> M_m.
struct MapImages {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<ComplexMatrix> images;  // row-major n x n grid

  const ComplexMatrix& at(std::size_t i, std::size_t j) const { return images.at(i * n + j); }

  /// Evaluates a linear map on every matrix unit.
  static MapImages from_map(std::size_t n, std::size_t m,
                            const std::function<ComplexMatrix(const ComplexMatrix&)>& phi);
};

/// rho = sum_ij E_ij (x) phi(E_ij); blocks are indexed by the first factor.
BipartiteOperator choi_of(const MapImages& map);

/// phi(a) = sum_ij a_ij rho_ij = Tr_1((a^T (x) 1) rho).
ComplexMatrix apply_choi(const BipartiteOperator& rho, const ComplexMatrix& a);

/// Swap operator w = sum_ij E_ij (x) E_ji, the Choi matrix of transposition.
BipartiteOperator transposition_choi(std::size_t n);

/// n P_x with x = (sum_i e_i (x) e_i) / sqrt(n), the Choi matrix of the identity map.
BipartiteOperator max_entangled_choi(std::size_t n);

/// p (x) 1_n for a rank-one projector p; throws NotRankOneProjector.
BipartiteOperator product_with_identity(const ComplexMatrix& p, std::size_t n);

enum class MembershipVerdict { Member, NonMember, Inconclusive };

std::string_view to_string(MembershipVerdict verdict) noexcept;

struct DMembershipReport {
  bool hermitian = false;
  double trace_value = 0.0;
  bool trace_ok = false;
  bool unital = false;
  std::optional<BlockPositivityCertificate> block_positive;
  MembershipVerdict verdict = MembershipVerdict::Inconclusive;
};

/// Membership in the set of Choi matrices of unital positive maps normalized
/// in the alpha norm: Hermitian, trace n, sum_i rho_ii = 1, block positive.
///
/// For a Hermitian unital block-positive operator the alpha norm equals one,
/// so it is not optimized here. A member verdict means the see-saw found no
/// witness within the budget; Inconclusive is returned when the linear checks
/// pass but the budget allowed no restart.
DMembershipReport membership_D(const BipartiteOperator& rho, const SeeSawOptions& search = {},
                               double structural_tol = 1e-10);

}  // namespace posmap
