#pragma once

#include <cstddef>
#include <vector>

#include "posmap/certify.hpp"
#include "posmap/choi.hpp"
#include "posmap/matrix.hpp"

namespace posmap {

/// Parameters of phi_{a,b,c}(x) = psi_{a,b,c}(x) - x with
/// psi = diag(a x11 + b x22 + c x33, a x22 + b x33 + c x11, a x33 + b x11 + c x22).
struct ChoiFamilyParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Throws OutOfRange for negative or non-finite parameters.
void validate(const ChoiFamilyParams& params);

MapImages phi_abc_images(const ChoiFamilyParams& params);

/// (i) a >= 1, (ii) a + b + c >= 3, (iii) bc >= (2 - a)^2 when 1 <= a <= 2.
bool is_positive_abc(const ChoiFamilyParams& params);

/// True when shifting every threshold above by +-margin changes the verdict.
bool near_positivity_boundary(const ChoiFamilyParams& params, double margin = 1e-6);

/// w^- = sum_ij eps_ij E_ij (x) E_ji with eps_ii = 1 and eps_ij = -1 otherwise.
BipartiteOperator w_minus();

/// r = E11 (x) E22 + E22 (x) E33 + E33 (x) E11.
BipartiteOperator r_matrix();

/// lambda r + (1 - lambda) w^-; throws OutOfRange outside [0, 1].
BipartiteOperator rho_lambda(double lambda);

/// Images of the unital map whose Choi matrix is partial_transpose(rho_lambda):
/// (1 - lambda) phi_{2, 0, lambda/(1-lambda)} for lambda < 1 and the limit
/// x -> diag(x33, x11, x22) at lambda = 1.
MapImages rho_lambda_map_images(double lambda);

/// Choi matrix of x -> (1/2) phi_{2,0,1}(x), the classical Choi map.
BipartiteOperator choi_map_classic();

struct SweepRow {
  ChoiFamilyParams params;
  bool condition = false;   ///< is_positive_abc
  bool certifier = false;   ///< no witness found
  double min_value = 0.0;
  bool near_boundary = false;
  bool disagreement = false;
};

/// Grid k * step for k = 0..floor(3 / step) on each axis; empty when
/// step > 3. A disagreement is a point away from the boundary where the
/// conditions and the see-saw certifier differ, or where a non-positive
/// point's witness is not below -1e-6.
std::vector<SweepRow> sweep_choi_family(double step, const SeeSawOptions& options = {},
                                        double boundary_margin = 1e-6);

struct SegmentRow {
  double lambda = 0.0;
  bool expected_member = false;  ///< lambda >= 1/2
  MembershipVerdict verdict = MembershipVerdict::Inconclusive;
  double min_value = 0.0;
  bool has_witness = false;
};

/// membership_D(rho_lambda) for lambda = k / (points - 1).
std::vector<SegmentRow> sweep_rho_lambda(std::size_t points = 11,
                                         const SeeSawOptions& options = {});

}  // namespace posmap
