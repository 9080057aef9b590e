#pragma once

#include <array>
#include <string_view>

#include "posmap/matrix.hpp"

namespace posmap {

enum class Form2 { Entangled, Degenerate };

std::string_view to_string(Form2 form) noexcept;

/// Generators of the convex decomposition in the basis (y1, y2).
struct Generators2 {
  BipartiteOperator rho0;     ///< sum_ij E_ij (x) |y_i><y_j|
  BipartiteOperator w_phase;  ///< blocks |y_i><y_i| and e^{i arg c} |y2><y1| off the diagonal
  BipartiteOperator rho_diag; ///< diag(|y1><y1|, |y2><y2|)
};

struct Classification2 {
  Form2 form = Form2::Entangled;
  ComplexVector y1;
  ComplexVector y2;
  double c0 = 0.0;  ///< coefficient of |y1><y2| in block(1,2), made real >= 0
  Complex c = 0.0;  ///< coefficient of |y2><y1| in block(1,2)
  double residual = 0.0;
};

/// Block form of a regular extreme unital map on M_2:
///   ( |y1><y1|                      c0 |y1><y2| + c |y2><y1| )
///   ( conj(c0) |y2><y1| + conj(c) |y1><y2|      |y2><y2|     )
/// or, in the degenerate case, diag(1, 0) up to ordering of the blocks.
///
/// y1 is rotated by e^{i arg c0} so that c0 >= 0. Throws NotHermitian,
/// DimensionMismatch for non 2 (x) 2 input, NotCanonical when the diagonal
/// blocks match neither pattern or the operator is not unital with trace 2,
/// and ResidualTooLarge when block(1,2) leaves span{|y1><y2|, |y2><y1|}.
Classification2 classify_regular_extreme_2(const BipartiteOperator& rho, double tol = 1e-10);

/// Builds the entangled block form above.
BipartiteOperator entangled_form_rho(std::span<const Complex> y1, std::span<const Complex> y2,
                                     double c0, Complex c);

Generators2 tilde_d_generators(std::span<const Complex> y1, std::span<const Complex> y2,
                               double phase);

struct TildeDDecomposition {
  Generators2 generators;
  std::array<double, 3> weights{};  ///< (c0, |c|, 1 - c0 - |c|)
  double reconstruction_error = 0.0;
};

/// rho = c0 rho0 + |c| w_phase + (1 - c0 - |c|) rho_diag. Throws
/// WeightViolation when c0 + |c| > 1 + 1e-10 and NotCanonical for the
/// degenerate form.
TildeDDecomposition decompose_tilde_D(const Classification2& cls);

}  // namespace posmap
