#include "posmap/classify2.hpp"

#include <cmath>

#include "posmap/linalg.hpp"

namespace posmap {

namespace {

constexpr double kPatternTol = 1e-9;

bool is_identity(const ComplexMatrix& m) {
  return max_abs(m - ComplexMatrix::identity(m.rows())) <= kPatternTol;
}

bool is_zero(const ComplexMatrix& m) { return max_abs(m) <= kPatternTol; }

}  // namespace

std::string_view to_string(Form2 form) noexcept {
  return form == Form2::Entangled ? "entangled_form" : "degenerate_form";
}

BipartiteOperator entangled_form_rho(std::span<const Complex> y1, std::span<const Complex> y2,
                                     double c0, Complex c) {
  BipartiteOperator rho = BipartiteOperator::zeros(2, 2);
  const ComplexMatrix off = c0 * ComplexMatrix::outer(y1, y2) + c * ComplexMatrix::outer(y2, y1);
  rho.set_block(0, 0, ComplexMatrix::outer(y1, y1));
  rho.set_block(0, 1, off);
  rho.set_block(1, 0, off.adjoint());
  rho.set_block(1, 1, ComplexMatrix::outer(y2, y2));
  return rho;
}

Generators2 tilde_d_generators(std::span<const Complex> y1, std::span<const Complex> y2,
                               double phase) {
  Generators2 g;
  g.rho0 = entangled_form_rho(y1, y2, 1.0, 0.0);
  g.w_phase = entangled_form_rho(y1, y2, 0.0, std::polar(1.0, phase));
  g.rho_diag = entangled_form_rho(y1, y2, 0.0, 0.0);
  return g;
}

Classification2 classify_regular_extreme_2(const BipartiteOperator& rho, double tol) {
  if (rho.dim1() != 2 || rho.dim2() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "classification needs a 2 (x) 2 operator");
  }
  if (!is_hermitian(rho.matrix(), tol)) {
    throw Error(ErrorCode::NotHermitian, "classification needs a Hermitian operator");
  }
  if (std::abs(rho.trace() - Complex(2.0)) > kPatternTol ||
      !is_identity(rho.block(0, 0) + rho.block(1, 1))) {
    throw Error(ErrorCode::NotCanonical, "operator is not unital with trace 2");
  }

  const ComplexMatrix b11 = rho.block(0, 0), b12 = rho.block(0, 1), b22 = rho.block(1, 1);
  Classification2 cls;

  if ((is_identity(b11) && is_zero(b22)) || (is_zero(b11) && is_identity(b22))) {
    if (!is_zero(b12)) {
      throw Error(ErrorCode::ResidualTooLarge, "degenerate diagonal with nonzero off-diagonal");
    }
    cls.form = Form2::Degenerate;
    cls.residual = max_abs(b12);
    return cls;
  }

  const EigenSystem e11 = eig_hermitian(hermitian_part(b11));
  if (std::abs(e11.values[0]) > kPatternTol || std::abs(e11.values[1] - 1.0) > kPatternTol) {
    throw Error(ErrorCode::NotCanonical, "diagonal blocks are not complementary rank-one projectors");
  }
  cls.y1 = e11.vector(1);
  cls.y2 = e11.vector(0);

  const Complex raw_c0 = inner(cls.y1, b12 * cls.y2);
  const Complex phase = std::abs(raw_c0) > 0.0 ? raw_c0 / std::abs(raw_c0) : Complex(1.0);
  for (Complex& v : cls.y1) v *= phase;
  cls.c0 = std::abs(raw_c0);
  cls.c = inner(cls.y2, b12 * cls.y1);

  const BipartiteOperator rebuilt = entangled_form_rho(cls.y1, cls.y2, cls.c0, cls.c);
  cls.residual = max_abs(rebuilt.matrix() - rho.matrix());
  if (cls.residual > tol) {
    throw Error(ErrorCode::ResidualTooLarge,
                "off-diagonal block leaves span{|y1><y2|, |y2><y1|}: residual " +
                    std::to_string(cls.residual));
  }
  return cls;
}

TildeDDecomposition decompose_tilde_D(const Classification2& cls) {
  if (cls.form != Form2::Entangled) {
    throw Error(ErrorCode::NotCanonical, "decomposition needs the entangled form");
  }
  const double mod = std::abs(cls.c);
  if (cls.c0 + mod > 1.0 + 1e-10) {
    throw Error(ErrorCode::WeightViolation,
                "c0 + |c| = " + std::to_string(cls.c0 + mod) + " exceeds 1");
  }
  TildeDDecomposition out;
  out.generators = tilde_d_generators(cls.y1, cls.y2, mod > 0.0 ? std::arg(cls.c) : 0.0);
  out.weights = {cls.c0, mod, std::max(0.0, 1.0 - cls.c0 - mod)};
  const BipartiteOperator sum = out.weights[0] * out.generators.rho0 +
                                out.weights[1] * out.generators.w_phase +
                                out.weights[2] * out.generators.rho_diag;
  out.reconstruction_error =
      max_abs(sum.matrix() - entangled_form_rho(cls.y1, cls.y2, cls.c0, cls.c).matrix());
  return out;
}

}  // namespace posmap
