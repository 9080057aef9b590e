#include "posmap/choi.hpp"

#include <cmath>

#include "posmap/linalg.hpp"

namespace posmap {

MapImages MapImages::from_map(std::size_t n, std::size_t m,
                              const std::function<ComplexMatrix(const ComplexMatrix&)>& phi) {
  MapImages out{n, m, {}};
  out.images.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ComplexMatrix img = phi(ComplexMatrix::unit(n, i, j));
      if (img.rows() != m || img.cols() != m) {
        throw Error(ErrorCode::DimensionMismatch, "map image has the wrong size");
      }
      out.images.push_back(std::move(img));
    }
  return out;
}

BipartiteOperator choi_of(const MapImages& map) {
  if (map.images.size() != map.n * map.n) {
    throw Error(ErrorCode::DimensionMismatch, "MapImages needs n^2 images");
  }
  return BipartiteOperator::from_blocks(map.n, map.m, map.images);
}

ComplexMatrix apply_choi(const BipartiteOperator& rho, const ComplexMatrix& a) {
  if (a.rows() != rho.dim1() || a.cols() != rho.dim1()) {
    throw Error(ErrorCode::DimensionMismatch, "apply_choi argument must be dim1 x dim1");
  }
  ComplexMatrix out(rho.dim2(), rho.dim2());
  for (std::size_t i = 0; i < rho.dim1(); ++i)
    for (std::size_t j = 0; j < rho.dim1(); ++j)
      if (a(i, j) != Complex{}) out += a(i, j) * rho.block(i, j);
  return out;
}

BipartiteOperator transposition_choi(std::size_t n) {
  BipartiteOperator w = BipartiteOperator::zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w.set_block(i, j, ComplexMatrix::unit(n, j, i));
  return w;
}

BipartiteOperator max_entangled_choi(std::size_t n) {
  BipartiteOperator rho = BipartiteOperator::zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rho.set_block(i, j, ComplexMatrix::unit(n, i, j));
  return rho;
}

BipartiteOperator product_with_identity(const ComplexMatrix& p, std::size_t n) {
  const double tol = 1e-10;
  if (!p.is_square() || !is_hermitian(p, tol) || frobenius_norm(p * p - p) > tol ||
      std::abs(p.trace() - Complex{1.0}) > tol) {
    throw Error(ErrorCode::NotRankOneProjector, "p must be a rank-one orthogonal projector");
  }
  return tensor(p, ComplexMatrix::identity(n));
}

std::string_view to_string(MembershipVerdict verdict) noexcept {
  switch (verdict) {
    case MembershipVerdict::Member: return "member";
    case MembershipVerdict::NonMember: return "non_member";
    case MembershipVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

DMembershipReport membership_D(const BipartiteOperator& rho, const SeeSawOptions& search,
                               double structural_tol) {
  if (rho.dim1() != rho.dim2()) {
    throw Error(ErrorCode::DimensionMismatch, "membership_D needs equal factor dimensions");
  }
  const std::size_t n = rho.dim1();
  DMembershipReport report;
  report.hermitian = is_hermitian(rho.matrix(), structural_tol);
  report.trace_value = rho.trace().real();
  report.trace_ok = std::abs(rho.trace() - Complex(static_cast<double>(n))) <= structural_tol;
  report.unital = frobenius_norm(partial_trace(rho, Factor::First) -
                                 ComplexMatrix::identity(n)) <= structural_tol;

  if (report.hermitian) {
    report.block_positive = block_positivity(rho, search);
  }

  if (!report.hermitian || !report.trace_ok || !report.unital ||
      (report.block_positive && report.block_positive->has_witness())) {
    report.verdict = MembershipVerdict::NonMember;
  } else if (report.block_positive->restarts_used == 0) {
    report.verdict = MembershipVerdict::Inconclusive;
  } else {
    report.verdict = MembershipVerdict::Member;
  }
  return report;
}

}  // namespace posmap
