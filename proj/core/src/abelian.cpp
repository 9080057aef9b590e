#include "posmap/abelian.hpp"

#include <cmath>

#include "posmap/linalg.hpp"

namespace posmap {

namespace {

constexpr double kRangeTol = 1e-9;

std::vector<ComplexVector> range_basis(const ComplexMatrix& k, double tol) {
  const EigenSystem es = eig_hermitian(hermitian_part(k));
  std::vector<ComplexVector> out;
  for (std::size_t i = 0; i < es.values.size(); ++i)
    if (es.values[i] > tol) out.push_back(es.vector(i));
  return out;
}

}  // namespace

ArvesonDecomposition ArvesonDecomposition::from_family(std::vector<ComplexMatrix> family) {
  ArvesonDecomposition out;
  if (family.empty()) return out;
  const std::size_t m = family.front().rows();
  out.sum = ComplexMatrix(m, m);
  for (const ComplexMatrix& k : family) {
    if (k.rows() != m || k.cols() != m) {
      throw Error(ErrorCode::DimensionMismatch, "Arveson family members must share a size");
    }
    out.sum += k;
    out.ranks.push_back(count_above(eig_hermitian(hermitian_part(k)).values, kRangeTol));
  }
  out.K = std::move(family);
  return out;
}

ArvesonDecomposition restrict_to_diagonal(const BipartiteOperator& rho) {
  if (rho.dim1() != rho.dim2()) {
    throw Error(ErrorCode::DimensionMismatch, "restriction needs square factors");
  }
  std::vector<ComplexMatrix> family;
  for (std::size_t i = 0; i < rho.dim1(); ++i) family.push_back(rho.block(i, i));
  return ArvesonDecomposition::from_family(std::move(family));
}

ArvesonDecomposition renormalize(const ArvesonDecomposition& k) {
  if (k.K.empty()) return k;
  const EigenSystem es = eig_hermitian(hermitian_part(k.sum));
  if (es.values.front() <= 1e-10) {
    throw Error(ErrorCode::SingularSum, "sum of the family is not invertible");
  }
  const ComplexMatrix root =
      hermitian_function(hermitian_part(k.sum), [](double v) { return 1.0 / std::sqrt(v); });
  std::vector<ComplexMatrix> family;
  for (const ComplexMatrix& ki : k.K) family.push_back(hermitian_part(root * ki * root));
  ArvesonDecomposition out = ArvesonDecomposition::from_family(std::move(family));
  if (out.ranks != k.ranks) {
    throw Error(ErrorCode::OutOfRange, "renormalization changed a rank");
  }
  return out;
}

bool weak_independence(const ArvesonDecomposition& k, double tol) {
  if (k.K.empty()) return true;
  const std::size_t m = k.K.front().rows();
  std::vector<ComplexVector> columns;
  for (const ComplexMatrix& ki : k.K) {
    const auto basis = range_basis(ki, tol);
    for (const ComplexVector& xi : basis)
      for (const ComplexVector& eta : basis) columns.push_back(kron(xi, conjugate(eta)));
  }
  if (columns.empty()) return true;
  if (columns.size() > m * m) return false;
  const SvdResult d = svd(ComplexMatrix::from_columns(columns));
  const double top = d.singular.front();
  std::size_t rank = 0;
  for (double s : d.singular)
    if (s > tol * std::max(1.0, top)) ++rank;
  return rank == columns.size();
}

bool is_cstar_extreme(const ArvesonDecomposition& k, double tol) {
  for (std::size_t i = 0; i < k.K.size(); ++i) {
    if (max_abs(k.K[i] * k.K[i] - k.K[i]) > tol) return false;
    for (std::size_t j = i + 1; j < k.K.size(); ++j)
      if (max_abs(k.K[i] * k.K[j]) > tol) return false;
  }
  return true;
}

ArvesonDecomposition example_3dcex_family() {
  const double r = 1.0 / std::sqrt(2.0);
  const ComplexVector u{r, 0.0, r};
  return ArvesonDecomposition::from_family(
      {ComplexMatrix::unit(3, 0, 0), ComplexMatrix::unit(3, 1, 1),
       0.5 * ComplexMatrix::outer(u, u) + ComplexMatrix::unit(3, 2, 2)});
}

std::string_view to_string(ArvesonVerdict verdict) noexcept {
  switch (verdict) {
    case ArvesonVerdict::Extreme: return "extreme";
    case ArvesonVerdict::NotExtreme: return "not_extreme";
    case ArvesonVerdict::Malformed: return "malformed";
  }
  return "malformed";
}

ArvesonVerdict arveson_extreme_check(const ArvesonDecomposition& k, double tol) {
  if (k.K.empty()) return ArvesonVerdict::Malformed;
  for (const ComplexMatrix& ki : k.K) {
    if (!is_hermitian(ki, tol)) return ArvesonVerdict::Malformed;
    if (eig_hermitian(hermitian_part(ki)).values.front() < -tol) return ArvesonVerdict::Malformed;
  }
  if (max_abs(k.sum - ComplexMatrix::identity(k.sum.rows())) > tol) {
    return ArvesonVerdict::Malformed;
  }
  return weak_independence(k, tol) ? ArvesonVerdict::Extreme : ArvesonVerdict::NotExtreme;
}

}  // namespace posmap
