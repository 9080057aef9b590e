#include "posmap/schmidt.hpp"

#include <cmath>

#include "posmap/linalg.hpp"

namespace posmap {

namespace {

void require_unit(std::span<const Complex> v, const char* what) {
  if (std::abs(norm(v) - 1.0) > 1e-10) {
    throw Error(ErrorCode::NotNormalized, std::string(what) + " must be a unit vector");
  }
}

}  // namespace

ComplexVector SchmidtDecomposition::reconstruct() const {
  if (coefficients.empty()) return {};
  ComplexVector out(left_vectors.front().size() * right_vectors.front().size());
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const ComplexVector term = kron(left_vectors[k], right_vectors[k]);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coefficients[k] * term[i];
  }
  return out;
}

ComplexMatrix coefficient_matrix(std::span<const Complex> x, std::size_t n, std::size_t m) {
  if (x.size() != n * m) throw Error(ErrorCode::DimensionMismatch, "vector size must be n*m");
  return ComplexMatrix(n, m, ComplexVector(x.begin(), x.end()));
}

SchmidtDecomposition schmidt(std::span<const Complex> x, std::size_t n, std::size_t m,
                             double rank_tol) {
  require_unit(x, "schmidt input");
  const SvdResult s = svd(coefficient_matrix(x, n, m));
  // X = sum_k s_k u_k v_k^*, so x = sum_k s_k u_k (x) conj(v_k).
  SchmidtDecomposition out;
  out.coefficients = s.singular;
  for (std::size_t k = 0; k < s.singular.size(); ++k) {
    out.left_vectors.push_back(s.u.column(k));
    out.right_vectors.push_back(conjugate(s.v.column(k)));
  }
  out.rank = count_above(out.coefficients, rank_tol);
  return out;
}

bool is_max_entangled(std::span<const Complex> x, std::size_t n, double tol) {
  const SchmidtDecomposition d = schmidt(x, n, n);
  const double target = 1.0 / std::sqrt(static_cast<double>(n));
  for (double c : d.coefficients)
    if (std::abs(c - target) > tol) return false;
  return true;
}

double overlap(std::span<const Complex> x, std::span<const Complex> z, std::size_t n) {
  require_unit(x, "overlap state");
  require_unit(z, "overlap direction");
  if (x.size() != n * z.size()) throw Error(ErrorCode::DimensionMismatch, "overlap sizes");
  const ComplexMatrix coeff = coefficient_matrix(x, n, z.size());
  const ComplexVector contracted = coeff * conjugate(z);
  const double v = norm(contracted);
  return v * v;
}

}  // namespace posmap
