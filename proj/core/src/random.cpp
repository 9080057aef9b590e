#include "posmap/random.hpp"

#include "posmap/linalg.hpp"

namespace posmap {

namespace {

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

}  // namespace

ComplexVector random_gaussian_vector(Rng& rng, std::size_t n) {
  ComplexVector v(n);
  for (Complex& z : v) z = gaussian(rng);
  return v;
}

ComplexVector random_unit_vector(Rng& rng, std::size_t n) {
  return normalized(random_gaussian_vector(rng, n));
}

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (Complex& z : m.entries()) z = gaussian(rng);
  return m;
}

ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  std::vector<ComplexVector> columns;
  columns.reserve(n);
  for (std::size_t c = 0; c < n; ++c) columns.push_back(random_gaussian_vector(rng, n));
  // A Gaussian matrix has full rank with probability one.
  return ComplexMatrix::from_columns(complete_basis(orthonormalize(columns, 1e-12), n));
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
  return hermitian_part(random_matrix(rng, n, n));
}

}  // namespace posmap
