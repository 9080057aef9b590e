#pragma once

#include <cstdint>
#include <random>

#include "posmap/matrix.hpp"

namespace posmap {

using Rng = std::mt19937_64;

/// Independent complex standard Gaussian entries.
ComplexVector random_gaussian_vector(Rng& rng, std::size_t n);
/// Normalized complex Gaussian vector (uniform on the unit sphere).
ComplexVector random_unit_vector(Rng& rng, std::size_t n);
/// Haar-distributed unitary: Gram-Schmidt QR of a complex Gaussian matrix,
/// which fixes the diagonal of R to be positive.
ComplexMatrix random_unitary(Rng& rng, std::size_t n);
/// (G + G*) / 2 with G complex Gaussian.
ComplexMatrix random_hermitian(Rng& rng, std::size_t n);
ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);

}  // namespace posmap
