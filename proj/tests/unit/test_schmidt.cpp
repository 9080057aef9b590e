#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "posmap/schmidt.hpp"

using namespace posmap;

namespace {

ComplexVector e(std::size_t i, std::size_t j, std::size_t n = 3) {
  return oracle::kron(basis_vector(n, i), basis_vector(n, j));
}

ComplexVector combo(std::initializer_list<std::pair<double, ComplexVector>> terms) {
  ComplexVector out(terms.begin()->second.size());
  for (const auto& [c, v] : terms)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * v[i];
  return out;
}

}  // namespace

TEST_CASE("Schmidt examples") {
  const double r2 = 1.0 / std::sqrt(2.0), r3 = 1.0 / std::sqrt(3.0);
  SUBCASE("Bell vector") {
    const SchmidtDecomposition d = schmidt(combo({{r2, e(0, 0, 2)}, {r2, e(1, 1, 2)}}), 2, 2);
    CHECK(d.rank == 2);
    CHECK(d.coefficients[0] == doctest::Approx(r2).epsilon(1e-14));
    CHECK(d.coefficients[1] == doctest::Approx(r2).epsilon(1e-14));
  }
  SUBCASE("maximally entangled vector of the reduction example") {
    const ComplexVector x = combo({{r3, e(2, 2)}, {-r3, e(0, 1)}, {r3, e(1, 0)}});
    const SchmidtDecomposition d = schmidt(x, 3, 3);
    CHECK(d.rank == 3);
    for (double c : d.coefficients) CHECK(c == doctest::Approx(r3).epsilon(1e-14));
    CHECK(is_max_entangled(x, 3));
  }
  SUBCASE("product vector") {
    const SchmidtDecomposition d = schmidt(e(0, 1), 3, 3);
    CHECK(d.rank == 1);
    CHECK(d.coefficients[0] == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("maximal entanglement") {
    CHECK(is_max_entangled(combo({{r3, e(0, 0)}, {r3, e(1, 1)}, {r3, e(2, 2)}}), 3));
    CHECK_FALSE(is_max_entangled(combo({{r2, e(0, 0)}, {r2, e(1, 1)}}), 3));
  }
  CHECK_THROWS_AS(schmidt(ComplexVector{1.0, 1.0, 0.0, 0.0}, 2, 2), Error);
}

TEST_CASE("Schmidt reconstruction and local unitary invariance") {
  oracle::Gen gen(1);
  for (int t = 0; t < 1000; ++t) {
    const ComplexVector x = gen.unit(9);
    const SchmidtDecomposition d = schmidt(x, 3, 3);
    CHECK(oracle::max_diff(d.reconstruct(), x) <= 1e-12);
    CHECK(std::is_sorted(d.coefficients.rbegin(), d.coefficients.rend()));
    double sq = 0.0;
    for (double c : d.coefficients) {
      CHECK(c >= 0.0);
      sq += c * c;
    }
    CHECK(std::abs(sq - 1.0) <= 1e-12);
    if (t < 100) {
      const ComplexMatrix uv = oracle::kron(gen.unitary(3), gen.unitary(3));
      const SchmidtDecomposition d2 = schmidt(uv * x, 3, 3);
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(std::abs(d2.coefficients[k] - d.coefficients[k]) <= 1e-12);
    }
  }
}

TEST_CASE("overlap bound by the largest squared Schmidt coefficient") {
  const double r2 = 1.0 / std::sqrt(2.0);
  CHECK(overlap(combo({{r2, e(0, 0, 2)}, {r2, e(1, 1, 2)}}), basis_vector(2, 0), 2) ==
        doctest::Approx(0.5).epsilon(1e-15));

  oracle::Gen gen(2);
  for (int t = 0; t < 1000; ++t) {
    const ComplexVector x = gen.unit(9), z = gen.unit(3);
    const SchmidtDecomposition d = schmidt(x, 3, 3);
    const double top = d.coefficients[0] * d.coefficients[0];
    // Tr((1 (x) P_z) P_x) by the naive kernel
    const ComplexMatrix pz = oracle::kron(ComplexMatrix::identity(3), ComplexMatrix::outer(z, z));
    const double direct = oracle::matmul(pz, ComplexMatrix::outer(x, x)).trace().real();
    CHECK(std::abs(overlap(x, z, 3) - direct) <= 1e-12);
    CHECK(direct <= top + 1e-12);

    // equality at the top right vector
    CHECK(std::abs(overlap(x, d.right_vectors[0], 3) - top) <= 1e-12);
    // strict inequality once z leans on a smaller coefficient's vector
    const double gap = top - d.coefficients[1] * d.coefficients[1];
    if (gap > 1e-6) {
      ComplexVector tilted(3);
      for (std::size_t i = 0; i < 3; ++i)
        tilted[i] = std::sqrt(0.5) * (d.right_vectors[0][i] + d.right_vectors[1][i]);
      CHECK(overlap(x, tilted, 3) < top - 1e-12);
    }
  }
}
