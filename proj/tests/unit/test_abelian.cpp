#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "posmap/abelian.hpp"
#include "posmap/choi.hpp"
#include "posmap/choifamily.hpp"
#include "posmap/linalg.hpp"

using namespace posmap;

namespace {

ArvesonDecomposition units(std::size_t n) {
  std::vector<ComplexMatrix> k;
  for (std::size_t i = 0; i < n; ++i) k.push_back(ComplexMatrix::unit(n, i, i));
  return ArvesonDecomposition::from_family(k);
}

/// Rank of the family {xi (x) conj(eta)} by Gaussian elimination with pivoting.
std::size_t naive_rank(std::vector<ComplexVector> cols, double tol) {
  std::size_t rank = 0;
  const std::size_t rows = cols.empty() ? 0 : cols.front().size();
  for (std::size_t r = 0; r < rows && rank < cols.size(); ++r) {
    std::size_t piv = rank;
    for (std::size_t c = rank; c < cols.size(); ++c)
      if (std::abs(cols[c][r]) > std::abs(cols[piv][r])) piv = c;
    if (std::abs(cols[piv][r]) <= tol) continue;
    std::swap(cols[piv], cols[rank]);
    for (std::size_t c = rank + 1; c < cols.size(); ++c) {
      const Complex f = cols[c][r] / cols[rank][r];
      for (std::size_t i = 0; i < rows; ++i) cols[c][i] -= f * cols[rank][i];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("restriction to the diagonal") {
  const ArvesonDecomposition c = restrict_to_diagonal(choi_map_classic());
  REQUIRE(c.K.size() == 3);
  auto e = [](std::size_t i) { return ComplexMatrix::unit(3, i, i); };
  CHECK(oracle::max_diff(c.K[0], 0.5 * (e(0) + e(1))) == 0.0);
  CHECK(oracle::max_diff(c.K[1], 0.5 * (e(1) + e(2))) == 0.0);
  CHECK(oracle::max_diff(c.K[2], 0.5 * (e(0) + e(2))) == 0.0);
  CHECK(c.ranks == std::vector<std::size_t>{2, 2, 2});

  const ArvesonDecomposition w = restrict_to_diagonal(transposition_choi(3));
  for (std::size_t i = 0; i < 3; ++i) CHECK(w.K[i] == e(i));

  oracle::Gen gen(1);
  const ComplexVector u = gen.unit(3);
  const ComplexMatrix p = projector(u);
  const ArvesonDecomposition pi = restrict_to_diagonal(product_with_identity(p, 3));
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(oracle::max_diff(pi.K[i], p(i, i) * ComplexMatrix::identity(3)) <= 1e-15);
}

TEST_CASE("renormalization of the three-operator example") {
  const ArvesonDecomposition k = example_3dcex_family();
  CHECK(k.ranks == std::vector<std::size_t>{1, 1, 2});
  const ArvesonDecomposition t = renormalize(k);
  CHECK(t.ranks == k.ranks);
  CHECK(oracle::max_diff(t.sum, ComplexMatrix::identity(3)) <= 1e-12);

  const double s6 = std::sqrt(6.0);
  const ComplexMatrix printed(3, 3,
                              {(5.0 + 2.0 * s6) / 72.0, 0.0, -1.0 / 72.0, 0.0, 0.0, 0.0,
                               -1.0 / 72.0, 0.0, (5.0 - 2.0 * s6) / 72.0});
  CHECK(oracle::max_diff(t.K[0] * t.K[2], printed) <= 1e-12);

  CHECK_FALSE(is_cstar_extreme(t));
  // The range of K~1 lies in the range of K~3 = span{e1, e3}; the family is not weakly independent.
  CHECK_FALSE(weak_independence(t));
  CHECK(arveson_extreme_check(t) == ArvesonVerdict::NotExtreme);
  CHECK(arveson_extreme_check(k) == ArvesonVerdict::Malformed);

  CHECK(renormalize(units(3)).K == units(3).K);
  std::vector<ComplexMatrix> singular{ComplexMatrix::unit(2, 0, 0)};
  CHECK_THROWS_AS(renormalize(ArvesonDecomposition::from_family(singular)), Error);
}

TEST_CASE("weak independence against a naive rank oracle") {
  CHECK(weak_independence(units(3)));
  CHECK_FALSE(weak_independence(restrict_to_diagonal(choi_map_classic())));

  oracle::Gen gen(2);
  for (int t = 0; t < 100; ++t) {
    std::vector<ComplexMatrix> family;
    std::vector<ComplexVector> cols;
    const std::size_t count = 2 + t % 3;
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t rank = 1 + (t + i) % 2;
      std::vector<ComplexVector> range;
      ComplexMatrix k(3, 3);
      for (std::size_t r = 0; r < rank; ++r) {
        range.push_back(gen.vec(3));
        k += ComplexMatrix::outer(range.back(), range.back());
      }
      family.push_back(k);
      for (const ComplexVector& a : range)
        for (const ComplexVector& b : range) cols.push_back(oracle::kron(a, conjugate(b)));
    }
    const bool expect = naive_rank(cols, 1e-8) == cols.size();
    CHECK(weak_independence(ArvesonDecomposition::from_family(family)) == expect);
  }
}

TEST_CASE("C*-extremality") {
  CHECK(is_cstar_extreme(units(3)));
  CHECK_FALSE(is_cstar_extreme(restrict_to_diagonal(choi_map_classic())));
  const ArvesonDecomposition c = restrict_to_diagonal(choi_map_classic());
  CHECK(max_abs(c.K[0] * c.K[1]) > 0.1);
  CHECK(arveson_extreme_check(c) == ArvesonVerdict::NotExtreme);

  std::vector<ComplexMatrix> one{ComplexMatrix::identity(3)};
  CHECK(arveson_extreme_check(ArvesonDecomposition::from_family(one)) == ArvesonVerdict::Extreme);
  CHECK(arveson_extreme_check(units(3)) == ArvesonVerdict::Extreme);

  std::vector<ComplexMatrix> negative{ComplexMatrix::identity(2) + ComplexMatrix::unit(2, 0, 0),
                                      -1.0 * ComplexMatrix::unit(2, 0, 0)};
  CHECK(arveson_extreme_check(ArvesonDecomposition::from_family(negative)) == ArvesonVerdict::Malformed);
  CHECK(to_string(ArvesonVerdict::NotExtreme) == "not_extreme");
}

TEST_CASE("C*-extreme families are weakly independent") {
  oracle::Gen gen(3);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix u = gen.unitary(4);
    std::vector<ComplexMatrix> family;
    // orthogonal projectors onto a random split of the columns of u
    const std::size_t cut = 1 + t % 3;
    ComplexMatrix a(4, 4), b(4, 4);
    for (std::size_t c = 0; c < 4; ++c) {
      const ComplexVector col = u.column(c);
      (c < cut ? a : b) += ComplexMatrix::outer(col, col);
    }
    const ArvesonDecomposition k = ArvesonDecomposition::from_family({a, b});
    CHECK(is_cstar_extreme(k));
    CHECK(weak_independence(k));
  }
}

TEST_CASE("two rank-one operators summing to the identity are orthogonal") {
  oracle::Gen gen(4);
  for (int t = 0; t < 100; ++t) {
    const ComplexVector x = gen.unit(2);
    const ComplexMatrix k1 = ComplexMatrix::outer(x, x);
    const ComplexMatrix k2 = ComplexMatrix::identity(2) - k1;
    const ArvesonDecomposition k = ArvesonDecomposition::from_family({k1, k2});
    CHECK(k.ranks == std::vector<std::size_t>{1, 1});
    CHECK(max_abs(k1 * k2) <= 1e-10);
    CHECK(is_cstar_extreme(k));
    CHECK(arveson_extreme_check(k) == ArvesonVerdict::Extreme);
  }
}
