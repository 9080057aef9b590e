#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "posmap/linalg.hpp"
#include "posmap/matrix.hpp"

using namespace posmap;

namespace {

ComplexMatrix reconstruct(const EigenSystem& es) {
  const std::size_t n = es.values.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += es.values[k] * es.vectors(i, k) * std::conj(es.vectors(j, k));
  return out;
}

double orthonormality_defect(const ComplexMatrix& v) {
  return oracle::max_diff(oracle::matmul(oracle::dagger(v), v), ComplexMatrix::identity(v.cols()));
}

}  // namespace

TEST_CASE("matrix construction rejects non-finite entries and bad sizes") {
  CHECK_THROWS_AS(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), Error);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(std::nan(""), 0.0)}), Error);
  CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(0.0, INFINITY)}), Error);
  CHECK_THROWS_AS(BipartiteOperator(2, 2, ComplexMatrix(3, 3)), Error);
}

TEST_CASE("eig_hermitian on small examples") {
  SUBCASE("diagonal input") {
    const std::vector<double> d{3.0, 1.0, 2.0};
    const EigenSystem es = eig_hermitian(ComplexMatrix::diagonal(d));
    CHECK(es.values == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(oracle::max_diff(es.vector(0), basis_vector(3, 1)) == 0.0);
    CHECK(oracle::max_diff(es.vector(1), basis_vector(3, 2)) == 0.0);
    CHECK(oracle::max_diff(es.vector(2), basis_vector(3, 0)) == 0.0);
  }
  SUBCASE("Pauli X") {
    const EigenSystem es = eig_hermitian(ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}));
    CHECK(es.values[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(es.values[1] == doctest::Approx(1.0).epsilon(1e-15));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(oracle::max_diff(es.vector(0), {r, -r}) < 1e-15);
    CHECK(oracle::max_diff(es.vector(1), {r, r}) < 1e-15);
  }
  SUBCASE("non-Hermitian input") {
    CHECK_THROWS_AS(eig_hermitian(ComplexMatrix(2, 2, {0.0, 1.0, 0.0, 0.0})), Error);
    try {
      eig_hermitian(ComplexMatrix(2, 2, {0.0, 1.0, 0.0, 0.0}));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotHermitian);
    }
  }
}

TEST_CASE("eig_hermitian reconstructs random Hermitian matrices") {
  for (unsigned seed = 0; seed < 120; ++seed) {
    oracle::Gen gen(seed);
    const std::size_t n = 2 + seed % 8;
    const ComplexMatrix h = gen.herm(n);
    const EigenSystem es = eig_hermitian(h);
    CHECK(std::is_sorted(es.values.begin(), es.values.end()));
    CHECK(oracle::max_diff(reconstruct(es), h) <= 1e-12 * frobenius_norm(h));
    CHECK(orthonormality_defect(es.vectors) <= 1e-12);
  }
}

TEST_CASE("eig_hermitian is deterministic under degenerate spectra") {
  const ComplexMatrix w = oracle::swap(3);
  const EigenSystem a = eig_hermitian(w);
  const EigenSystem b = eig_hermitian(w);
  CHECK(a.values == b.values);
  CHECK(a.vectors == b.vectors);
  CHECK(a.values.front() == doctest::Approx(-1.0));
  CHECK(a.values.back() == doctest::Approx(1.0));
  // first non-negligible component of each eigenvector is real positive
  for (std::size_t k = 0; k < 9; ++k) {
    for (std::size_t r = 0; r < 9; ++r) {
      if (std::abs(a.vectors(r, k)) > 1e-10) {
        CHECK(a.vectors(r, k).real() > 0.0);
        CHECK(std::abs(a.vectors(r, k).imag()) < 1e-14);
        break;
      }
    }
  }
}

TEST_CASE("svd examples and reconstruction") {
  SUBCASE("identity") {
    const SvdResult d = svd(ComplexMatrix::identity(3));
    CHECK(d.singular == std::vector<double>{1.0, 1.0, 1.0});
  }
  SUBCASE("rank one") {
    oracle::Gen gen(3);
    const ComplexVector u = gen.unit(3), v = gen.unit(3);
    const SvdResult d = svd(ComplexMatrix::outer(u, v));
    CHECK(d.singular[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(d.singular[1]) < 1e-7);
    CHECK(std::abs(d.singular[2]) < 1e-7);
    CHECK(orthonormality_defect(d.u) < 1e-12);
    CHECK(orthonormality_defect(d.v) < 1e-12);
  }
  SUBCASE("random rectangular and square") {
    for (unsigned seed = 0; seed < 100; ++seed) {
      oracle::Gen gen(1000 + seed);
      const std::size_t r = 1 + seed % 4, c = 1 + (seed / 4) % 4;
      const ComplexMatrix m = gen.mat(r, c);
      const SvdResult d = svd(m);
      CHECK(std::is_sorted(d.singular.rbegin(), d.singular.rend()));
      ComplexMatrix s(d.singular.size(), d.singular.size());
      for (std::size_t k = 0; k < d.singular.size(); ++k) s(k, k) = d.singular[k];
      const ComplexMatrix back = oracle::matmul(oracle::matmul(d.u, s), oracle::dagger(d.v));
      CHECK(oracle::max_diff(back, m) <= 1e-12 * frobenius_norm(m));
      CHECK(orthonormality_defect(d.u) < 1e-12);
      CHECK(orthonormality_defect(d.v) < 1e-12);
    }
  }
}

TEST_CASE("kron placement and mixed product") {
  const ComplexMatrix e = kron(ComplexMatrix::unit(2, 0, 0), ComplexMatrix::unit(2, 1, 1));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(e(i, j) == Complex(i == 1 && j == 1 ? 1.0 : 0.0));
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));

  for (unsigned seed = 0; seed < 50; ++seed) {
    oracle::Gen gen(seed);
    const ComplexMatrix a = gen.mat(2, 2), b = gen.mat(2, 3), c = gen.mat(2, 2), d = gen.mat(3, 2);
    CHECK(oracle::max_diff(kron(a, b), oracle::kron(a, b)) == 0.0);
    const ComplexMatrix lhs = kron(a, b) * kron(c, d);
    const ComplexMatrix rhs = kron(a * c, b * d);
    CHECK(oracle::max_diff(lhs, rhs) <= 1e-13);
  }
}

TEST_CASE("partial trace") {
  oracle::Gen gen(7);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = gen.mat(3, 3), b = gen.mat(2, 2);
    const BipartiteOperator ab = tensor(a, b);
    CHECK(oracle::max_diff(partial_trace(ab, Factor::Second), b.trace() * a) <= 1e-12);
    CHECK(oracle::max_diff(partial_trace(ab, Factor::First), a.trace() * b) <= 1e-12);

    const BipartiteOperator m(3, 2, gen.mat(6, 6));
    CHECK(oracle::max_diff(partial_trace(m, Factor::Second), oracle::partial_trace_second(m)) ==
          0.0);
    CHECK(oracle::max_diff(partial_trace(m, Factor::First), oracle::partial_trace_first(m)) == 0.0);
    CHECK(std::abs(partial_trace(m, Factor::Second).trace() - m.trace()) <= 1e-12);
    CHECK(std::abs(partial_trace(m, Factor::First).trace() - m.trace()) <= 1e-12);
  }
  const BipartiteOperator w2(2, 2, oracle::swap(2));
  CHECK(partial_trace(w2, Factor::Second) == ComplexMatrix::identity(2));

  const double r = 1.0 / std::sqrt(2.0);
  const ComplexVector x{r, 0.0, 0.0, r};
  const ComplexMatrix marginal = partial_trace(BipartiteOperator(2, 2, projector(x)), Factor::First);
  CHECK(oracle::max_diff(marginal, 0.5 * ComplexMatrix::identity(2)) <= 1e-15);
}

TEST_CASE("partial transpose") {
  oracle::Gen gen(11);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = gen.mat(2, 2), b = gen.mat(3, 3);
    CHECK(partial_transpose(tensor(a, b)) == tensor(a, b.transpose()));
    const BipartiteOperator m(2, 3, gen.mat(6, 6));
    CHECK(partial_transpose(m).matrix() == oracle::partial_transpose(m));
    CHECK(partial_transpose(partial_transpose(m)) == m);
    const BipartiteOperator h(3, 3, gen.herm(9));
    CHECK(is_hermitian(partial_transpose(h).matrix(), 1e-14));
  }
  // tau_P(w) = 3 P_y with y = sum e_i (x) e_i / sqrt 3
  ComplexVector y(9);
  for (std::size_t i = 0; i < 3; ++i) y[i * 3 + i] = 1.0 / std::sqrt(3.0);
  const BipartiteOperator w(3, 3, oracle::swap(3));
  CHECK(oracle::max_diff(partial_transpose(w).matrix(), 3.0 * ComplexMatrix::outer(y, y)) <= 1e-15);
}

TEST_CASE("local conjugation") {
  oracle::Gen gen(21);
  const BipartiteOperator m(3, 3, gen.herm(9));
  CHECK(local_conjugate(m, ComplexMatrix::identity(3), ComplexMatrix::identity(3)) == m);
  CHECK_THROWS_AS(local_conjugate(m, 2.0 * ComplexMatrix::identity(3), ComplexMatrix::identity(3)),
                  Error);

  const ComplexMatrix u = gen.unitary(3), v = gen.unitary(3);
  const BipartiteOperator c = local_conjugate(m, u, v);
  const ComplexMatrix uv = oracle::kron(u, v);
  CHECK(oracle::max_diff(c.matrix(), oracle::matmul(oracle::matmul(uv, m.matrix()), oracle::dagger(uv))) <=
        1e-12);
  const EigenSystem before = eig_hermitian(m.matrix());
  const EigenSystem after = eig_hermitian(c.matrix());
  for (std::size_t k = 0; k < 9; ++k) CHECK(after.values[k] == doctest::Approx(before.values[k]).epsilon(1e-12));
}

TEST_CASE("partial transpose of a local conjugation moves V to conj(V)") {
  for (unsigned seed = 0; seed < 200; ++seed) {
    oracle::Gen gen(5000 + seed);
    const BipartiteOperator a(3, 3, gen.mat(9, 9));
    const ComplexMatrix u = gen.unitary(3), v = gen.unitary(3);
    const ComplexMatrix lhs = partial_transpose(local_conjugate(a, u, v)).matrix();
    // (U (x) tau(V*)) tau_P(a) (U (x) tau(V*))*, computed with the naive kernels
    const ComplexMatrix uvb = oracle::kron(u, v.conjugate());
    const ComplexMatrix rhs =
        oracle::matmul(oracle::matmul(uvb, oracle::partial_transpose(a)), oracle::dagger(uvb));
    CHECK(oracle::max_diff(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("orthonormalize and complete_basis") {
  oracle::Gen gen(2);
  std::vector<ComplexVector> family{gen.vec(4), gen.vec(4)};
  family.push_back(family[0]);  // dependent, dropped
  const auto basis = orthonormalize(family);
  CHECK(basis.size() == 2);
  const auto full = complete_basis(basis, 4);
  REQUIRE(full.size() == 4);
  CHECK(orthonormality_defect(ComplexMatrix::from_columns(full)) < 1e-13);
}
