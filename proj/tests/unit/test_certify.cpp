#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "posmap/certify.hpp"
#include "posmap/choi.hpp"
#include "posmap/choifamily.hpp"
#include "posmap/linalg.hpp"
#include "posmap/random.hpp"

using namespace posmap;

namespace {

ComplexVector printed_vector() {
  // (e1 + e3)/2 + e2/sqrt2
  return {0.5, 1.0 / std::sqrt(2.0), 0.5};
}

}  // namespace

TEST_CASE("contraction examples") {
  oracle::Gen gen(1);
  SUBCASE("product operator") {
    const ComplexMatrix a = gen.herm(3), b = gen.herm(3);
    const ComplexVector y = gen.unit(3);
    const Complex yby = inner(y, b * y);
    CHECK(oracle::max_diff(contraction(tensor(a, b), y, Factor::Second), yby * a) <= 1e-13);
  }
  SUBCASE("w minus") {
    const ComplexVector y = gen.unit(3);
    const ComplexMatrix by = contraction(w_minus(), y, Factor::Second);
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t l = 0; l < 3; ++l) {
        const double eps = k == l ? 1.0 : -1.0;
        CHECK(std::abs(by(k, l) - eps * y[k] * std::conj(y[l])) <= 1e-15);
      }
  }
  SUBCASE("quadratic form") {
    for (int t = 0; t < 50; ++t) {
      const BipartiteOperator rho(3, 2, gen.herm(6));
      const ComplexVector x = gen.unit(3), y = gen.unit(2);
      const ComplexMatrix b = contraction(rho, y, Factor::Second);
      const ComplexMatrix a = contraction(rho, x, Factor::First);
      const double q = oracle::quad_form(rho, x, y);
      CHECK(inner(x, b * x).real() == doctest::Approx(q).epsilon(1e-12));
      CHECK(inner(y, a * y).real() == doctest::Approx(q).epsilon(1e-12));
      CHECK(product_value(rho, x, y) == doctest::Approx(q).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(contraction(w_minus(), ComplexVector{1.0, 1.0, 0.0}, Factor::Second), Error);
}

TEST_CASE("block positivity of w minus") {
  const BipartiteOperator wm = w_minus();
  CHECK(oracle::quad_form(wm, printed_vector(), printed_vector()) ==
        doctest::Approx(-0.25).epsilon(1e-14));

  const std::vector<ProductStart> seeded{{printed_vector(), printed_vector()}};
  const SeeSawRun run = block_descent(wm, printed_vector(), printed_vector(), 0, 1e-9);
  CHECK(std::abs(run.value + 0.25) <= 1e-12);

  const BlockPositivityCertificate cert = block_positivity(wm, {}, seeded);
  CHECK(cert.restarts_used == 101);
  REQUIRE(cert.has_witness());
  CHECK(cert.min_value_found <= -0.25 + 1e-9);
  CHECK(oracle::quad_form(wm, *cert.witness_x, *cert.witness_y) ==
        doctest::Approx(cert.min_value_found).epsilon(1e-10));
}

TEST_CASE("block positivity: positive examples and a negative segment point") {
  const BlockPositivityCertificate w = block_positivity(transposition_choi(3));
  CHECK_FALSE(w.has_witness());
  CHECK(w.min_value_found >= -1e-10);

  const BlockPositivityCertificate r = block_positivity(rho_lambda(0.4));
  REQUIRE(r.has_witness());
  CHECK(r.min_value_found < -1e-4);

  oracle::Gen gen(3);
  CHECK_THROWS_AS(block_positivity(BipartiteOperator(2, 2, gen.mat(4, 4))), Error);
}

TEST_CASE("see-saw descent is monotone and witnesses recompute") {
  for (unsigned seed = 0; seed < 30; ++seed) {
    oracle::Gen gen(100 + seed);
    const BipartiteOperator rho(3, 3, gen.herm(9));
    const SeeSawRun run = block_descent(rho, gen.unit(3), gen.unit(3), 200, 1e-9);
    for (std::size_t k = 1; k < run.history.size(); ++k)
      CHECK(run.history[k] <= run.history[k - 1] + 1e-12);
    CHECK(oracle::quad_form(rho, run.x, run.y) == doctest::Approx(run.value).epsilon(1e-10));

    SeeSawOptions opts;
    opts.restarts = 10;
    opts.seed = seed;
    const BlockPositivityCertificate cert = block_positivity(rho, opts);
    if (cert.has_witness()) {
      CHECK(std::abs(oracle::quad_form(rho, *cert.witness_x, *cert.witness_y) -
                     cert.min_value_found) <= 1e-10);
    }
  }
}

TEST_CASE("certificates are reproducible for a fixed seed") {
  SeeSawOptions opts;
  opts.seed = 42;
  const BlockPositivityCertificate a = block_positivity(w_minus(), opts);
  const BlockPositivityCertificate b = block_positivity(w_minus(), opts);
  CHECK(a.min_value_found == b.min_value_found);
  CHECK(*a.witness_x == *b.witness_x);
  CHECK(*a.witness_y == *b.witness_y);
}

TEST_CASE("exact inner step equals the trace norm") {
  for (unsigned seed = 0; seed < 100; ++seed) {
    oracle::Gen gen(200 + seed);
    const BipartiteOperator rho(3, 3, gen.herm(9));
    const ComplexMatrix b = hermitian_part(contraction(rho, gen.unit(3), Factor::Second));
    const EigenSystem es = eig_hermitian(b);
    const double tr = b.trace().real();
    // enumerate projector ranks onto the k lowest and k highest eigenvalues
    double best = 0.0;
    for (std::size_t k = 0; k <= 3; ++k) {
      double low = 0.0, high = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        low += es.values[i];
        high += es.values[2 - i];
      }
      best = std::max({best, std::abs(tr - 2.0 * low), std::abs(tr - 2.0 * high)});
    }
    CHECK(std::abs(best - trace_norm(b)) <= 1e-12);
    const ComplexMatrix s = sign_symmetry(b);
    CHECK(std::abs((b * s).trace().real() - trace_norm(b)) <= 1e-12);
    CHECK(oracle::max_diff(s * s, ComplexMatrix::identity(3)) <= 1e-12);
  }
}

TEST_CASE("alpha norm examples") {
  CHECK(alpha_norm(w_minus()).value == doctest::Approx(5.0 / 3.0).epsilon(1e-7));
  CHECK(std::abs(alpha_norm(transposition_choi(3)).value - 1.0) <= 1e-9);
  CHECK(std::abs(alpha_norm(r_matrix()).value - 1.0) <= 1e-9);

  const AlphaNormEstimate est = alpha_norm(w_minus());
  const ComplexMatrix p = projector(est.maximizer_y);
  const ComplexMatrix sp = oracle::kron(est.maximizer_symmetry, p);
  CHECK(std::abs(std::abs(oracle::matmul(w_minus().matrix(), sp).trace()) - est.value) <= 1e-9);
}

TEST_CASE("alpha ascent is monotone") {
  for (unsigned seed = 0; seed < 30; ++seed) {
    oracle::Gen gen(300 + seed);
    const BipartiteOperator rho(3, 3, gen.herm(9));
    const SeeSawRun run = alpha_ascent(rho, gen.unit(3), 200, 1e-9);
    for (std::size_t k = 1; k < run.history.size(); ++k)
      CHECK(run.history[k] >= run.history[k - 1] - 1e-12);
  }
}

TEST_CASE("members of D have alpha norm one") {
  for (const BipartiteOperator& rho :
       {transposition_choi(3), r_matrix(), max_entangled_choi(3), choi_map_classic(), rho_lambda(0.7)}) {
    REQUIRE(membership_D(rho).verdict == MembershipVerdict::Member);
    CHECK(std::abs(alpha_norm(rho).value - 1.0) <= 1e-6);
  }
}

TEST_CASE("CP and coCP") {
  CHECK(is_cp(max_entangled_choi(3)));
  CHECK_FALSE(is_cocp(max_entangled_choi(3)));
  CHECK_FALSE(is_cp(transposition_choi(3)));
  CHECK(is_cocp(transposition_choi(3)));
  oracle::Gen gen(9);
  CHECK_THROWS_AS(is_cp(BipartiteOperator(2, 2, gen.mat(4, 4))), Error);
}
