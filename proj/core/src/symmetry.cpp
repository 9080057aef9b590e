#include "posmap/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "posmap/choi.hpp"
#include "posmap/linalg.hpp"
#include "posmap/random.hpp"
#include "posmap/schmidt.hpp"

namespace posmap {

std::string_view to_string(InvolutionKind kind) noexcept {
  switch (kind) {
    case InvolutionKind::Symmetry: return "symmetry";
    case InvolutionKind::PartialSymmetry: return "partial_symmetry";
    case InvolutionKind::Neither: return "neither";
  }
  return "neither";
}

std::string_view to_string(ReductionFailure reason) noexcept {
  switch (reason) {
    case ReductionFailure::PartialTransposeNotRankOne: return "partial-transpose not rank-one";
    case ReductionFailure::NotMaximallyEntangled: return "not maximally entangled";
  }
  return "unknown";
}

NotReducible::NotReducible(ReductionFailure reason, const std::string& detail)
    : Error(ErrorCode::NotReducible,
            std::string(to_string(reason)) + (detail.empty() ? "" : " (" + detail + ")")),
      reason_(reason) {}

InvolutionClass classify_involution(const ComplexMatrix& s, double tol) {
  InvolutionClass out;
  if (!s.is_square() || !is_hermitian(s, tol)) return out;

  const EigenSystem es = eig_hermitian(s, tol);
  for (double v : es.values) {
    if (std::abs(v - 1.0) <= tol) {
      ++out.rank_p;
    } else if (std::abs(v + 1.0) <= tol) {
      ++out.rank_q;
    } else if (std::abs(v) > tol) {
      return out;
    }
  }
  out.support_rank = out.rank_p + out.rank_q;
  const ComplexMatrix herm = hermitian_part(s);
  out.e = herm * herm;
  out.p = out.e + herm;
  out.p *= 0.5;
  out.q = out.e - herm;
  out.q *= 0.5;
  if (out.support_rank == s.rows()) {
    out.kind = InvolutionKind::Symmetry;
  } else if (out.support_rank > 0) {
    out.kind = InvolutionKind::PartialSymmetry;
  }
  return out;
}

InvolutionClass classify_involution(const BipartiteOperator& s, double tol) {
  return classify_involution(s.matrix(), tol);
}

SchmidtRangeReport q_range_schmidt_check(const BipartiteOperator& s, std::size_t samples,
                                         std::uint64_t seed) {
  if (classify_involution(s).kind != InvolutionKind::Symmetry) {
    throw Error(ErrorCode::NotSymmetry, "q_range_schmidt_check requires a symmetry");
  }
  const std::size_t n = s.dim1(), m = s.dim2();
  // range(q) is the -1 eigenspace of s.
  const EigenSystem es = eig_hermitian(s.matrix());
  std::vector<ComplexVector> basis;
  for (std::size_t k = 0; k < es.values.size(); ++k)
    if (es.values[k] < 0.0) basis.push_back(es.vector(k));

  std::vector<double> target(std::min(n, m), 0.0);
  for (std::size_t k = 0; k < std::min<std::size_t>(2, target.size()); ++k)
    target[k] = 1.0 / std::sqrt(2.0);

  SchmidtRangeReport report;
  report.range_dimension = basis.size();
  Rng rng(seed);
  for (std::size_t t = 0; t < samples && !basis.empty(); ++t) {
    const ComplexVector weights = random_gaussian_vector(rng, basis.size());
    ComplexVector v(n * m);
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += weights[b] * basis[b][i];
    v = normalized(v);

    const SchmidtDecomposition d = schmidt(v, n, m);
    double dev = 0.0;
    for (std::size_t k = 0; k < target.size(); ++k)
      dev = std::max(dev, std::abs(d.coefficients[k] - target[k]));
    ++report.samples;
    if (dev > report.worst_deviation || report.worst_vector.empty()) {
      report.worst_deviation = std::max(dev, report.worst_deviation);
      report.worst_vector = v;
    }
  }
  report.pass = report.worst_deviation <= 1e-9;
  return report;
}

ReductionResult reduce_to_transposition(const BipartiteOperator& s, double tol) {
  if (s.dim1() != s.dim2()) {
    throw Error(ErrorCode::DimensionMismatch, "reduction needs equal factor dimensions");
  }
  if (!is_hermitian(s.matrix(), 1e-10)) {
    throw Error(ErrorCode::NotHermitian, "reduction input must be Hermitian");
  }
  const std::size_t n = s.dim1();
  const double nd = static_cast<double>(n);

  const BipartiteOperator m = partial_transpose(s);
  const EigenSystem es = eig_hermitian(m.matrix());
  const double top = es.values.back();
  double rest = 0.0;
  for (std::size_t k = 0; k + 1 < es.values.size(); ++k)
    rest = std::max(rest, std::abs(es.values[k]));
  if (std::abs(top - nd) > tol * nd || rest > tol * nd) {
    throw NotReducible(ReductionFailure::PartialTransposeNotRankOne,
                       "top eigenvalue " + std::to_string(top) + ", largest other |eigenvalue| " +
                           std::to_string(rest));
  }

  ReductionResult result;
  result.entangled_vector = es.vector(es.values.size() - 1);
  const SchmidtDecomposition d = schmidt(result.entangled_vector, n, n);
  const double target = 1.0 / std::sqrt(nd);
  for (double c : d.coefficients) {
    if (std::abs(c - target) > tol) {
      throw NotReducible(ReductionFailure::NotMaximallyEntangled,
                         "Schmidt coefficient " + std::to_string(c));
    }
  }
  result.u = ComplexMatrix::from_columns(d.left_vectors);
  result.v = ComplexMatrix::from_columns(d.right_vectors);
  result.reconstruction_error = frobenius_norm(reduction_reconstruct(result).matrix() - s.matrix());
  return result;
}

BipartiteOperator reduction_reconstruct(const ReductionResult& r) {
  // tau(V*) = conj(V)
  return local_conjugate(transposition_choi(r.u.rows()), r.u, r.v.conjugate());
}

BipartiteOperator s0_symmetry() {
  auto e = [](std::size_t i, std::size_t j) { return kron(basis_vector(3, i), basis_vector(3, j)); };
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix s = ComplexMatrix::identity(9);
  for (const auto& [a, b, sign] : {std::tuple{e(0, 0), e(1, 1), 1.0}, std::tuple{e(0, 2), e(2, 1), 1.0},
                                    std::tuple{e(1, 2), e(2, 0), -1.0}}) {
    ComplexVector x(9);
    for (std::size_t k = 0; k < 9; ++k) x[k] = r * (a[k] + sign * b[k]);
    s -= 2.0 * ComplexMatrix::outer(x, x);
  }
  return {3, 3, s};
}

BipartiteOperator random_symmetry_in_D(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const ComplexMatrix u = random_unitary(rng, n);
  const ComplexMatrix v = random_unitary(rng, n);
  return local_conjugate(transposition_choi(n), u, v);
}

double exposedness_gap(const BipartiteOperator& sigma) {
  if (sigma.dim1() != sigma.dim2()) {
    throw Error(ErrorCode::DimensionMismatch, "exposedness gap needs equal factors");
  }
  const std::size_t n = sigma.dim1();
  // Tr(w sigma) = sum_{i,k} sigma[(k,i),(i,k)]
  Complex tr = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) tr += sigma(k * n + i, i * n + k);
  return static_cast<double>(n * n) - tr.real();
}

BipartiteOperator embedded_swap_2_in_3() {
  BipartiteOperator w = BipartiteOperator::zeros(3, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) w.set_block(i, j, ComplexMatrix::unit(3, j, i));
  return w;
}

namespace {

BipartiteOperator embedded_swap_plus(std::span<const Complex> z) {
  // w_2 + P_{z (x) e3}
  const ComplexVector x = kron(z, basis_vector(3, 2));
  return embedded_swap_2_in_3() + BipartiteOperator(3, 3, projector(x));
}

BipartiteOperator spectral_partial_symmetry(Rng& rng, std::size_t rank_p, std::size_t rank_q) {
  std::vector<ComplexVector> raw;
  for (std::size_t k = 0; k < rank_p + rank_q; ++k) {
    const bool product = std::bernoulli_distribution(0.5)(rng);
    raw.push_back(product ? kron(random_unit_vector(rng, 3), random_unit_vector(rng, 3))
                          : random_unit_vector(rng, 9));
  }
  const auto basis = orthonormalize(raw, 1e-8);
  ComplexMatrix s(9, 9);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const double sign = k < rank_q ? -1.0 : 1.0;
    s += sign * ComplexMatrix::outer(basis[k], basis[k]);
  }
  return {3, 3, hermitian_part(s)};
}

BipartiteOperator deflated_swap(Rng& rng) {
  // w - P_u + P_v with u symmetric and v antisymmetric: support rank 7, trace 3.
  const BipartiteOperator w = transposition_choi(3);
  const ComplexMatrix sym = hermitian_part(w.matrix() + ComplexMatrix::identity(9)) * 0.5;
  const ComplexMatrix anti = hermitian_part(ComplexMatrix::identity(9) - w.matrix()) * 0.5;
  const ComplexVector u = normalized(sym * random_gaussian_vector(rng, 9));
  const ComplexVector v = normalized(anti * random_gaussian_vector(rng, 9));
  const BipartiteOperator s(3, 3, w.matrix() - projector(u) + projector(v));
  const ComplexMatrix a = random_unitary(rng, 3);
  const ComplexMatrix b = random_unitary(rng, 3);
  return local_conjugate(s, a, b);
}

}  // namespace

BipartiteOperator partial_symmetry_fixture(PartialFixture which) {
  if (which == PartialFixture::EmbeddedSwapPlusE12E3) {
    const ComplexVector z{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0};
    return embedded_swap_plus(z);
  }
  return embedded_swap_plus(basis_vector(3, 2));
}

PartialSymmetrySearchReport partial_symmetry_search(std::size_t trials, std::uint64_t seed,
                                                    const SeeSawOptions& membership_budget) {
  PartialSymmetrySearchReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(seed + t);
    BipartiteOperator s;
    std::string family;
    if (t == 0) {
      s = partial_symmetry_fixture(PartialFixture::EmbeddedSwapPlusE12E3);
      family = "fixture-e12e3";
    } else if (t == 1) {
      s = partial_symmetry_fixture(PartialFixture::EmbeddedSwapPlusE3E3);
      family = "fixture-e3e3";
    } else {
      switch (t % 3) {
        case 0: {
          const ComplexVector z = random_unit_vector(rng, 3);
          const ComplexMatrix a = random_unitary(rng, 3);
          const ComplexMatrix b = random_unitary(rng, 3);
          s = local_conjugate(embedded_swap_plus(z), a, b);
          family = "embedded-swap";
          break;
        }
        case 1: {
          const bool rank7 = std::bernoulli_distribution(0.5)(rng);
          s = rank7 ? spectral_partial_symmetry(rng, 5, 2) : spectral_partial_symmetry(rng, 4, 1);
          family = "spectral";
          break;
        }
        default:
          s = deflated_swap(rng);
          family = "deflated-swap";
          break;
      }
    }

    const InvolutionClass cls = classify_involution(s, 1e-9);
    if (cls.kind != InvolutionKind::PartialSymmetry) continue;
    ++report.partial_symmetries_built;

    SeeSawOptions budget = membership_budget;
    budget.seed = membership_budget.seed + 1000003ULL * t;
    const DMembershipReport mem = membership_D(s, budget, 1e-9);
    if (mem.verdict != MembershipVerdict::Member) continue;

    PartialSymmetryFinding finding;
    finding.trial = t;
    finding.family = family;
    finding.support_rank = cls.support_rank;
    finding.cp = is_cp(s);
    finding.cocp = is_cocp(s);
    if (finding.support_rank == 7 || (!finding.cp && !finding.cocp)) {
      finding.flag = std::string(kCounterexampleLabel);
      ++report.counterexample_candidates;
    }
    finding.s = s;
    report.members.push_back(std::move(finding));
  }
  return report;
}

}  // namespace posmap
