#include "posmap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace posmap {

namespace {

constexpr int kMaxSweeps = 100;

void normalize_phase(ComplexMatrix& vectors, std::size_t col) {
  for (std::size_t r = 0; r < vectors.rows(); ++r) {
    const Complex z = vectors(r, col);
    if (std::abs(z) > 1e-10) {
      const Complex phase = std::conj(z) / std::abs(z);
      for (std::size_t k = 0; k < vectors.rows(); ++k) vectors(k, col) *= phase;
      vectors(r, col) = std::abs(z);
      return;
    }
  }
}

}  // namespace

EigenSystem eig_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "eig_hermitian needs a square matrix");
  const std::size_t n = m.rows();
  const double fro = frobenius_norm(m);
  if (hermiticity_defect(m) > tol * fro) {
    throw Error(ErrorCode::NotHermitian, "eig_hermitian input is not Hermitian");
  }

  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double negligible = std::numeric_limits<double>::epsilon() * 1e-2 * fro;

  bool converged = fro == 0.0 || n < 2;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex beta = a(p, q);
        const double mag = std::abs(beta);
        if (mag <= negligible) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        rotated = true;
        const Complex phase = beta / mag;  // e^{i phi}
        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        const double zeta = (gamma - alpha) / (2.0 * mag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // G = diag(1, e^{-i phi}) * [[c, s], [-s, c]] on the (p, q) plane.
        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = alpha - t * mag;
        a(q, q) = gamma + t * mag;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
    converged = !rotated;
  }
  if (!converged) throw Error(ErrorCode::NoConvergence, "Jacobi sweep budget exhausted");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    normalize_phase(out.vectors, k);
  }
  return out;
}

std::vector<ComplexVector> orthonormalize(const std::vector<ComplexVector>& vectors,
                                          double drop_tol) {
  std::vector<ComplexVector> basis;
  for (const ComplexVector& vec : vectors) {
    ComplexVector w = vec;
    for (int pass = 0; pass < 2; ++pass) {
      for (const ComplexVector& b : basis) {
        const Complex proj = inner(b, w);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= proj * b[i];
      }
    }
    const double len = norm(w);
    if (len > drop_tol) {
      for (Complex& z : w) z /= len;
      basis.push_back(std::move(w));
    }
  }
  return basis;
}

std::vector<ComplexVector> complete_basis(std::vector<ComplexVector> family, std::size_t n) {
  for (std::size_t i = 0; i < n && family.size() < n; ++i) {
    std::vector<ComplexVector> candidate = family;
    candidate.push_back(basis_vector(n, i));
    auto extended = orthonormalize(candidate, 1e-6);
    if (extended.size() > family.size()) family.push_back(extended.back());
  }
  return family;
}

SvdResult svd(const ComplexMatrix& m) {
  if (m.rows() < m.cols()) {
    SvdResult t = svd(m.adjoint());
    return {std::move(t.v), std::move(t.singular), std::move(t.u)};
  }
  const std::size_t k = m.cols();
  const EigenSystem es = eig_hermitian(hermitian_part(m.adjoint() * m), 1e-8);

  struct Triple {
    double s;
    ComplexVector v;
    ComplexVector mv;
  };
  std::vector<Triple> triples;
  triples.reserve(k);
  for (std::size_t idx = k; idx-- > 0;) {
    ComplexVector vk = es.vector(idx);
    ComplexVector mv = m * vk;
    triples.push_back({norm(mv), std::move(vk), std::move(mv)});
  }
  std::stable_sort(triples.begin(), triples.end(),
                   [](const Triple& x, const Triple& y) { return x.s > y.s; });

  const double smax = triples.empty() ? 0.0 : triples.front().s;
  const double vanishing = 10.0 * std::numeric_limits<double>::epsilon() * smax;

  SvdResult out;
  out.singular.resize(k);
  out.v = ComplexMatrix(k, k);
  std::vector<ComplexVector> left;
  for (std::size_t j = 0; j < k; ++j) {
    out.v.set_column(j, triples[j].v);
    if (triples[j].s > vanishing && smax > 0.0) {
      out.singular[j] = triples[j].s;
      ComplexVector u = triples[j].mv;
      for (int pass = 0; pass < 2; ++pass) {
        for (const ComplexVector& b : left) {
          const Complex proj = inner(b, u);
          for (std::size_t i = 0; i < u.size(); ++i) u[i] -= proj * b[i];
        }
      }
      left.push_back(normalized(u));
    } else {
      out.singular[j] = 0.0;
    }
  }
  left = complete_basis(std::move(left), m.rows());
  out.u = ComplexMatrix(m.rows(), k);
  for (std::size_t j = 0; j < k; ++j) out.u.set_column(j, left[j]);
  return out;
}

ComplexMatrix hermitian_function(const ComplexMatrix& m, const std::function<double(double)>& f) {
  const EigenSystem es = eig_hermitian(m);
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(es.values[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += fk * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  return out;
}

std::size_t count_above(const std::vector<double>& values, double tol) {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [tol](double x) { return x > tol; }));
}

}  // namespace posmap
