#include "posmap/certify.hpp"

#include <cmath>
#include <limits>

#include "posmap/linalg.hpp"
#include "posmap/parallel.hpp"
#include "posmap/random.hpp"

namespace posmap {

namespace {

void require_hermitian(const BipartiteOperator& rho, const char* where) {
  if (!is_hermitian(rho.matrix(), 1e-10)) {
    throw Error(ErrorCode::NotHermitian, std::string(where) + " requires a Hermitian operator");
  }
}

ComplexMatrix projector_unchecked(std::span<const Complex> v) {
  return ComplexMatrix::outer(v, v);
}

}  // namespace

double product_value(const BipartiteOperator& rho, std::span<const Complex> x,
                     std::span<const Complex> y) {
  if (x.size() != rho.dim1() || y.size() != rho.dim2()) {
    throw Error(ErrorCode::DimensionMismatch, "product_value vector sizes");
  }
  const ComplexVector xy = kron(x, y);
  return inner(xy, rho.matrix() * xy).real();
}

ComplexMatrix partial_contraction(const BipartiteOperator& rho, const ComplexMatrix& m,
                                  Factor side) {
  const std::size_t n = rho.dim1(), d = rho.dim2();
  if (side == Factor::Second) {
    if (m.rows() != d || m.cols() != d) {
      throw Error(ErrorCode::DimensionMismatch, "contraction on the second factor");
    }
    // out[i,j] = sum_{k,l} rho[(i,k),(j,l)] m[l,k]
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < d; ++l) acc += rho(i * d + k, j * d + l) * m(l, k);
        out(i, j) = acc;
      }
    return out;
  }
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "contraction on the first factor");
  }
  // out[k,l] = sum_{i,j} rho[(i,k),(j,l)] m[j,i]
  ComplexMatrix out(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      Complex acc = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc += rho(i * d + k, j * d + l) * m(j, i);
      out(k, l) = acc;
    }
  return out;
}

ComplexMatrix contraction(const BipartiteOperator& rho, std::span<const Complex> v, Factor side) {
  if (std::abs(norm(v) - 1.0) > 1e-12) {
    throw Error(ErrorCode::NotNormalized, "contraction vector must be a unit vector");
  }
  return partial_contraction(rho, projector_unchecked(v), side);
}

SeeSawRun block_descent(const BipartiteOperator& rho, ComplexVector x0, ComplexVector y0,
                        std::size_t max_iters, double tol) {
  SeeSawRun run;
  run.x = normalized(x0);
  run.y = normalized(y0);
  run.value = product_value(rho, run.x, run.y);
  run.history.push_back(run.value);

  for (std::size_t it = 0; it < max_iters; ++it) {
    const double before = run.value;

    const EigenSystem bx = eig_hermitian(
        hermitian_part(partial_contraction(rho, projector_unchecked(run.y), Factor::Second)));
    run.x = bx.vector(0);
    run.history.push_back(bx.values[0]);

    const EigenSystem ay = eig_hermitian(
        hermitian_part(partial_contraction(rho, projector_unchecked(run.x), Factor::First)));
    run.y = ay.vector(0);
    run.value = ay.values[0];
    run.history.push_back(run.value);

    run.iterations = it + 1;
    if (before - run.value < tol / 10.0) {
      run.converged = true;
      break;
    }
  }
  // The eigenvalue and the recomputed quadratic form agree to rounding.
  run.value = product_value(rho, run.x, run.y);
  return run;
}

BlockPositivityCertificate block_positivity(const BipartiteOperator& rho,
                                            const SeeSawOptions& options,
                                            std::span<const ProductStart> extra_starts) {
  require_hermitian(rho, "block_positivity");
  const std::size_t total = options.restarts + extra_starts.size();
  std::vector<SeeSawRun> runs(total);

  parallel_for(total, [&](std::size_t k) {
    ComplexVector x0, y0;
    if (k < options.restarts) {
      Rng rng(options.seed + k);
      x0 = random_unit_vector(rng, rho.dim1());
      y0 = random_unit_vector(rng, rho.dim2());
    } else {
      x0 = extra_starts[k - options.restarts].x;
      y0 = extra_starts[k - options.restarts].y;
    }
    runs[k] = block_descent(rho, std::move(x0), std::move(y0), options.max_iters, options.tol);
  });

  BlockPositivityCertificate cert;
  cert.restarts_used = total;
  cert.min_value_found = std::numeric_limits<double>::infinity();
  std::size_t best = 0;
  for (std::size_t k = 0; k < total; ++k) {
    if (runs[k].converged) ++cert.converged_restarts;
    if (runs[k].value < cert.min_value_found) {
      cert.min_value_found = runs[k].value;
      best = k;
    }
  }
  if (total == 0) {
    cert.min_value_found = 0.0;
    return cert;
  }
  if (cert.min_value_found < -options.tol) {
    cert.witness_x = runs[best].x;
    cert.witness_y = runs[best].y;
  }
  return cert;
}

double trace_norm(const ComplexMatrix& hermitian) {
  double s = 0.0;
  for (double v : eig_hermitian(hermitian).values) s += std::abs(v);
  return s;
}

ComplexMatrix sign_symmetry(const ComplexMatrix& hermitian) {
  return hermitian_function(hermitian, [](double v) { return v >= 0.0 ? 1.0 : -1.0; });
}

SeeSawRun alpha_ascent(const BipartiteOperator& rho, ComplexVector y0, std::size_t max_iters,
                       double tol) {
  if (rho.dim1() != rho.dim2()) {
    throw Error(ErrorCode::DimensionMismatch, "alpha norm needs square factors");
  }
  auto evaluate = [&](const ComplexVector& y, SeeSawRun& run) {
    const ComplexMatrix b =
        hermitian_part(partial_contraction(rho, projector_unchecked(y), Factor::Second));
    const EigenSystem es = eig_hermitian(b);
    double value = 0.0;
    ComplexMatrix s(b.rows(), b.cols());
    for (std::size_t k = 0; k < es.values.size(); ++k) {
      value += std::abs(es.values[k]);
      const double sign = es.values[k] >= 0.0 ? 1.0 : -1.0;
      for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
          s(i, j) += sign * es.vectors(i, k) * std::conj(es.vectors(j, k));
    }
    run.symmetry = std::move(s);
    run.value = value;
  };

  SeeSawRun run;
  run.y = normalized(y0);
  evaluate(run.y, run);
  run.history.push_back(run.value);

  for (std::size_t it = 0; it < max_iters; ++it) {
    const double before = run.value;
    const EigenSystem as =
        eig_hermitian(hermitian_part(partial_contraction(rho, run.symmetry, Factor::First)));
    const double lo = as.values.front(), hi = as.values.back();
    run.y = std::abs(lo) > std::abs(hi) ? as.vector(0) : as.vector(as.values.size() - 1);
    run.history.push_back(std::max(std::abs(lo), std::abs(hi)));

    evaluate(run.y, run);
    run.history.push_back(run.value);
    run.iterations = it + 1;
    if (run.value - before < tol / 10.0) {
      run.converged = true;
      break;
    }
  }
  return run;
}

AlphaNormEstimate alpha_norm(const BipartiteOperator& rho, const SeeSawOptions& options) {
  require_hermitian(rho, "alpha_norm");
  if (rho.dim1() != rho.dim2()) {
    throw Error(ErrorCode::DimensionMismatch, "alpha norm needs square factors");
  }
  std::vector<SeeSawRun> runs(options.restarts);
  parallel_for(options.restarts, [&](std::size_t k) {
    Rng rng(options.seed + k);
    runs[k] = alpha_ascent(rho, random_unit_vector(rng, rho.dim2()), options.max_iters,
                           options.tol);
  });

  AlphaNormEstimate est;
  est.restarts_used = options.restarts;
  if (runs.empty()) return est;
  std::size_t best = 0;
  for (std::size_t k = 1; k < runs.size(); ++k)
    if (runs[k].value > runs[best].value) best = k;
  est.value = runs[best].value;
  est.maximizer_y = runs[best].y;
  est.maximizer_symmetry = runs[best].symmetry;
  return est;
}

bool is_psd(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, std::max(tol, 1e-10))) {
    throw Error(ErrorCode::NotHermitian, "is_psd requires a Hermitian matrix");
  }
  return eig_hermitian(m, std::max(tol, 1e-10)).values.front() >= -tol;
}

bool is_cp(const BipartiteOperator& rho, double tol) { return is_psd(rho.matrix(), tol); }

bool is_cocp(const BipartiteOperator& rho, double tol) {
  return is_psd(partial_transpose(rho).matrix(), tol);
}

}  // namespace posmap
