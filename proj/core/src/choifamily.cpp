#include "posmap/choifamily.hpp"

#include <cmath>
#include <string>

#include "posmap/parallel.hpp"

namespace posmap {

namespace {

ComplexMatrix apply_phi_abc(const ChoiFamilyParams& p, const ComplexMatrix& x) {
  const Complex x11 = x(0, 0), x22 = x(1, 1), x33 = x(2, 2);
  ComplexMatrix out = -1.0 * x;
  out(0, 0) += p.a * x11 + p.b * x22 + p.c * x33;
  out(1, 1) += p.a * x22 + p.b * x33 + p.c * x11;
  out(2, 2) += p.a * x33 + p.b * x11 + p.c * x22;
  return out;
}

bool positive_shifted(const ChoiFamilyParams& p, double shift) {
  if (p.a < 1.0 + shift) return false;
  if (p.a + p.b + p.c < 3.0 + shift) return false;
  if (p.a >= 1.0 && p.a <= 2.0 && p.b * p.c < (2.0 - p.a) * (2.0 - p.a) + shift) return false;
  return true;
}

}  // namespace

void validate(const ChoiFamilyParams& params) {
  for (double v : {params.a, params.b, params.c}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::OutOfRange, "Choi family parameters must be finite and >= 0");
    }
  }
}

MapImages phi_abc_images(const ChoiFamilyParams& params) {
  validate(params);
  return MapImages::from_map(3, 3, [&](const ComplexMatrix& x) { return apply_phi_abc(params, x); });
}

bool is_positive_abc(const ChoiFamilyParams& params) {
  validate(params);
  return positive_shifted(params, 0.0);
}

bool near_positivity_boundary(const ChoiFamilyParams& params, double margin) {
  return positive_shifted(params, -margin) != positive_shifted(params, margin);
}

BipartiteOperator w_minus() {
  BipartiteOperator w = BipartiteOperator::zeros(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      ComplexMatrix b = ComplexMatrix::unit(3, j, i);
      if (i != j) b *= -1.0;
      w.set_block(i, j, b);
    }
  return w;
}

BipartiteOperator r_matrix() {
  return tensor(ComplexMatrix::unit(3, 0, 0), ComplexMatrix::unit(3, 1, 1)) +
         tensor(ComplexMatrix::unit(3, 1, 1), ComplexMatrix::unit(3, 2, 2)) +
         tensor(ComplexMatrix::unit(3, 2, 2), ComplexMatrix::unit(3, 0, 0));
}

BipartiteOperator rho_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "lambda must lie in [0, 1]");
  }
  return lambda * r_matrix() + (1.0 - lambda) * w_minus();
}

MapImages rho_lambda_map_images(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorCode::OutOfRange, "lambda must lie in [0, 1]");
  }
  if (lambda == 1.0) {
    return MapImages::from_map(3, 3, [](const ComplexMatrix& x) {
      ComplexMatrix out(3, 3);
      out(0, 0) = x(2, 2);
      out(1, 1) = x(0, 0);
      out(2, 2) = x(1, 1);
      return out;
    });
  }
  const ChoiFamilyParams p{2.0, 0.0, lambda / (1.0 - lambda)};
  return MapImages::from_map(3, 3, [&](const ComplexMatrix& x) {
    return (1.0 - lambda) * apply_phi_abc(p, x);
  });
}

BipartiteOperator choi_map_classic() {
  const ChoiFamilyParams p{2.0, 0.0, 1.0};
  return choi_of(MapImages::from_map(3, 3, [&](const ComplexMatrix& x) {
    return 0.5 * apply_phi_abc(p, x);
  }));
}

std::vector<SweepRow> sweep_choi_family(double step, const SeeSawOptions& options,
                                        double boundary_margin) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorCode::OutOfRange, "grid step must be positive");
  }
  std::vector<double> axis;
  if (step <= 3.0) {
    const auto count = static_cast<std::size_t>(std::floor(3.0 / step + 1e-9)) + 1;
    for (std::size_t k = 0; k < count; ++k) axis.push_back(static_cast<double>(k) * step);
  }

  std::vector<SweepRow> rows;
  rows.reserve(axis.size() * axis.size() * axis.size());
  for (double a : axis)
    for (double b : axis)
      for (double c : axis) rows.push_back({{a, b, c}});

  parallel_for(rows.size(), [&](std::size_t idx) {
    SweepRow& row = rows[idx];
    SeeSawOptions local = options;
    local.seed = options.seed + idx * std::max<std::size_t>(options.restarts, 1);
    const BipartiteOperator rho = choi_of(phi_abc_images(row.params));
    const BlockPositivityCertificate cert = block_positivity(rho, local);
    row.condition = is_positive_abc(row.params);
    row.certifier = !cert.has_witness();
    row.min_value = cert.min_value_found;
    row.near_boundary = near_positivity_boundary(row.params, boundary_margin);
    if (!row.near_boundary) {
      row.disagreement = row.condition != row.certifier ||
                         (!row.condition && !(cert.min_value_found < -1e-6));
    }
  });
  return rows;
}

std::vector<SegmentRow> sweep_rho_lambda(std::size_t points, const SeeSawOptions& options) {
  std::vector<SegmentRow> rows(points);
  for (std::size_t k = 0; k < points; ++k) {
    const double lambda =
        points == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(points - 1);
    SeeSawOptions local = options;
    local.seed = options.seed + k * std::max<std::size_t>(options.restarts, 1);
    const DMembershipReport rep = membership_D(rho_lambda(lambda), local);
    SegmentRow& row = rows[k];
    row.lambda = lambda;
    row.expected_member = lambda >= 0.5;
    row.verdict = rep.verdict;
    row.min_value = rep.block_positive ? rep.block_positive->min_value_found : 0.0;
    row.has_witness = rep.block_positive && rep.block_positive->has_witness();
  }
  return rows;
}

}  // namespace posmap
