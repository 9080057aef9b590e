#include "posmap/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace posmap {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(data_.size()));
  }
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::NonFinite, "matrix entry is not finite");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix m(n, n);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
  ComplexMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

ComplexMatrix ComplexMatrix::from_columns(const std::vector<ComplexVector>& columns) {
  if (columns.empty()) return {};
  ComplexMatrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
  ComplexVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void ComplexMatrix::set_column(std::size_t c, std::span<const Complex> v) {
  if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "set_column length");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m = *this;
  for (Complex& z : m.data_) z = std::conj(z);
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "matrix addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "matrix subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }
ComplexMatrix operator*(ComplexMatrix m, Complex scale) { return m *= scale; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product inner dimensions");
  }
  ComplexMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
    }
  }
  return m;
}

ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  ComplexVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const Complex& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs(const ComplexMatrix& m) {
  double best = 0.0;
  for (const Complex& z : m.entries()) best = std::max(best, std::abs(z));
  return best;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "hermiticity of non-square");
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::norm(m(i, j) - std::conj(m(j, i)));
  return std::sqrt(s);
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.is_square() && hermiticity_defect(m) <= tol * std::max(1.0, frobenius_norm(m));
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  return frobenius_norm(m.adjoint() * m - ComplexMatrix::identity(m.rows())) <= tol;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix h = m + m.adjoint();
  h *= 0.5;
  return h;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t p = b.rows(), q = b.cols();
  ComplexMatrix m(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l) m(i * p + k, j * q + l) = aij * b(k, l);
    }
  return m;
}

ComplexVector kron(std::span<const Complex> u, std::span<const Complex> v) {
  ComplexVector out(u.size() * v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t k = 0; k < v.size(); ++k) out[i * v.size() + k] = u[i] * v[k];
  return out;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "inner product");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

ComplexVector normalized(std::span<const Complex> v) {
  const double n = norm(v);
  if (n == 0.0) throw Error(ErrorCode::NotNormalized, "cannot normalize the zero vector");
  ComplexVector out(v.begin(), v.end());
  for (Complex& z : out) z /= n;
  return out;
}

ComplexVector conjugate(std::span<const Complex> v) {
  ComplexVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::conj(v[i]);
  return out;
}

ComplexMatrix projector(std::span<const Complex> v) {
  const double n2 = std::pow(norm(v), 2);
  if (n2 == 0.0) throw Error(ErrorCode::NotNormalized, "projector onto the zero vector");
  ComplexMatrix p = ComplexMatrix::outer(v, v);
  p *= 1.0 / n2;
  return p;
}

ComplexVector basis_vector(std::size_t n, std::size_t i) {
  ComplexVector e(n);
  e.at(i) = 1.0;
  return e;
}

// ---------------------------------------------------------------------------

BipartiteOperator::BipartiteOperator(std::size_t dim1, std::size_t dim2, ComplexMatrix matrix)
    : dim1_(dim1), dim2_(dim2), matrix_(std::move(matrix)) {
  if (matrix_.rows() != dim1 * dim2 || matrix_.cols() != dim1 * dim2) {
    throw Error(ErrorCode::DimensionMismatch,
                "bipartite operator on " + std::to_string(dim1) + "x" + std::to_string(dim2) +
                    " needs a square matrix of size " + std::to_string(dim1 * dim2));
  }
}

BipartiteOperator BipartiteOperator::zeros(std::size_t dim1, std::size_t dim2) {
  return {dim1, dim2, ComplexMatrix(dim1 * dim2, dim1 * dim2)};
}

BipartiteOperator BipartiteOperator::from_blocks(std::size_t dim1, std::size_t dim2,
                                                 const std::vector<ComplexMatrix>& blocks) {
  if (blocks.size() != dim1 * dim1) {
    throw Error(ErrorCode::DimensionMismatch, "from_blocks needs dim1^2 blocks");
  }
  BipartiteOperator op = zeros(dim1, dim2);
  for (std::size_t i = 0; i < dim1; ++i)
    for (std::size_t j = 0; j < dim1; ++j) op.set_block(i, j, blocks[i * dim1 + j]);
  return op;
}

ComplexMatrix BipartiteOperator::block(std::size_t i, std::size_t j) const {
  ComplexMatrix b(dim2_, dim2_);
  for (std::size_t k = 0; k < dim2_; ++k)
    for (std::size_t l = 0; l < dim2_; ++l) b(k, l) = matrix_(i * dim2_ + k, j * dim2_ + l);
  return b;
}

void BipartiteOperator::set_block(std::size_t i, std::size_t j, const ComplexMatrix& b) {
  if (b.rows() != dim2_ || b.cols() != dim2_) {
    throw Error(ErrorCode::DimensionMismatch, "block size must equal dim2");
  }
  for (std::size_t k = 0; k < dim2_; ++k)
    for (std::size_t l = 0; l < dim2_; ++l) matrix_(i * dim2_ + k, j * dim2_ + l) = b(k, l);
}

BipartiteOperator& BipartiteOperator::operator+=(const BipartiteOperator& other) {
  if (dim1_ != other.dim1_ || dim2_ != other.dim2_) {
    throw Error(ErrorCode::DimensionMismatch, "bipartite addition");
  }
  matrix_ += other.matrix_;
  return *this;
}

BipartiteOperator& BipartiteOperator::operator-=(const BipartiteOperator& other) {
  if (dim1_ != other.dim1_ || dim2_ != other.dim2_) {
    throw Error(ErrorCode::DimensionMismatch, "bipartite subtraction");
  }
  matrix_ -= other.matrix_;
  return *this;
}

BipartiteOperator& BipartiteOperator::operator*=(Complex scale) {
  matrix_ *= scale;
  return *this;
}

BipartiteOperator operator+(BipartiteOperator a, const BipartiteOperator& b) { return a += b; }
BipartiteOperator operator-(BipartiteOperator a, const BipartiteOperator& b) { return a -= b; }
BipartiteOperator operator*(Complex scale, BipartiteOperator m) { return m *= scale; }

BipartiteOperator tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || !b.is_square()) {
    throw Error(ErrorCode::DimensionMismatch, "tensor factors must be square");
  }
  return {a.rows(), b.rows(), kron(a, b)};
}

ComplexMatrix partial_trace(const BipartiteOperator& m, Factor factor) {
  const std::size_t n = m.dim1(), d = m.dim2();
  if (factor == Factor::Second) {
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < d; ++k) acc += m(i * d + k, j * d + k);
        out(i, j) = acc;
      }
    return out;
  }
  ComplexMatrix out(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      Complex acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) acc += m(i * d + k, i * d + l);
      out(k, l) = acc;
    }
  return out;
}

BipartiteOperator partial_transpose(const BipartiteOperator& m) {
  const std::size_t n = m.dim1(), d = m.dim2();
  ComplexMatrix out(n * d, n * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) out(i * d + k, j * d + l) = m(i * d + l, j * d + k);
  return {n, d, std::move(out)};
}

BipartiteOperator local_conjugate(const BipartiteOperator& m, const ComplexMatrix& u,
                                  const ComplexMatrix& v) {
  if (u.rows() != m.dim1() || v.rows() != m.dim2()) {
    throw Error(ErrorCode::DimensionMismatch, "local unitaries must match factor dimensions");
  }
  if (!is_unitary(u) || !is_unitary(v)) {
    throw Error(ErrorCode::NotUnitary, "local_conjugate requires unitary factors");
  }
  const ComplexMatrix uv = kron(u, v);
  return {m.dim1(), m.dim2(), uv * m.matrix() * uv.adjoint()};
}

}  // namespace posmap
