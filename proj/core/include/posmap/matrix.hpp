#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "posmap/errors.hpp"

namespace posmap {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix. Entries are checked finite when a matrix
/// is built from explicit data.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  /// Matrix unit E_ij = |e_i><e_j| of size n x n (0-based indices).
  static ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |u><v|
  static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);
  static ComplexMatrix from_columns(const std::vector<ComplexVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  ComplexVector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Complex> v);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scale);
ComplexVector operator*(const ComplexMatrix& m, std::span<const Complex> v);

double frobenius_norm(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
/// ||M - M*||_F
double hermiticity_defect(const ComplexMatrix& m);
/// ||M - M*||_F <= tol * max(1, ||M||_F)
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10);
/// ||U*U - 1||_F <= tol
bool is_unitary(const ComplexMatrix& m, double tol = 1e-10);
ComplexMatrix hermitian_part(const ComplexMatrix& m);

/// (A (x) B)[(i*p + k), (j*q + l)] = A[i,j] * B[k,l] for B of size p x q.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(std::span<const Complex> u, std::span<const Complex> v);

/// Conjugate-linear in the first argument.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);
ComplexVector normalized(std::span<const Complex> v);
ComplexVector conjugate(std::span<const Complex> v);
/// |v><v| / ||v||^2
ComplexMatrix projector(std::span<const Complex> v);
/// Standard basis vector e_i of C^n (0-based).
ComplexVector basis_vector(std::size_t n, std::size_t i);

enum class Factor { First = 1, Second = 2 };

/// Operator on C^n (x) C^m with recorded factor dimensions. The (i,j) block
/// is the m x m submatrix rho_ij in rho = sum_ij E_ij (x) rho_ij.
class BipartiteOperator {
 public:
  BipartiteOperator() = default;
  BipartiteOperator(std::size_t dim1, std::size_t dim2, ComplexMatrix matrix);

  static BipartiteOperator zeros(std::size_t dim1, std::size_t dim2);
  static BipartiteOperator from_blocks(std::size_t dim1, std::size_t dim2,
                                       const std::vector<ComplexMatrix>& blocks);

  std::size_t dim1() const noexcept { return dim1_; }
  std::size_t dim2() const noexcept { return dim2_; }
  std::size_t size() const noexcept { return dim1_ * dim2_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  ComplexMatrix block(std::size_t i, std::size_t j) const;
  void set_block(std::size_t i, std::size_t j, const ComplexMatrix& b);

  Complex operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }
  Complex trace() const { return matrix_.trace(); }
  BipartiteOperator adjoint() const { return {dim1_, dim2_, matrix_.adjoint()}; }

  BipartiteOperator& operator+=(const BipartiteOperator& other);
  BipartiteOperator& operator-=(const BipartiteOperator& other);
  BipartiteOperator& operator*=(Complex scale);

  friend bool operator==(const BipartiteOperator&, const BipartiteOperator&) = default;

 private:
  std::size_t dim1_ = 0;
  std::size_t dim2_ = 0;
  ComplexMatrix matrix_;
};

BipartiteOperator operator+(BipartiteOperator a, const BipartiteOperator& b);
BipartiteOperator operator-(BipartiteOperator a, const BipartiteOperator& b);
BipartiteOperator operator*(Complex scale, BipartiteOperator m);

BipartiteOperator tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// factor = Second: result[i,j] = sum_k M[(i,k),(j,k)]; factor = First
/// traces out the first tensor factor.
ComplexMatrix partial_trace(const BipartiteOperator& m, Factor factor);

/// Transposes every block: (1 (x) tau)(M).
BipartiteOperator partial_transpose(const BipartiteOperator& m);

/// (U (x) V) M (U (x) V)*. Throws NotUnitary when U or V fails 1e-10.
BipartiteOperator local_conjugate(const BipartiteOperator& m, const ComplexMatrix& u,
                                  const ComplexMatrix& v);

}  // namespace posmap
