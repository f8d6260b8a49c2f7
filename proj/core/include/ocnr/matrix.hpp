#pragma once

/*
 * Minimal dense complex matrices for the finite blocks handled here (a few
 * rows up to ~16).  Row-major storage, no expression templates; everything
 * the library needs is trace forms, a Hermitian eigensolver and unitary
 * factors, so a small self-contained implementation beats a heavyweight
 * dependency.
 */

#include <complex>
#include <cstddef>
#include <vector>

namespace ocnr {

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diag(const std::vector<double>& d);
  static ComplexMatrix diag(const std::vector<std::complex<double>>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::complex<double>& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix scaled(const std::complex<double>& s) const;

  std::complex<double> trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::complex<double>> data_;
};

// (M + M*)/2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

// <v, M v> for a column vector v given as a flat array.
std::complex<double> quadratic_form(const ComplexMatrix& m,
                                    const std::vector<std::complex<double>>& v);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // nonincreasing
  ComplexMatrix eigenvectors;       // columns, orthonormal, matching order
};

// Cyclic two-sided Jacobi rotations on a Hermitian matrix.  Throws
// std::domain_error unless ||M - M*||_max <= 1e-12 * scale.  The result
// satisfies ||M - V diag(w) V*|| <= 1e-10 ||M|| and ||V*V - I|| <= 1e-10;
// ties in the eigenvalue sort are broken by the original column order.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m);

// Largest singular value (via the eigenvalues of M*M).
double spectral_norm(const ComplexMatrix& m);

// Unitary Q of the QR factorization with positive-real diagonal R, computed
// by twice-iterated Gram-Schmidt.  With i.i.d. standard complex Gaussian
// input this yields Haar-distributed unitaries.
ComplexMatrix gram_schmidt_unitary(const ComplexMatrix& m);

}  // namespace ocnr
