#include "ocnr/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ocnr {

using C = std::complex<double>;

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diag(const std::vector<double>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diag(const std::vector<C>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("ComplexMatrix: shape mismatch in product");
  ComplexMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const C a = (*this)(i, k);
      if (a == C{}) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("ComplexMatrix: shape mismatch in sum");
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("ComplexMatrix: shape mismatch in difference");
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

ComplexMatrix ComplexMatrix::scaled(const C& s) const {
  ComplexMatrix out = *this;
  for (auto& v : out.data_) v *= s;
  return out;
}

C ComplexMatrix::trace() const {
  C t{};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const C& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double s = 0.0;
  for (const C& v : data_) s = std::max(s, std::abs(v));
  return s;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_part: matrix must be square");
  ComplexMatrix h(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return h;
}

C quadratic_form(const ComplexMatrix& m, const std::vector<C>& v) {
  if (m.rows() != m.cols() || m.rows() != v.size())
    throw std::invalid_argument("quadratic_form: shape mismatch");
  C s{};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    C row{};
    for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j) * v[j];
    s += std::conj(v[i]) * row;
  }
  return s;
}

EigenDecomposition hermitian_eigen(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("hermitian_eigen: matrix must be square");
  const std::size_t n = m.rows();
  const double scale = std::max(1.0, m.max_abs());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > 1e-12 * scale)
        throw std::domain_error("hermitian_eigen: matrix is not Hermitian");

  ComplexMatrix w = hermitian_part(m);  // kill the tolerated asymmetry
  ComplexMatrix v = ComplexMatrix::identity(n);
  if (n <= 1) {
    EigenDecomposition out;
    if (n == 1) out.eigenvalues = {w(0, 0).real()};
    out.eigenvectors = std::move(v);
    return out;
  }

  const double frob = std::max(w.frobenius_norm(), 1e-300);
  const auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(w(i, j));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 60 && off_norm() > 1e-14 * frob; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const C beta = w(p, q);
        const double ab = std::abs(beta);
        if (ab <= 1e-300) continue;
        const double alpha = w(p, p).real();
        const double gamma = w(q, q).real();
        const double tau = (alpha - gamma) / (2.0 * ab);
        const double sign = tau >= 0.0 ? 1.0 : -1.0;
        const double t = sign / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const C phase = beta / ab;

        // Columns: [c, conj(phase) s; -phase s, c] on (p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const C wp = w(k, p), wq = w(k, q);
          w(k, p) = c * wp + std::conj(phase) * s * wq;
          w(k, q) = -phase * s * wp + c * wq;
        }
        // Rows: the adjoint rotation.
        for (std::size_t k = 0; k < n; ++k) {
          const C wp = w(p, k), wq = w(q, k);
          w(p, k) = c * wp + phase * s * wq;
          w(q, k) = -std::conj(phase) * s * wp + c * wq;
        }
        w(p, q) = 0.0;
        w(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const C vp = v(k, p), vq = v(k, q);
          v(k, p) = c * vp + std::conj(phase) * s * vq;
          v(k, q) = -phase * s * vp + c * vq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return w(a, a).real() > w(b, b).real();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = w(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.empty()) return 0.0;
  const ComplexMatrix gram = m.adjoint() * m;
  const EigenDecomposition eig = hermitian_eigen(gram);
  double top = 0.0;
  for (double w : eig.eigenvalues) top = std::max(top, w);
  return std::sqrt(std::max(0.0, top));
}

ComplexMatrix gram_schmidt_unitary(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("gram_schmidt_unitary: square input");
  const std::size_t n = m.rows();
  ComplexMatrix q = m;
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {  // re-orthogonalize once
      for (std::size_t k = 0; k < j; ++k) {
        C dot{};
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
      }
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm += std::norm(q(i, j));
    nrm = std::sqrt(nrm);
    if (nrm < 1e-150)
      throw std::domain_error("gram_schmidt_unitary: rank-deficient input");
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= nrm;
  }
  return q;
}

}  // namespace ocnr
