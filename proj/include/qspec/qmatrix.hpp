#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "qspec/quaternion.hpp"
#include "qspec/tolerances.hpp"

namespace qspec {

/// Complex matrices live in C_i (the distinguished unit for chi is i).
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr std::size_t kMaxDim = 64;

/// Quaternionic column vector, right H-module.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t n) : data_(n) {}
  explicit QVector(std::vector<Quaternion> entries) : data_(std::move(entries)) {}
  QVector(std::initializer_list<Quaternion> entries) : data_(entries) {}

  std::size_t size() const { return data_.size(); }
  Quaternion& operator[](std::size_t k) { return data_[k]; }
  const Quaternion& operator[](std::size_t k) const { return data_[k]; }
  std::span<const Quaternion> entries() const { return data_; }

  bool operator==(const QVector&) const = default;

  /// sqrt(<x, x>).
  double norm() const;

 private:
  std::vector<Quaternion> data_;
};

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
/// Right scalar action x·alpha.
QVector operator*(const QVector& x, const Quaternion& alpha);

/// Square quaternionic matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t n) : n_(n), data_(n * n) {}
  /// Rows of equal length n; throws ErrorKind::Dimension otherwise.
  QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(std::span<const Quaternion> d);
  static QMatrix diagonal(std::initializer_list<Quaternion> d) {
    return diagonal(std::span<const Quaternion>(d.begin(), d.size()));
  }

  std::size_t dim() const { return n_; }
  Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  std::span<const Quaternion> entries() const { return data_; }

  bool operator==(const QMatrix&) const = default;

  /// Frobenius norm sqrt(sum |a_rc|^2).
  double frobenius() const;
  double trace_real() const;

 private:
  std::size_t n_ = 0;
  std::vector<Quaternion> data_;
};

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(double s, const QMatrix& a);
QVector operator*(const QMatrix& a, const QVector& x);
/// Entrywise right multiplication A·q (a_rc q).
QMatrix operator*(const QMatrix& a, const Quaternion& q);
/// Entrywise left multiplication q·A (q a_rc).
QMatrix operator*(const Quaternion& q, const QMatrix& a);

/// A^m for m >= 0.
QMatrix power(const QMatrix& a, unsigned m);

/// Complex adjoint [[A1, A2], [-conj(A2), conj(A1)]] where A = A1 + A2 j.
CMatrix chi(const QMatrix& a);
/// Inverse of chi. Throws ErrorKind::NotInImage (value = residual) if M is not
/// of the block form within eps_sym.
QMatrix chi_inv(const CMatrix& m, double eps_sym = default_tolerances.sym);
/// Max-abs violation of the chi block symmetry (0 for an exact image).
double chi_symmetry_residual(const CMatrix& m);

/// (x1; -conj(x2)) for x = x1 + x2 j, so vec_chi(A x) = chi(A) vec_chi(x).
CVector vec_chi(const QVector& x);
QVector vec_chi_inv(const CVector& v);

/// <x, y> = sum_k conj(y_k) x_k, right linear in x.
Quaternion inner(const QVector& x, const QVector& y);
/// Complex inner product b^H a, linear in a.
std::complex<double> inner(const CVector& a, const CVector& b);

QMatrix adjoint(const QMatrix& a);
/// chi_inv(chi(A)^-1). Throws ErrorKind::Singular (value = condition estimate)
/// when the reciprocal condition estimate of chi(A) falls below eps_sing.
QMatrix invert(const QMatrix& a, double eps_sing = default_tolerances.sing);
bool is_unitary(const QMatrix& u, double tol);

/// ||chi(A)||_2, which equals the operator norm of A.
double operator_norm(const QMatrix& a);

/// Entrywise frame maps (see Frame).
QMatrix to_frame(const QMatrix& a, const Frame& frame);
QMatrix from_frame(const QMatrix& a, const Frame& frame);
QVector to_frame(const QVector& x, const Frame& frame);
QVector from_frame(const QVector& x, const Frame& frame);

/// Throws ErrorKind::Dimension if n is 0 or exceeds kMaxDim.
void check_dimension(std::size_t n);

}  // namespace qspec
