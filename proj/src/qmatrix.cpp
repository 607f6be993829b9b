#include "qspec/qmatrix.hpp"

#include <algorithm>
#include <string>

#include "qspec/error.hpp"

namespace qspec {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::Dimension,
                std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

void check_dimension(std::size_t n) {
  if (n == 0 || n > kMaxDim) {
    throw Error(ErrorKind::Dimension,
                "dimension " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDim));
  }
}

double QVector::norm() const {
  double s = 0.0;
  for (const auto& q : data_) s += q.norm2();
  return std::sqrt(s);
}

QVector operator+(const QVector& a, const QVector& b) {
  require_same(a.size(), b.size(), "vector sum");
  QVector r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

QVector operator-(const QVector& a, const QVector& b) {
  require_same(a.size(), b.size(), "vector difference");
  QVector r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

QVector operator*(const QVector& x, const Quaternion& alpha) {
  QVector r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = x[k] * alpha;
  return r;
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    require_same(row.size(), n_, "matrix row length");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = kOne;
  return m;
}

QMatrix QMatrix::diagonal(std::span<const Quaternion> d) {
  QMatrix m(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

double QMatrix::frobenius() const {
  double s = 0.0;
  for (const auto& q : data_) s += q.norm2();
  return std::sqrt(s);
}

double QMatrix::trace_real() const {
  double s = 0.0;
  for (std::size_t k = 0; k < n_; ++k) s += (*this)(k, k).w;
  return s;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  require_same(a.dim(), b.dim(), "matrix sum");
  QMatrix r(a.dim());
  for (std::size_t r_ = 0; r_ < a.dim(); ++r_)
    for (std::size_t c = 0; c < a.dim(); ++c) r(r_, c) = a(r_, c) + b(r_, c);
  return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  require_same(a.dim(), b.dim(), "matrix difference");
  QMatrix r(a.dim());
  for (std::size_t r_ = 0; r_ < a.dim(); ++r_)
    for (std::size_t c = 0; c < a.dim(); ++c) r(r_, c) = a(r_, c) - b(r_, c);
  return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  require_same(a.dim(), b.dim(), "matrix product");
  const std::size_t n = a.dim();
  QMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Quaternion aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

QMatrix operator*(double s, const QMatrix& a) {
  QMatrix r = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) *= s;
  return r;
}

QVector operator*(const QMatrix& a, const QVector& x) {
  require_same(a.dim(), x.size(), "matrix-vector product");
  QVector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) r[i] += a(i, k) * x[k];
  return r;
}

QMatrix operator*(const QMatrix& a, const Quaternion& q) {
  QMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) * q;
  return r;
}

QMatrix operator*(const Quaternion& q, const QMatrix& a) {
  QMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = q * a(i, j);
  return r;
}

QMatrix power(const QMatrix& a, unsigned m) {
  QMatrix result = QMatrix::identity(a.dim());
  for (unsigned k = 0; k < m; ++k) result = result * a;
  return result;
}

CMatrix chi(const QMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  CMatrix m(2 * n, 2 * n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const Quaternion& q = a(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      const std::complex<double> p1 = q.c1();
      const std::complex<double> p2 = q.c2();
      m(r, c) = p1;
      m(r, c + n) = p2;
      m(r + n, c) = -std::conj(p2);
      m(r + n, c + n) = std::conj(p1);
    }
  }
  return m;
}

double chi_symmetry_residual(const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) {
    throw Error(ErrorKind::Dimension, "chi image must be square of even size");
  }
  const Eigen::Index n = m.rows() / 2;
  double residual = 0.0;
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      residual = std::max(residual, std::abs(m(r + n, c + n) - std::conj(m(r, c))));
      residual = std::max(residual, std::abs(m(r + n, c) + std::conj(m(r, c + n))));
    }
  }
  return residual;
}

QMatrix chi_inv(const CMatrix& m, double eps_sym) {
  const double residual = chi_symmetry_residual(m);
  if (!(residual <= eps_sym)) {
    throw Error(ErrorKind::NotInImage,
                "block symmetry residual " + std::to_string(residual) + " exceeds " +
                    std::to_string(eps_sym),
                residual);
  }
  const Eigen::Index n = m.rows() / 2;
  QMatrix a(static_cast<std::size_t>(n));
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      a(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
          Quaternion::from_pair(m(r, c), m(r, c + n));
  return a;
}

CVector vec_chi(const QVector& x) {
  const auto n = static_cast<Eigen::Index>(x.size());
  CVector v(2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Quaternion& q = x[static_cast<std::size_t>(k)];
    v(k) = q.c1();
    v(k + n) = -std::conj(q.c2());
  }
  return v;
}

QVector vec_chi_inv(const CVector& v) {
  if (v.size() % 2 != 0) throw Error(ErrorKind::Dimension, "vec_chi image has odd length");
  const Eigen::Index n = v.size() / 2;
  QVector x(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k)
    x[static_cast<std::size_t>(k)] = Quaternion::from_pair(v(k), -std::conj(v(k + n)));
  return x;
}

Quaternion inner(const QVector& x, const QVector& y) {
  require_same(x.size(), y.size(), "inner product");
  Quaternion s;
  for (std::size_t k = 0; k < x.size(); ++k) s += y[k].conj() * x[k];
  return s;
}

std::complex<double> inner(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Dimension, "complex inner product");
  return b.dot(a);
}

QMatrix adjoint(const QMatrix& a) {
  QMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(j, i) = a(i, j).conj();
  return r;
}

QMatrix invert(const QMatrix& a, double eps_sing) {
  check_dimension(a.dim());
  const CMatrix m = chi(a);
  const Eigen::PartialPivLU<CMatrix> lu(m);
  const double rcond = lu.rcond();
  if (!(rcond > eps_sing)) {
    const double cond = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
    throw Error(ErrorKind::Singular, "condition estimate " + std::to_string(cond), cond);
  }
  const CMatrix inv = lu.inverse();
  // Rounding in the inverse scales with its size; the block form is exact in
  // exact arithmetic.
  const double tol = 1e-8 * std::max(1.0, inv.cwiseAbs().maxCoeff());
  return chi_inv(inv, tol);
}

bool is_unitary(const QMatrix& u, double tol) {
  const QMatrix d = adjoint(u) * u - QMatrix::identity(u.dim());
  return d.frobenius() <= tol;
}

double operator_norm(const QMatrix& a) {
  if (a.dim() == 0) return 0.0;
  const Eigen::JacobiSVD<CMatrix> svd(chi(a));
  return svd.singularValues()(0);
}

QMatrix to_frame(const QMatrix& a, const Frame& frame) {
  QMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = frame.to_frame(a(i, j));
  return r;
}

QMatrix from_frame(const QMatrix& a, const Frame& frame) {
  QMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = frame.from_frame(a(i, j));
  return r;
}

QVector to_frame(const QVector& x, const Frame& frame) {
  QVector r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = frame.to_frame(x[k]);
  return r;
}

QVector from_frame(const QVector& x, const Frame& frame) {
  QVector r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = frame.from_frame(x[k]);
  return r;
}

}  // namespace qspec
