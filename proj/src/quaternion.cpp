#include "qspec/quaternion.hpp"

#include <algorithm>
#include <random>

#include "qspec/error.hpp"

namespace qspec {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Dimension: return "dimension mismatch";
    case ErrorKind::NotInImage: return "not in image of chi";
    case ErrorKind::Singular: return "near-singular matrix";
    case ErrorKind::Eigensolver: return "eigensolver failure";
    case ErrorKind::ResolventSingularity: return "resolvent singularity";
    case ErrorKind::KernelSingularity: return "kernel singularity";
    case ErrorKind::ContourTouchesSpectrum: return "contour touches spectrum";
    case ErrorKind::Contour: return "invalid contour";
    case ErrorKind::Geometry: return "contour geometry";
    case ErrorKind::NotUnitary: return "not unitary";
    case ErrorKind::Selection: return "invalid selection";
    case ErrorKind::NotSliceContinuous: return "not slice continuous";
    case ErrorKind::CalculusInconsistency: return "calculus inconsistency";
    case ErrorKind::Config: return "configuration error";
  }
  return "error";
}

Quaternion inverse(const Quaternion& a) {
  const double n2 = a.norm2();
  if (n2 == 0.0) throw Error(ErrorKind::Domain, "inverse of zero quaternion");
  return a.conj() / n2;
}

double max_abs_diff(const Quaternion& a, const Quaternion& b) {
  return std::max({std::abs(a.w - b.w), std::abs(a.x - b.x), std::abs(a.y - b.y),
                   std::abs(a.z - b.z)});
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
}

UnitImaginary UnitImaginary::normalized(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorKind::Domain, "imaginary unit needs a nonzero finite direction");
  }
  return UnitImaginary(x / n, y / n, z / n);
}

EigenSphere sphere_of(const Quaternion& q, double eps_real) {
  double v = q.imag_abs();
  if (v < eps_real) v = 0.0;
  return {q.w, v, 1};
}

bool on_sphere(const Quaternion& q, const EigenSphere& s, double tol) {
  return sphere_distance(sphere_of(q, 0.0), s) <= tol;
}

Quaternion exp_unit(const UnitImaginary& unit, double t) {
  return SlicePoint{std::cos(t), std::sin(t), unit}.to_quaternion();
}

UnitImaginary orthogonal_unit(const UnitImaginary& unit, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const double ix = unit.x(), iy = unit.y(), iz = unit.z();
  for (;;) {
    double ax = gauss(rng), ay = gauss(rng), az = gauss(rng);
    const double d = ax * ix + ay * iy + az * iz;
    ax -= d * ix;
    ay -= d * iy;
    az -= d * iz;
    const double n = std::sqrt(ax * ax + ay * ay + az * az);
    if (n > 1e-3) return UnitImaginary::normalized(ax, ay, az);
  }
}

Frame::Frame(const UnitImaginary& i_unit, const UnitImaginary& j_unit) : i_(i_unit), j_(j_unit) {
  const double dot = i_unit.x() * j_unit.x() + i_unit.y() * j_unit.y() + i_unit.z() * j_unit.z();
  if (std::abs(dot) > 1e-12) {
    throw Error(ErrorKind::Domain, "frame units must be orthogonal", dot);
  }
  const Quaternion k = i_unit.as_quaternion() * j_unit.as_quaternion();
  k_ = UnitImaginary::normalized(k.x, k.y, k.z);
}

bool Frame::is_standard() const {
  return i_ == UnitImaginary{} && j_.y() == 1.0 && k_.z() == 1.0;
}

Quaternion Frame::to_frame(const Quaternion& q) const {
  return {q.w, q.x * i_.x() + q.y * j_.x() + q.z * k_.x(),
          q.x * i_.y() + q.y * j_.y() + q.z * k_.y(),
          q.x * i_.z() + q.y * j_.z() + q.z * k_.z()};
}

Quaternion Frame::from_frame(const Quaternion& q) const {
  return {q.w, q.x * i_.x() + q.y * i_.y() + q.z * i_.z(),
          q.x * j_.x() + q.y * j_.y() + q.z * j_.z(),
          q.x * k_.x() + q.y * k_.y() + q.z * k_.z()};
}

}  // namespace qspec
