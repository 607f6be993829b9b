#include "qspec/sspectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "qspec/error.hpp"

namespace qspec {

namespace {

std::string describe(const EigenSphere& s) {
  std::ostringstream os;
  os << "sphere (u=" << s.u << ", v=" << s.v << ")";
  return os.str();
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t k) {
  while (parent[k] != k) {
    parent[k] = parent[parent[k]];
    k = parent[k];
  }
  return k;
}

QMatrix shift_diagonal(const QMatrix& a, const Quaternion& q) {
  QMatrix r = a;
  for (std::size_t k = 0; k < a.dim(); ++k) r(k, k) -= q;
  return r;
}

}  // namespace

int SSpectrum::total_multiplicity() const {
  int total = 0;
  for (const auto& s : spheres) total += s.multiplicity;
  return total;
}

double SSpectrum::distance_to(const Quaternion& s) const {
  const EigenSphere target = sphere_of(s, 0.0);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& sp : spheres) best = std::min(best, sphere_distance(sp, target));
  return best;
}

std::size_t SSpectrum::nearest(const Quaternion& s) const {
  const EigenSphere target = sphere_of(s, 0.0);
  std::size_t best = 0;
  for (std::size_t k = 1; k < spheres.size(); ++k)
    if (sphere_distance(spheres[k], target) < sphere_distance(spheres[best], target)) best = k;
  return best;
}

double SSpectrum::min_gap() const {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < spheres.size(); ++a)
    for (std::size_t b = a + 1; b < spheres.size(); ++b)
      gap = std::min(gap, sphere_distance(spheres[a], spheres[b]));
  return gap;
}

QMatrix characteristic(const QMatrix& a, const Quaternion& s) {
  const std::size_t n = a.dim();
  QMatrix q = a * a - (2.0 * s.w) * a;
  const double s2 = s.norm2();
  for (std::size_t k = 0; k < n; ++k) q(k, k).w += s2;
  return q;
}

SSpectrum s_spectrum(const QMatrix& a, const Tolerances& tol) {
  check_dimension(a.dim());
  const CMatrix m = chi(a);
  const Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::Eigensolver, "complex eigensolver did not converge");
  }
  const CVector& ev = solver.eigenvalues();
  const std::size_t count = static_cast<std::size_t>(ev.size());
  std::vector<double> re(count), im(count);
  for (std::size_t k = 0; k < count; ++k) {
    re[k] = ev(static_cast<Eigen::Index>(k)).real();
    im[k] = std::abs(ev(static_cast<Eigen::Index>(k)).imag());
  }

  // Single-linkage grouping in the (Re, |Im|) half-plane.
  const double eps = tol.cluster * (1.0 + a.frobenius());
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t p = 0; p < count; ++p)
    for (std::size_t q = p + 1; q < count; ++q)
      if (std::hypot(re[p] - re[q], im[p] - im[q]) <= eps)
        parent[find_root(parent, p)] = find_root(parent, q);

  std::vector<std::vector<std::size_t>> groups(count);
  for (std::size_t k = 0; k < count; ++k) groups[find_root(parent, k)].push_back(k);

  SSpectrum out;
  out.source_dim = a.dim();
  for (const auto& g : groups) {
    if (g.empty()) continue;
    if (g.size() % 2 != 0) {
      throw Error(ErrorKind::Eigensolver,
                  "eigenvalues of chi(A) did not pair up (odd cluster of size " +
                      std::to_string(g.size()) + ")");
    }
    double u = 0.0, v = 0.0;
    for (std::size_t k : g) {
      u += re[k];
      v += im[k];
    }
    u /= static_cast<double>(g.size());
    v /= static_cast<double>(g.size());
    if (v <= eps || v < tol.real) v = 0.0;
    out.spheres.push_back({u, v, static_cast<int>(g.size() / 2)});
  }
  std::sort(out.spheres.begin(), out.spheres.end(), [](const auto& l, const auto& r) {
    return l.u != r.u ? l.u < r.u : l.v < r.v;
  });

  // Audit: every sphere must make the characteristic matrix singular.
  const double scale = 1.0 + a.frobenius();
  for (const auto& sp : out.spheres) {
    const QMatrix q = characteristic(a, Quaternion{sp.u, sp.v, 0.0, 0.0});
    const Eigen::JacobiSVD<CMatrix> svd(chi(q));
    const double smin = svd.singularValues()(svd.singularValues().size() - 1);
    if (smin > tol.spec * scale * scale) {
      throw Error(ErrorKind::Eigensolver,
                  describe(sp) + " failed the singularity audit (smallest singular value " +
                      std::to_string(smin) + ")",
                  smin);
    }
  }
  return out;
}

QMatrix s_resolvent_left_unchecked(const Quaternion& s, const QMatrix& a, const QMatrix& a2) {
  QMatrix q = a2 - (2.0 * s.w) * a;
  const double s2 = s.norm2();
  for (std::size_t k = 0; k < a.dim(); ++k) q(k, k).w += s2;
  return -1.0 * (invert(q) * shift_diagonal(a, s.conj()));
}

QMatrix s_resolvent_right_unchecked(const Quaternion& s, const QMatrix& a, const QMatrix& a2) {
  QMatrix q = a2 - (2.0 * s.w) * a;
  const double s2 = s.norm2();
  for (std::size_t k = 0; k < a.dim(); ++k) q(k, k).w += s2;
  return -1.0 * (shift_diagonal(a, s.conj()) * invert(q));
}

namespace {

void guard_resolvent(const Quaternion& s, const QMatrix& a, const Tolerances& tol) {
  const SSpectrum spec = s_spectrum(a, tol);
  const double d = spec.distance_to(s);
  if (d <= tol.spec) {
    std::ostringstream os;
    os << "s = " << s << " lies on " << describe(spec.spheres[spec.nearest(s)])
       << " (distance " << d << ")";
    throw Error(ErrorKind::ResolventSingularity, os.str(), d);
  }
}

}  // namespace

QMatrix s_resolvent_left(const Quaternion& s, const QMatrix& a, const Tolerances& tol) {
  guard_resolvent(s, a, tol);
  return s_resolvent_left_unchecked(s, a, a * a);
}

QMatrix s_resolvent_right(const Quaternion& s, const QMatrix& a, const Tolerances& tol) {
  guard_resolvent(s, a, tol);
  return s_resolvent_right_unchecked(s, a, a * a);
}

ResolventSample sample_resolvents(const Quaternion& s, const QMatrix& a, const Tolerances& tol) {
  guard_resolvent(s, a, tol);
  const QMatrix a2 = a * a;
  return {s, s_resolvent_left_unchecked(s, a, a2), s_resolvent_right_unchecked(s, a, a2)};
}

namespace {

void guard_kernel(const Quaternion& s, const Quaternion& q, double eps) {
  const double d = sphere_distance(sphere_of(s, 0.0), sphere_of(q, 0.0));
  if (d <= eps) {
    std::ostringstream os;
    os << "q = " << q << " lies on the sphere of s = " << s;
    throw Error(ErrorKind::KernelSingularity, os.str(), d);
  }
}

}  // namespace

Quaternion cauchy_kernel_left(const Quaternion& s, const Quaternion& q, double eps) {
  guard_kernel(s, q, eps);
  const Quaternion denom = q * q - (2.0 * s.w) * q + Quaternion{s.norm2()};
  return -(inverse(denom) * (q - s.conj()));
}

Quaternion cauchy_kernel_right(const Quaternion& s, const Quaternion& q, double eps) {
  guard_kernel(s, q, eps);
  const Quaternion denom = q * q - (2.0 * s.w) * q + Quaternion{s.norm2()};
  return -((q - s.conj()) * inverse(denom));
}

ResolventEquationResidual check_resolvent_equation(const Quaternion& s, const Quaternion& p,
                                                   const QMatrix& a, const Tolerances& tol) {
  guard_kernel(s, p, tol.spec);
  guard_resolvent(s, a, tol);
  guard_resolvent(p, a, tol);
  const QMatrix a2 = a * a;
  const QMatrix right_s = s_resolvent_right_unchecked(s, a, a2);
  const QMatrix left_p = s_resolvent_left_unchecked(p, a, a2);
  const QMatrix lhs = right_s * left_p;
  const QMatrix diff = right_s - left_p;

  const Quaternion d1 = p * p - (2.0 * s.w) * p + Quaternion{s.norm2()};
  const QMatrix rhs1 = (diff * p - s.conj() * diff) * inverse(d1);

  // Needs S_L(p) - S_R(s) here: with S_R(s) - S_L(p) the right side is -LHS
  // (check T = t real, s and p in one slice).
  const Quaternion d2 = s * s - (2.0 * p.w) * s + Quaternion{p.norm2()};
  const QMatrix rhs2 = inverse(d2) * (diff * p.conj() - s * diff);

  return {(lhs - rhs1).frobenius(), (lhs - rhs2).frobenius(), lhs.frobenius()};
}

}  // namespace qspec
