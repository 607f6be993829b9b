#pragma once

#include <vector>

#include "qspec/qmatrix.hpp"

namespace qspec {

/// S-spectrum of a matrix: its right-eigenvalue spheres.
struct SSpectrum {
  std::vector<EigenSphere> spheres;  ///< sorted by (u, v)
  std::size_t source_dim = 0;

  int total_multiplicity() const;
  /// Smallest (u, v) distance from sphere_of(s) to any sphere (+inf if empty).
  double distance_to(const Quaternion& s) const;
  /// Index of the nearest sphere.
  std::size_t nearest(const Quaternion& s) const;
  /// Smallest pairwise gap between spheres (+inf for fewer than two).
  double min_gap() const;
};

/// Eigenvalues of chi(A) folded to (Re, |Im|) and grouped within
/// eps_cluster·(1 + ||A||_F). Each conjugate pair contributes 1 to the
/// multiplicity. Every returned sphere is audited: the characteristic matrix
/// A^2 - 2uA + (u^2 + v^2)I must be numerically singular.
SSpectrum s_spectrum(const QMatrix& a, const Tolerances& tol = default_tolerances);

/// A^2 - 2 Re(s) A + |s|^2 I.
QMatrix characteristic(const QMatrix& a, const Quaternion& s);

/// -Q_s(A)^{-1} (A - conj(s) I). Throws ErrorKind::ResolventSingularity when s
/// lies within eps_spec of the S-spectrum.
QMatrix s_resolvent_left(const Quaternion& s, const QMatrix& a,
                         const Tolerances& tol = default_tolerances);
/// -(A - conj(s) I) Q_s(A)^{-1}.
QMatrix s_resolvent_right(const Quaternion& s, const QMatrix& a,
                          const Tolerances& tol = default_tolerances);

/// Evaluation without the spectrum guard; callers that already hold the
/// spectrum (quadrature loops) use these. A2 is A·A.
QMatrix s_resolvent_left_unchecked(const Quaternion& s, const QMatrix& a, const QMatrix& a2);
QMatrix s_resolvent_right_unchecked(const Quaternion& s, const QMatrix& a, const QMatrix& a2);

/// A sample of both resolvents at one point.
struct ResolventSample {
  Quaternion s;
  QMatrix left;
  QMatrix right;
};
ResolventSample sample_resolvents(const Quaternion& s, const QMatrix& a,
                                  const Tolerances& tol = default_tolerances);

/// -(q^2 - 2 q Re(s) + |s|^2)^{-1} (q - conj(s)); throws
/// ErrorKind::KernelSingularity for q on [s].
Quaternion cauchy_kernel_left(const Quaternion& s, const Quaternion& q,
                              double eps = default_tolerances.spec);
/// -(q - conj(s)) (q^2 - 2 Re(s) q + |s|^2)^{-1}.
Quaternion cauchy_kernel_right(const Quaternion& s, const Quaternion& q,
                               double eps = default_tolerances.spec);

/// Frobenius residuals of both forms of the S-resolvent equation
///   S_R(s) S_L(p) = ((S_R(s) - S_L(p)) p - conj(s)(S_R(s) - S_L(p))) (p^2 - 2 s0 p + |s|^2)^{-1}
///   S_R(s) S_L(p) = (s^2 - 2 p0 s + |p|^2)^{-1} (s (S_L(p) - S_R(s)) - (S_L(p) - S_R(s)) conj(p))
struct ResolventEquationResidual {
  double first_form = 0.0;
  double second_form = 0.0;
  double lhs_norm = 0.0;  ///< ||S_R(s) S_L(p)||_F, for relative comparisons
};
ResolventEquationResidual check_resolvent_equation(const Quaternion& s, const Quaternion& p,
                                                   const QMatrix& a,
                                                   const Tolerances& tol = default_tolerances);

}  // namespace qspec
