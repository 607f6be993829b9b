#pragma once

#include <complex>
#include <vector>

#include "qspec/qmatrix.hpp"
#include "qspec/sspectrum.hpp"

namespace qspec {

/// A circle in the slice C_I; center = a + b·sqrt(-1) stands for a + b I.
struct Loop {
  std::complex<double> center;
  double radius = 0.0;
};

/// Boundary of Omega ∩ C_I for an axially symmetric Omega, as a union of
/// counterclockwise circles. ds_I = -ds I.
struct ContourSpec {
  UnitImaginary plane{};
  std::vector<Loop> loops;
  int nodes_per_loop = 256;

  /// Throws ErrorKind::Contour unless nodes >= 16, radii > 0, loops pairwise
  /// disjoint and the loop set is closed under conjugation.
  void validate() const;

  /// True iff the C_I point z lies inside some loop with clearance > margin.
  bool encloses(std::complex<double> z, double margin = 0.0) const;
  /// Both points u ± vI of [q] ∩ C_I are enclosed.
  bool encloses_sphere(const EigenSphere& s, double margin = 0.0) const;
  /// Smallest distance from z to any loop boundary.
  double boundary_distance(std::complex<double> z) const;
};

/// One quadrature node s_m on a loop and its weight (s_m - center)/N, so that
/// (1/2π)∫ g(s) ds_I ≈ Σ g(s_m)·weight_m.
struct QuadratureNode {
  Quaternion s;
  Quaternion weight;
};
std::vector<QuadratureNode> quadrature_nodes(const ContourSpec& c);

/// f(s) = Σ_m s^m a_m with right coefficients.
struct RightPolynomial {
  std::vector<Quaternion> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Quaternion operator()(const Quaternion& s) const;
  /// Σ_m A^m a_m by Horner's rule.
  QMatrix operator()(const QMatrix& a) const;
};

/// (1/2π)∫ S_L^{-1}(s, A) ds_I over the contour (trapezoid rule).
/// Throws ErrorKind::ContourTouchesSpectrum if a node is within eps_spec of σ_S(A).
QMatrix integrate_left(const ContourSpec& c, const QMatrix& a,
                       const Tolerances& tol = default_tolerances);
/// (1/2π)∫ ds_I S_R^{-1}(s, A).
QMatrix integrate_right(const ContourSpec& c, const QMatrix& a,
                        const Tolerances& tol = default_tolerances);

struct QuadratureConfig {
  int nodes_per_loop = 256;
  UnitImaginary plane{};
  double min_gap = 1e-3;  ///< spheres closer than this cannot be separated
  Tolerances tol{};
};

struct RieszProjector {
  QMatrix projector;
  ContourSpec contour;
  double idempotency_residual = 0.0;  ///< ||P^2 - P||_F
  double commutator_residual = 0.0;   ///< ||AP - PA||_F
};

/// Loops around the selected spheres of `spectrum`, clear of all others.
/// Throws ErrorKind::Geometry listing the spheres that are too close.
ContourSpec riesz_contour(const SSpectrum& spectrum, const std::vector<std::size_t>& selection,
                          const QuadratureConfig& cfg);

/// Riesz projector of the spectral set formed by the selected spheres of
/// s_spectrum(A). Throws ErrorKind::Selection for an out-of-range index.
RieszProjector riesz_projector(const QMatrix& a, const std::vector<std::size_t>& selection,
                               const QuadratureConfig& cfg = {});

/// (1/2π)∫ ds_I (conj(s) B - B p)(p^2 - 2 s0 p + |s|^2)^{-1}: B when [p] ∩ C_I
/// is enclosed, 0 when it is outside.
QMatrix check_lemma_identity(const QMatrix& b, const Quaternion& p, const ContourSpec& c,
                             const Tolerances& tol = default_tolerances);

/// (1/2π)∫ S_L^{-1}(s, q) ds_I f(s); reproduces f(q) for [q] inside the contour.
Quaternion cauchy_eval(const RightPolynomial& f, const Quaternion& q, const ContourSpec& c,
                       const Tolerances& tol = default_tolerances);

/// (1/2π)∫ S_L^{-1}(s, A) ds_I f(s) for a contour around all of σ_S(A).
QMatrix funcalc_contour(const RightPolynomial& f, const QMatrix& a, const ContourSpec& c,
                        const Tolerances& tol = default_tolerances);

}  // namespace qspec
