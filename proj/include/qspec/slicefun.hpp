#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "qspec/spectral.hpp"

namespace qspec {

/// f(u + I v) = α(u, v) + I β(u, v), with α even and β odd in v.
struct SliceFunction {
  std::function<Quaternion(double, double)> alpha;
  std::function<Quaternion(double, double)> beta;
  bool declared_intrinsic = false;

  Quaternion operator()(const Quaternion& q) const;
  /// Value at e^{I t} for the unit I of `plane`.
  Quaternion on_circle(double t, const UnitImaginary& plane = kUnitI) const;
};

/// Uniform parameter grid used by the slice checks.
inline constexpr int kSliceGrid = 257;

/// Throws ErrorKind::NotSliceContinuous (value = worst residual) unless α is
/// even and β odd in v on the unit-circle grid plus the extra angles, and,
/// when declared intrinsic, both are real there.
void check_slice(const SliceFunction& f, double eps_slice = default_tolerances.slice,
                 const std::vector<double>& extra_angles = {});

/// f = f0 + f1 i + f2 j + f3 k with each f_l intrinsic (component l of α, β).
std::array<SliceFunction, 4> intrinsic_split(const SliceFunction& f,
                                             double eps_slice = default_tolerances.slice);

/// Pointwise product of two intrinsic functions (again intrinsic).
SliceFunction product(const SliceFunction& f, const SliceFunction& g);

using RealFunction = std::function<double(double, double)>;

/// a(u,v) = ½(ã(u,v) + ã(u,-v)) and b(u,v) = ½(b̃(u,-v) - b̃(u,v)), as written.
std::pair<RealFunction, RealFunction> symmetrize(RealFunction a_tilde, RealFunction b_tilde);

/// P(e^{It}) = Σ_{m=-n}^{n} e^{I m t} a_m.
class TrigPoly {
 public:
  TrigPoly() : coeffs_(1) {}
  explicit TrigPoly(int degree) : degree_(degree), coeffs_(static_cast<std::size_t>(2 * degree + 1)) {}

  int degree() const { return degree_; }
  Quaternion& coeff(int m) { return coeffs_.at(static_cast<std::size_t>(m + degree_)); }
  const Quaternion& coeff(int m) const { return coeffs_.at(static_cast<std::size_t>(m + degree_)); }
  bool real_coefficients() const;

  Quaternion operator()(double t, const UnitImaginary& plane = kUnitI) const;
  /// The slice function α = Σ cos(mt) a_m, β = Σ sin(mt) a_m with t = arg(u + iv).
  SliceFunction as_slice_function() const;

  /// From (m, a_m) pairs; the degree is the largest |m|.
  static TrigPoly from_terms(const std::vector<std::pair<int, Quaternion>>& terms);

 private:
  int degree_ = 0;
  std::vector<Quaternion> coeffs_;
};

struct Approximation {
  TrigPoly poly;
  double sup_error = 0.0;  ///< max over a 1024-point grid of |R_n(e^{it}) - f(e^{it})|
};

/// Fejér mean of degree n of t -> f(e^{it}), symmetrized to real coefficients.
Approximation weierstrass_approx(const SliceFunction& f, int degree);

/// f(U) = Σ_l F_l e_l with F_l = chi_inv(Σ_k f_l(e^{iλ_k}) P_k).
/// Throws ErrorKind::CalculusInconsistency if a pullback is not in the image of chi.
QMatrix funcalc_spectral(const SliceFunction& f, const SpectralDecomposition& d,
                         const Tolerances& tol = default_tolerances);

/// Σ_m U^m a_m, using U* for negative powers. Throws ErrorKind::NotUnitary.
QMatrix funcalc_trigpoly(const TrigPoly& p, const QMatrix& u);

struct ConvergenceRow {
  int degree = 0;
  double operator_error = 0.0;  ///< ||R_n(U) - f(U)||_2
  double angle_error = 0.0;     ///< max_k |R_n(e^{iλ_k}) - f(e^{iλ_k})|
  double grid_error = 0.0;      ///< sup error of R_n on the 1024-point grid
};
std::vector<ConvergenceRow> funcalc_converge(const SliceFunction& f, const QMatrix& u,
                                             const std::vector<int>& degrees,
                                             const Tolerances& tol = default_tolerances);

/// identity, inverse, square, cosine_part, abs_cos, exp_scaled (= exp(q/2)).
/// Throws ErrorKind::Config for an unknown name.
SliceFunction builtin_function(const std::string& name);
const std::vector<std::string>& builtin_names();

}  // namespace qspec
