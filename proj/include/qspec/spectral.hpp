#pragma once

#include <vector>

#include "qspec/qmatrix.hpp"

namespace qspec {

/// Eigen-angles of chi(U) for a unitary U together with the orthogonal
/// eigenprojectors of the normal matrix chi(U):
///   chi(U) = Σ_k e^{i λ_k} P_k,  Σ_k P_k = I,  P_k P_l = δ_kl P_k.
/// With a non-standard frame (I, J, K) the decomposition is taken of the
/// matrix rewritten in that frame, so exponentials below read e^{I λ}.
class SpectralDecomposition {
 public:
  const QMatrix& unitary() const { return u_; }
  const Frame& frame() const { return frame_; }
  std::size_t dim() const { return u_.dim(); }

  /// Distinct angles in [0, 2π), ascending.
  const std::vector<double>& angles() const { return angles_; }
  /// Multiplicity of each angle among the 2n eigenvalues of chi(U).
  const std::vector<int>& multiplicities() const { return mult_; }
  const std::vector<CMatrix>& projectors() const { return proj_; }
  /// Index of the angle 2π - λ_k (k itself for 0 and π).
  const std::vector<std::size_t>& mirror() const { return mirror_; }

  /// Every angle repeated by multiplicity (2n entries).
  std::vector<double> all_angles() const;
  /// Indices of the angles λ with cos λ ≈ u and |sin λ| ≈ v.
  std::vector<std::size_t> angles_on_sphere(const EigenSphere& s, double tol) const;

 private:
  friend SpectralDecomposition decompose(const QMatrix&, const Frame&, const Tolerances&);
  QMatrix u_;
  Frame frame_;
  std::vector<double> angles_;
  std::vector<int> mult_;
  std::vector<CMatrix> proj_;
  std::vector<std::size_t> mirror_;
};

/// Throws ErrorKind::NotUnitary unless is_unitary(U, 1e-10).
SpectralDecomposition decompose(const QMatrix& u, const Frame& frame = Frame{},
                                const Tolerances& tol = default_tolerances);

struct Atom {
  double t = 0.0;
  Quaternion weight;
};

/// A finite quaternion-valued measure on [0, 2π). `plane` is the unit I in
/// the moments Σ e^{I n t} w.
struct AtomicQMeasure {
  std::vector<Atom> atoms;
  UnitImaginary plane{};

  Quaternion total() const;
  /// ∫ e^{I n t} dν(t), exponential on the left of each weight.
  Quaternion moment(int n) const;
  /// Largest |ν2| over atoms where w = ν1 + ν2 J in the given frame.
  double max_second_component(const Frame& frame = Frame{}) const;
};

/// w_k = <P_k ξ(x), ξ(y)> - <P_k ξ(x j), ξ(y)> j, one atom per distinct angle.
/// Satisfies Σ_k e^{i n λ_k} w_k = <U^n x, y> for every integer n.
AtomicQMeasure pair_measure(const SpectralDecomposition& d, const QVector& x, const QVector& y);

/// pair_measure(d, x, x), certified q-positive (ErrorKind::CalculusInconsistency otherwise).
AtomicQMeasure diag_measure(const SpectralDecomposition& d, const QVector& x,
                            const Tolerances& tol = default_tolerances);

/// ν_{x,y} assembled from the eight diagonal measures of the polarization identity.
AtomicQMeasure polarize(const SpectralDecomposition& d, const QVector& x, const QVector& y);

/// r(n) = <U^n x, x> for n = -N..N.
class HerglotzSequence {
 public:
  HerglotzSequence(int order, std::vector<Quaternion> values);
  int order() const { return order_; }
  const Quaternion& at(int n) const { return values_.at(static_cast<std::size_t>(n + order_)); }
  const std::vector<Quaternion>& values() const { return values_; }

 private:
  int order_;
  std::vector<Quaternion> values_;
};

/// r(-n) is taken as conj(r(n)), which unitarity makes an identity.
HerglotzSequence herglotz_sequence(const QMatrix& u, const QVector& x, int order);

struct PsdCheck {
  double min_eigenvalue = 0.0;
  bool psd = false;
};

/// Smallest eigenvalue of chi of the (N+1)x(N+1) Toeplitz matrix [r(n - m)].
/// Throws ErrorKind::Domain for a sequence that is not Hermitian.
PsdCheck positive_definite_check(const HerglotzSequence& r, int order,
                                 double eps_psd = default_tolerances.psd);

struct PairedBlock {
  double t = 0.0;
  double mirror_t = 0.0;
  Eigen::Matrix2cd block;
  double min_eigenvalue = 0.0;
};

struct QPositivityReport {
  std::vector<PairedBlock> paired_blocks;
  double antisymmetry_residual = 0.0;
  double hermitian_residual = 0.0;
  bool verdict = false;
};

/// Splits w = ν1 + ν2 J, pairs t with 2π - t and checks that every block
/// [[ν1(t), ν2(t)], [conj ν2(t), ν1(2π - t)]] is positive semidefinite and
/// that ν2(t) = -ν2(2π - t).
QPositivityReport q_positivity(const AtomicQMeasure& nu, const Frame& frame = Frame{},
                               const Tolerances& tol = default_tolerances);

/// Σ_{k ∈ σ} w_k: the pairing <E(σ) x, y>.
Quaternion spectral_pairing(const SpectralDecomposition& d, const std::vector<std::size_t>& sigma,
                            const QVector& x, const QVector& y);

/// <E(t) x, y>: the pairing over atoms with angle in [0, t].
Quaternion spectral_distribution(const SpectralDecomposition& d, double t, const QVector& x,
                                 const QVector& y);

/// chi_inv(Σ_{k ∈ σ} P_k) for a selection closed under λ -> 2π - λ.
/// Throws ErrorKind::Selection for a selection that is not axially symmetric.
QMatrix sphere_projector_from_E(const SpectralDecomposition& d,
                                const std::vector<std::size_t>& sigma,
                                const Tolerances& tol = default_tolerances);

/// True iff U has no j and k parts, i.e. U maps the complex subspace to itself.
bool complex_preserving_check(const QMatrix& u, const Tolerances& tol = default_tolerances);

}  // namespace qspec
