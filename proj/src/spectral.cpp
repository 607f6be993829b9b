#include "qspec/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "qspec/error.hpp"

namespace qspec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double normalize_angle(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

double circular_distance(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, kTwoPi - d);
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t k) {
  while (parent[k] != k) {
    parent[k] = parent[parent[k]];
    k = parent[k];
  }
  return k;
}

void require_unitary(const QMatrix& u) {
  check_dimension(u.dim());
  const double r = (adjoint(u) * u - QMatrix::identity(u.dim())).frobenius();
  if (!(r <= 1e-10)) throw Error(ErrorKind::NotUnitary, "||U*U - I||_F too large", r);
}

std::vector<std::size_t> validated_selection(const SpectralDecomposition& d,
                                             const std::vector<std::size_t>& sigma) {
  std::set<std::size_t> unique;
  for (std::size_t k : sigma) {
    if (k >= d.angles().size()) {
      throw Error(ErrorKind::Selection, "angle index " + std::to_string(k) + " out of range (" +
                                            std::to_string(d.angles().size()) + " angles)");
    }
    unique.insert(k);
  }
  return {unique.begin(), unique.end()};
}

}  // namespace

std::vector<double> SpectralDecomposition::all_angles() const {
  std::vector<double> out;
  for (std::size_t k = 0; k < angles_.size(); ++k)
    out.insert(out.end(), static_cast<std::size_t>(mult_[k]), angles_[k]);
  return out;
}

std::vector<std::size_t> SpectralDecomposition::angles_on_sphere(const EigenSphere& s,
                                                                 double tol) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < angles_.size(); ++k) {
    if (std::abs(std::cos(angles_[k]) - s.u) <= tol &&
        std::abs(std::abs(std::sin(angles_[k])) - s.v) <= tol)
      out.push_back(k);
  }
  return out;
}

SpectralDecomposition decompose(const QMatrix& u, const Frame& frame, const Tolerances& tol) {
  require_unitary(u);
  const CMatrix m = chi(from_frame(u, frame));
  const Eigen::ComplexSchur<CMatrix> schur(m);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorKind::Eigensolver, "complex Schur decomposition did not converge");
  }
  const CMatrix& t = schur.matrixT();
  const CMatrix& q = schur.matrixU();
  const auto count = static_cast<std::size_t>(t.rows());

  std::vector<double> theta(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto kk = static_cast<Eigen::Index>(k);
    theta[k] = normalize_angle(std::arg(t(kk, kk)));
  }

  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b)
      if (circular_distance(theta[a], theta[b]) <= tol.cluster)
        parent[find_root(parent, a)] = find_root(parent, b);

  struct Group {
    double angle;
    std::vector<Eigen::Index> members;
  };
  std::vector<std::vector<Eigen::Index>> buckets(count);
  for (std::size_t k = 0; k < count; ++k)
    buckets[find_root(parent, k)].push_back(static_cast<Eigen::Index>(k));

  std::vector<Group> groups;
  for (auto& b : buckets) {
    if (b.empty()) continue;
    std::complex<double> mean = 0.0;
    for (auto k : b) mean += std::polar(1.0, theta[static_cast<std::size_t>(k)]);
    double angle = normalize_angle(std::arg(mean));
    if (circular_distance(angle, 0.0) <= tol.cluster) angle = 0.0;
    if (circular_distance(angle, std::numbers::pi) <= tol.cluster) angle = std::numbers::pi;
    groups.push_back({angle, std::move(b)});
  }
  std::sort(groups.begin(), groups.end(),
            [](const Group& l, const Group& r) { return l.angle < r.angle; });

  SpectralDecomposition d;
  d.u_ = u;
  d.frame_ = frame;
  for (const auto& g : groups) {
    CMatrix basis(q.rows(), static_cast<Eigen::Index>(g.members.size()));
    for (std::size_t c = 0; c < g.members.size(); ++c)
      basis.col(static_cast<Eigen::Index>(c)) = q.col(g.members[c]);
    d.angles_.push_back(g.angle);
    d.mult_.push_back(static_cast<int>(g.members.size()));
    d.proj_.push_back(basis * basis.adjoint());
  }

  // Conjugate-pair symmetry: pair every angle with its reflection and make
  // the pair exactly symmetric.
  const std::size_t k_count = d.angles_.size();
  d.mirror_.assign(k_count, 0);
  for (std::size_t k = 0; k < k_count; ++k) {
    const double target = normalize_angle(kTwoPi - d.angles_[k]);
    std::size_t best = 0;
    for (std::size_t l = 1; l < k_count; ++l)
      if (circular_distance(d.angles_[l], target) < circular_distance(d.angles_[best], target))
        best = l;
    if (circular_distance(d.angles_[best], target) > 10.0 * tol.cluster ||
        d.mult_[best] != d.mult_[k]) {
      throw Error(ErrorKind::Eigensolver, "eigen-angles of chi(U) are not reflection symmetric");
    }
    d.mirror_[k] = best;
  }
  for (std::size_t k = 0; k < k_count; ++k) {
    const std::size_t l = d.mirror_[k];
    if (l > k) d.angles_[l] = normalize_angle(kTwoPi - d.angles_[k]);
  }
  return d;
}

Quaternion AtomicQMeasure::total() const {
  Quaternion s;
  for (const auto& a : atoms) s += a.weight;
  return s;
}

Quaternion AtomicQMeasure::moment(int n) const {
  Quaternion s;
  for (const auto& a : atoms) s += exp_unit(plane, static_cast<double>(n) * a.t) * a.weight;
  return s;
}

double AtomicQMeasure::max_second_component(const Frame& frame) const {
  double m = 0.0;
  for (const auto& a : atoms) m = std::max(m, std::abs(frame.from_frame(a.weight).c2()));
  return m;
}

AtomicQMeasure pair_measure(const SpectralDecomposition& d, const QVector& x, const QVector& y) {
  if (x.size() != d.dim() || y.size() != d.dim()) {
    throw Error(ErrorKind::Dimension, "vector length does not match the decomposition");
  }
  const Frame& f = d.frame();
  const QVector xs = from_frame(x, f);
  const QVector ys = from_frame(y, f);
  const CVector xi_x = vec_chi(xs);
  const CVector xi_xj = vec_chi(xs * kJ);
  const CVector xi_y = vec_chi(ys);

  AtomicQMeasure nu;
  nu.plane = f.I();
  for (std::size_t k = 0; k < d.angles().size(); ++k) {
    const CMatrix& p = d.projectors()[k];
    const std::complex<double> c1 = inner(CVector(p * xi_x), xi_y);
    const std::complex<double> c2 = inner(CVector(p * xi_xj), xi_y);
    nu.atoms.push_back({d.angles()[k], f.to_frame(Quaternion::from_pair(c1, -c2))});
  }
  return nu;
}

AtomicQMeasure diag_measure(const SpectralDecomposition& d, const QVector& x,
                            const Tolerances& tol) {
  AtomicQMeasure nu = pair_measure(d, x, x);
  const double scale = std::max(1.0, x.norm() * x.norm());
  Tolerances scaled = tol;
  scaled.psd = tol.psd * scale;
  const QPositivityReport report = q_positivity(nu, d.frame(), scaled);
  if (!report.verdict) {
    throw Error(ErrorKind::CalculusInconsistency, "diagonal measure failed q-positivity",
                std::max(report.antisymmetry_residual, report.hermitian_residual));
  }
  return nu;
}

AtomicQMeasure polarize(const SpectralDecomposition& d, const QVector& x, const QVector& y) {
  const Frame& f = d.frame();
  const Quaternion ui = f.I().as_quaternion();
  const Quaternion uj = f.J().as_quaternion();
  const Quaternion uk = f.K().as_quaternion();
  auto nu = [&](const QVector& v) { return pair_measure(d, v, v); };

  const AtomicQMeasure p_plus = nu(x + y);
  const AtomicQMeasure p_minus = nu(x - y);
  const AtomicQMeasure i_plus = nu(x + y * ui);
  const AtomicQMeasure i_minus = nu(x - y * ui);
  const AtomicQMeasure j_plus = nu(x + y * uj);
  const AtomicQMeasure j_minus = nu(x - y * uj);
  const AtomicQMeasure k_plus = nu(x + y * uk);
  const AtomicQMeasure k_minus = nu(x - y * uk);

  AtomicQMeasure out;
  out.plane = f.I();
  for (std::size_t a = 0; a < p_plus.atoms.size(); ++a) {
    Quaternion w = p_plus.atoms[a].weight - p_minus.atoms[a].weight;
    w += ui * i_plus.atoms[a].weight - ui * i_minus.atoms[a].weight;
    w += ui * j_minus.atoms[a].weight * uk - ui * j_plus.atoms[a].weight * uk;
    w += k_plus.atoms[a].weight * uk - k_minus.atoms[a].weight * uk;
    out.atoms.push_back({p_plus.atoms[a].t, w * 0.25});
  }
  return out;
}

HerglotzSequence::HerglotzSequence(int order, std::vector<Quaternion> values)
    : order_(order), values_(std::move(values)) {
  if (order < 0 || values_.size() != static_cast<std::size_t>(2 * order + 1)) {
    throw Error(ErrorKind::Dimension, "sequence must hold r(-N..N)");
  }
}

HerglotzSequence herglotz_sequence(const QMatrix& u, const QVector& x, int order) {
  require_unitary(u);
  if (x.size() != u.dim()) throw Error(ErrorKind::Dimension, "vector length mismatch");
  if (order < 0) throw Error(ErrorKind::Domain, "order must be nonnegative");
  std::vector<Quaternion> values(static_cast<std::size_t>(2 * order + 1));
  QVector power_x = x;
  for (int n = 0; n <= order; ++n) {
    const Quaternion r = inner(power_x, x);
    values[static_cast<std::size_t>(order + n)] = r;
    values[static_cast<std::size_t>(order - n)] = r.conj();
    power_x = u * power_x;
  }
  // r(0) = ||x||^2 is real; conj() above only flips the sign of rounding noise.
  values[static_cast<std::size_t>(order)].x = 0.0;
  values[static_cast<std::size_t>(order)].y = 0.0;
  values[static_cast<std::size_t>(order)].z = 0.0;
  return {order, std::move(values)};
}

PsdCheck positive_definite_check(const HerglotzSequence& r, int order, double eps_psd) {
  if (order < 0 || order > r.order()) throw Error(ErrorKind::Domain, "order exceeds sequence");
  const double scale = 1e-12 * (1.0 + r.at(0).abs());
  for (int n = 0; n <= order; ++n) {
    const double d = max_abs_diff(r.at(-n), r.at(n).conj());
    if (d > scale) throw Error(ErrorKind::Domain, "sequence is not Hermitian at n = " + std::to_string(n), d);
  }
  const auto size = static_cast<std::size_t>(order + 1);
  QMatrix t(size);
  for (std::size_t m = 0; m < size; ++m)
    for (std::size_t n = 0; n < size; ++n)
      t(m, n) = r.at(static_cast<int>(n) - static_cast<int>(m));
  const Eigen::SelfAdjointEigenSolver<CMatrix> solver(chi(t), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::Eigensolver, "Hermitian eigensolver did not converge");
  }
  const double lmin = solver.eigenvalues()(0);
  return {lmin, lmin >= -eps_psd};
}

QPositivityReport q_positivity(const AtomicQMeasure& nu, const Frame& frame,
                               const Tolerances& tol) {
  QPositivityReport report;
  const auto& atoms = nu.atoms;
  std::vector<Quaternion> w(atoms.size());
  for (std::size_t a = 0; a < atoms.size(); ++a) w[a] = frame.from_frame(atoms[a].weight);

  bool blocks_ok = true;
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    const double t = normalize_angle(atoms[a].t);
    const double mirror_t = normalize_angle(kTwoPi - t);
    Quaternion partner;
    for (std::size_t b = 0; b < atoms.size(); ++b) {
      if (circular_distance(normalize_angle(atoms[b].t), mirror_t) <= tol.cluster) {
        partner = w[b];
        break;
      }
    }
    const std::complex<double> nu1 = w[a].c1();
    const std::complex<double> nu2 = w[a].c2();
    const std::complex<double> nu3 = partner.c1();

    PairedBlock pb;
    pb.t = atoms[a].t;
    pb.mirror_t = mirror_t;
    pb.block << nu1, nu2, std::conj(nu2), nu3;
    const double a11 = nu1.real(), a22 = nu3.real();
    pb.min_eigenvalue =
        0.5 * (a11 + a22) - std::sqrt(0.25 * (a11 - a22) * (a11 - a22) + std::norm(nu2));
    blocks_ok = blocks_ok && pb.min_eigenvalue >= -tol.psd;
    report.hermitian_residual =
        std::max({report.hermitian_residual, std::abs(nu1.imag()), std::abs(nu3.imag())});
    report.antisymmetry_residual =
        std::max(report.antisymmetry_residual, std::abs(nu2 + partner.c2()));
    report.paired_blocks.push_back(pb);
  }
  report.verdict = blocks_ok && report.antisymmetry_residual <= tol.psd &&
                   report.hermitian_residual <= tol.psd;
  return report;
}

Quaternion spectral_pairing(const SpectralDecomposition& d, const std::vector<std::size_t>& sigma,
                            const QVector& x, const QVector& y) {
  const auto chosen = validated_selection(d, sigma);
  const AtomicQMeasure nu = pair_measure(d, x, y);
  Quaternion s;
  for (std::size_t k : chosen) s += nu.atoms[k].weight;
  return s;
}

Quaternion spectral_distribution(const SpectralDecomposition& d, double t, const QVector& x,
                                 const QVector& y) {
  const AtomicQMeasure nu = pair_measure(d, x, y);
  Quaternion s;
  for (const auto& a : nu.atoms)
    if (a.t <= t) s += a.weight;
  return s;
}

QMatrix sphere_projector_from_E(const SpectralDecomposition& d,
                                const std::vector<std::size_t>& sigma, const Tolerances& tol) {
  const auto chosen = validated_selection(d, sigma);
  for (std::size_t k : chosen) {
    if (!std::binary_search(chosen.begin(), chosen.end(), d.mirror()[k])) {
      throw Error(ErrorKind::Selection, "selection not axially symmetric: angle index " +
                                            std::to_string(k) + " lacks its reflection");
    }
  }
  const auto size = static_cast<Eigen::Index>(2 * d.dim());
  CMatrix m = CMatrix::Zero(size, size);
  for (std::size_t k : chosen) m += d.projectors()[k];
  return to_frame(chi_inv(m, tol.sym), d.frame());
}

bool complex_preserving_check(const QMatrix& u, const Tolerances& tol) {
  require_unitary(u);
  return std::all_of(u.entries().begin(), u.entries().end(), [&](const Quaternion& q) {
    return std::abs(q.y) <= tol.real && std::abs(q.z) <= tol.real;
  });
}

}  // namespace qspec
