#include "qspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "qspec/contour.hpp"
#include "qspec/error.hpp"
#include "qspec/random.hpp"
#include "qspec/slicefun.hpp"
#include "qspec/spectral.hpp"
#include "qspec/sspectrum.hpp"

namespace qspec {

void RunConfig::validate() const {
  const double all[] = {tol.real, tol.sym, tol.sing, tol.cluster, tol.spec, tol.quad, tol.psd, tol.slice};
  for (double t : all)
    if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorKind::Config, "tolerances must be positive");
  if (dim_cap < 1 || dim_cap > kMaxDim) throw Error(ErrorKind::Config, "dimension cap must be in 1..64");
  if (nodes_per_loop < 16) throw Error(ErrorKind::Config, "nodes per loop must be at least 16");
  if (instances < 1) throw Error(ErrorKind::Config, "instances must be positive");
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer over a simple combination
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (a + 1) + 0xBF58476D1CE4E5B9ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "resolvent_equation.first_form",
      "resolvent_equation.second_form",
      "contour_identity.inside",
      "contour_identity.outside",
      "riesz.empty_is_zero",
      "riesz.full_is_identity",
      "riesz.idempotent",
      "riesz.commutes",
      "riesz.additive",
      "riesz.multiplicative",
      "riesz.right_resolvent_form",
      "unitary.spectrum_on_unit_sphere",
      "herglotz.moment_identity",
      "herglotz.hermitian",
      "herglotz.toeplitz_psd",
      "herglotz.q_positive",
      "measure.polarization",
      "measure.right_linear",
      "measure.conjugate_linear",
      "measure.mass_bound",
      "measure.asymmetry_witness",
      "spectral_measure.identity_and_empty",
      "spectral_measure.additive",
      "spectral_measure.multiplicative",
      "spectral_measure.commutes",
      "spectral_measure.pairing_bound",
      "self_adjoint.complex_preserving",
      "self_adjoint.quaternionic",
      "calculus.trigpoly",
      "calculus.inverse",
      "calculus.multiplicative",
      "calculus.weierstrass",
      "calculus.contour_vs_spectral",
      "cauchy.formula",
      "cauchy.plane_independence",
      "bridge.riesz_equals_spectral",
  };
  return ids;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMomentRange = 12;

using Selection = std::vector<std::size_t>;

Selection range(std::size_t lo, std::size_t hi) {
  Selection s;
  for (std::size_t k = lo; k < hi; ++k) s.push_back(k);
  return s;
}

Selection intersect(const Selection& a, const Selection& b) {
  Selection out;
  for (std::size_t k : a)
    if (std::find(b.begin(), b.end(), k) != b.end()) out.push_back(k);
  return out;
}

Selection unite(Selection a, const Selection& b) {
  for (std::size_t k : b)
    if (std::find(a.begin(), a.end(), k) == a.end()) a.push_back(k);
  std::sort(a.begin(), a.end());
  return a;
}

QVector unit_vector(QuaternionRng& rng, std::size_t n) {
  const QVector x = rng.vector(n);
  return x * Quaternion{1.0 / x.norm()};
}

QVector complex_unit_vector(QuaternionRng& rng, std::size_t n) {
  QVector x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = {rng.normal(), rng.normal(), 0.0, 0.0};
  return x * Quaternion{1.0 / x.norm()};
}

Quaternion random_point(QuaternionRng& rng, double lo, double hi) {
  const Quaternion d = rng.quaternion();
  return d * (rng.uniform(lo, hi) / d.abs());
}

/// Reflection classes {k, mirror(k)} of the angle indices.
std::vector<Selection> symmetric_classes(const SpectralDecomposition& d) {
  std::vector<Selection> classes;
  std::vector<bool> seen(d.angles().size(), false);
  for (std::size_t k = 0; k < d.angles().size(); ++k) {
    if (seen[k]) continue;
    Selection c{k};
    seen[k] = true;
    if (!seen[d.mirror()[k]]) {
      c.push_back(d.mirror()[k]);
      seen[d.mirror()[k]] = true;
    }
    classes.push_back(c);
  }
  return classes;
}

Selection flatten(const std::vector<Selection>& classes, std::size_t lo, std::size_t hi) {
  Selection out;
  for (std::size_t c = lo; c < hi; ++c) out = unite(out, classes[c]);
  return out;
}

double max_atom_diff(const AtomicQMeasure& a, const AtomicQMeasure& b) {
  double r = 0.0;
  for (std::size_t k = 0; k < a.atoms.size(); ++k)
    r = std::max(r, (a.atoms[k].weight - b.atoms[k].weight).abs());
  return r;
}

class Suite {
 public:
  explicit Suite(const RunConfig& cfg) : cfg_(cfg) {
    qcfg_.nodes_per_loop = cfg.nodes_per_loop;
    qcfg_.plane = cfg.plane;
    qcfg_.tol = cfg.tol;
    if (!(cfg.plane == kUnitI)) frame_ = Frame(cfg.plane, orthogonal_unit(cfg.plane, cfg.seed));
  }

  std::vector<VerificationRecord> run_all() {
    resolvent_equation();
    contour_identity();
    riesz();
    unitary_spectrum();
    herglotz();
    measures();
    spectral_measure();
    self_adjoint();
    calculus();
    cauchy();
    bridge();
    return std::move(records_);
  }

 private:
  template <class F>
  void each(const std::string& id, double tol, F&& fn) {
    const auto it = std::find(theorem_ids().begin(), theorem_ids().end(), id);
    const auto index = static_cast<std::uint64_t>(it - theorem_ids().begin());
    for (int k = 0; k < cfg_.instances; ++k) {
      const std::uint64_t seed = derive_seed(cfg_.seed, index, static_cast<std::uint64_t>(k));
      double residual = kInf;
      try {
        residual = fn(seed);
      } catch (const std::exception&) {
        residual = kInf;
      }
      if (std::isnan(residual)) residual = kInf;
      records_.push_back({id, seed, residual, tol, residual <= tol});
    }
  }

  std::size_t dim(std::uint64_t seed) const { return 1 + static_cast<std::size_t>(seed % cfg_.dim_cap); }

  QMatrix separated_unitary(std::uint64_t seed) const {
    for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
      QMatrix u = random_unitary(dim(seed), derive_seed(seed, 0xA11CE, attempt));
      if (s_spectrum(u, cfg_.tol).min_gap() >= 0.05) return u;
    }
    throw Error(ErrorKind::Geometry, "no well-separated unitary found");
  }

  /// Alternates unitary and diagonalizable instances.
  QMatrix riesz_instance(std::uint64_t seed) const {
    if (seed % 2 == 0) return separated_unitary(seed);
    return random_diagonalizable(dim(seed), derive_seed(seed, 0xD1A6, 0));
  }

  QMatrix projector(const QMatrix& a, const Selection& s) const {
    return riesz_projector(a, s, qcfg_).projector;
  }

  SpectralDecomposition decomposition(const QMatrix& u) const { return decompose(u, frame_, cfg_.tol); }

  void resolvent_equation() {
    auto residual = [this](std::uint64_t seed, bool first) {
      QuaternionRng rng(seed);
      const QMatrix a = seed % 2 == 0 ? random_unitary(dim(seed), rng.next_seed())
                                      : random_diagonalizable(dim(seed), rng.next_seed());
      const SSpectrum spec = s_spectrum(a, cfg_.tol);
      Quaternion s, p;
      do {
        s = random_point(rng, 1.2, 3.0);
        p = random_point(rng, 1.2, 3.0);
      } while (spec.distance_to(s) < 0.2 || spec.distance_to(p) < 0.2 ||
               sphere_distance(sphere_of(s, 0.0), sphere_of(p, 0.0)) < 0.2);
      const auto r = check_resolvent_equation(s, p, a, cfg_.tol);
      return (first ? r.first_form : r.second_form) / std::max(r.lhs_norm, 1e-300);
    };
    each("resolvent_equation.first_form", 1e-9, [&](auto seed) { return residual(seed, true); });
    each("resolvent_equation.second_form", 1e-9, [&](auto seed) { return residual(seed, false); });
  }

  void contour_identity() {
    auto residual = [this](std::uint64_t seed, bool inside) {
      QuaternionRng rng(seed);
      const QMatrix b = rng.matrix(dim(seed));
      const double u = rng.uniform(-1.0, 1.0), v = rng.uniform(0.2, 1.5);
      const Quaternion p = SlicePoint{u, v, rng.unit()}.to_quaternion();
      ContourSpec c;
      c.plane = cfg_.plane;
      c.nodes_per_loop = cfg_.nodes_per_loop;
      c.loops = {inside ? Loop{{u, 0.0}, v + 0.5} : Loop{{u + v + 2.0, 0.0}, 1.0}};
      const QMatrix r = check_lemma_identity(b, p, c, cfg_.tol);
      return (inside ? r - b : r).frobenius() / b.frobenius();
    };
    each("contour_identity.inside", cfg_.tol.quad, [&](auto seed) { return residual(seed, true); });
    each("contour_identity.outside", cfg_.tol.quad, [&](auto seed) { return residual(seed, false); });
  }

  void riesz() {
    const double tol = cfg_.tol.quad;
    each("riesz.empty_is_zero", tol, [&](auto seed) {
      return projector(riesz_instance(seed), {}).frobenius();
    });
    each("riesz.full_is_identity", tol, [&](auto seed) {
      const QMatrix a = riesz_instance(seed);
      const auto k = s_spectrum(a, cfg_.tol).spheres.size();
      return (projector(a, range(0, k)) - QMatrix::identity(a.dim())).frobenius();
    });
    each("riesz.idempotent", tol, [&](auto seed) {
      const QMatrix a = riesz_instance(seed);
      const auto k = s_spectrum(a, cfg_.tol).spheres.size();
      return riesz_projector(a, {seed % k}, qcfg_).idempotency_residual;
    });
    each("riesz.commutes", tol, [&](auto seed) {
      const QMatrix a = riesz_instance(seed);
      const auto k = s_spectrum(a, cfg_.tol).spheres.size();
      return riesz_projector(a, {seed % k}, qcfg_).commutator_residual;
    });
    each("riesz.additive", tol, [&](auto seed) {
      const QMatrix a = riesz_instance(seed);
      const auto k = s_spectrum(a, cfg_.tol).spheres.size();
      const Selection lo = range(0, k / 2), hi = range(k / 2, k);
      return (projector(a, unite(lo, hi)) - projector(a, lo) - projector(a, hi)).frobenius();
    });
    each("riesz.multiplicative", tol, [&](auto seed) {
      const QMatrix a = riesz_instance(seed);
      const auto k = s_spectrum(a, cfg_.tol).spheres.size();
      const Selection s = range(0, k / 2 + 1), t = range((k - 1) / 2, k);
      return (projector(a, s) * projector(a, t) - projector(a, intersect(s, t))).frobenius();
    });
    each("riesz.right_resolvent_form", tol, [&](auto seed) {
      const QMatrix a = riesz_instance(seed);
      const auto k = s_spectrum(a, cfg_.tol).spheres.size();
      const RieszProjector left = riesz_projector(a, {seed % k}, qcfg_);
      return (integrate_right(left.contour, a, cfg_.tol) - left.projector).frobenius();
    });
  }

  void unitary_spectrum() {
    each("unitary.spectrum_on_unit_sphere", 1e-10, [&](auto seed) {
      double r = 0.0;
      for (const auto& s : s_spectrum(random_unitary(dim(seed), seed), cfg_.tol).spheres)
        r = std::max(r, std::abs(s.u * s.u + s.v * s.v - 1.0));
      return r;
    });
  }

  struct MeasureInstance {
    QMatrix u;
    SpectralDecomposition d;
    QVector x, y;
  };

  MeasureInstance measure_instance(std::uint64_t seed) const {
    QuaternionRng rng(seed);
    QMatrix u = random_unitary(dim(seed), rng.next_seed());
    SpectralDecomposition d = decomposition(u);
    QVector x = unit_vector(rng, u.dim());
    QVector y = unit_vector(rng, u.dim());
    return {std::move(u), std::move(d), std::move(x), std::move(y)};
  }

  void herglotz() {
    each("herglotz.moment_identity", 1e-9, [&](auto seed) {
      const auto m = measure_instance(seed);
      const AtomicQMeasure nu = pair_measure(m.d, m.x, m.y);
      const QMatrix u_star = adjoint(m.u);
      double r = 0.0;
      QVector pos = m.x, neg = m.x;
      for (int n = 0; n <= kMomentRange; ++n) {
        r = std::max(r, (nu.moment(n) - inner(pos, m.y)).abs());
        r = std::max(r, (nu.moment(-n) - inner(neg, m.y)).abs());
        pos = m.u * pos;
        neg = u_star * neg;
      }
      return r;
    });
    each("herglotz.hermitian", 1e-10, [&](auto seed) {
      const auto m = measure_instance(seed);
      const HerglotzSequence r = herglotz_sequence(m.u, m.x, kMomentRange);
      const QMatrix u_star = adjoint(m.u);
      double res = 0.0;
      QVector neg = m.x;
      for (int n = 0; n <= kMomentRange; ++n) {
        res = std::max(res, (r.at(-n) - inner(neg, m.x)).abs());
        res = std::max(res, (r.at(-n) - r.at(n).conj()).abs());
        neg = u_star * neg;
      }
      return res;
    });
    each("herglotz.toeplitz_psd", cfg_.tol.psd, [&](auto seed) {
      const auto m = measure_instance(seed);
      const HerglotzSequence r = herglotz_sequence(m.u, m.x, kMomentRange);
      return std::max(0.0, -positive_definite_check(r, kMomentRange, cfg_.tol.psd).min_eigenvalue);
    });
    each("herglotz.q_positive", cfg_.tol.psd, [&](auto seed) {
      const auto m = measure_instance(seed);
      const QPositivityReport rep = q_positivity(pair_measure(m.d, m.x, m.x), frame_, cfg_.tol);
      double r = std::max(rep.antisymmetry_residual, rep.hermitian_residual);
      for (const auto& b : rep.paired_blocks) r = std::max(r, -b.min_eigenvalue);
      return r;
    });
  }

  void measures() {
    each("measure.polarization", 1e-9, [&](auto seed) {
      const auto m = measure_instance(seed);
      return max_atom_diff(polarize(m.d, m.x, m.y), pair_measure(m.d, m.x, m.y));
    });
    each("measure.right_linear", 1e-9, [&](auto seed) {
      const auto m = measure_instance(seed);
      QuaternionRng rng(derive_seed(seed, 1, 1));
      const QVector z = unit_vector(rng, m.u.dim());
      const Quaternion a = rng.quaternion(), b = rng.quaternion();
      const AtomicQMeasure lhs = pair_measure(m.d, m.x * a + m.y * b, z);
      const AtomicQMeasure nx = pair_measure(m.d, m.x, z), ny = pair_measure(m.d, m.y, z);
      double r = 0.0;
      for (std::size_t k = 0; k < lhs.atoms.size(); ++k)
        r = std::max(r, (lhs.atoms[k].weight - nx.atoms[k].weight * a - ny.atoms[k].weight * b).abs());
      return r;
    });
    each("measure.conjugate_linear", 1e-9, [&](auto seed) {
      const auto m = measure_instance(seed);
      QuaternionRng rng(derive_seed(seed, 1, 2));
      const QVector z = unit_vector(rng, m.u.dim());
      const Quaternion a = embed({rng.normal(), rng.normal()}, frame_.I());
      const Quaternion b = embed({rng.normal(), rng.normal()}, frame_.I());
      const AtomicQMeasure lhs = pair_measure(m.d, z, m.x * a + m.y * b);
      const AtomicQMeasure nx = pair_measure(m.d, z, m.x), ny = pair_measure(m.d, z, m.y);
      double r = 0.0;
      for (std::size_t k = 0; k < lhs.atoms.size(); ++k)
        r = std::max(r, (lhs.atoms[k].weight - a.conj() * nx.atoms[k].weight -
                         b.conj() * ny.atoms[k].weight).abs());
      return r;
    });
    each("measure.mass_bound", 1e-10, [&](auto seed) {
      QuaternionRng rng(seed);
      const QMatrix u = random_unitary(dim(seed), rng.next_seed());
      const QVector x = rng.vector(u.dim()), y = rng.vector(u.dim());
      const double mass = pair_measure(decomposition(u), x, y).total().abs();
      return std::max(0.0, mass - x.norm() * y.norm());
    });
    each("measure.asymmetry_witness", 0.0, [&](auto seed) {
      QuaternionRng rng(seed);
      const double theta = rng.uniform(0.1, std::numbers::pi - 0.1);
      const QMatrix u{{exp_unit(kUnitI, theta)}};
      const SpectralDecomposition d = decompose(u, Frame{}, cfg_.tol);
      const QVector x{kOne}, y{kJ};
      const AtomicQMeasure xy = pair_measure(d, x, y), yx = pair_measure(d, y, x);
      double gap = 0.0;
      for (std::size_t k = 0; k < xy.atoms.size(); ++k)
        gap = std::max(gap, (xy.atoms[k].weight - yx.atoms[k].weight.conj()).abs());
      return gap > 1e-6 ? 0.0 : 1.0;
    });
  }

  void spectral_measure() {
    each("spectral_measure.identity_and_empty", 1e-10, [&](auto seed) {
      const auto m = measure_instance(seed);
      const Selection all = range(0, m.d.angles().size());
      double r = (spectral_pairing(m.d, all, m.x, m.y) - inner(m.x, m.y)).abs();
      r = std::max(r, spectral_pairing(m.d, {}, m.x, m.y).abs());
      r = std::max(r, (sphere_projector_from_E(m.d, all, cfg_.tol) - QMatrix::identity(m.u.dim())).frobenius());
      return std::max(r, sphere_projector_from_E(m.d, {}, cfg_.tol).frobenius());
    });
    each("spectral_measure.additive", 1e-9, [&](auto seed) {
      const auto m = measure_instance(seed);
      const auto classes = symmetric_classes(m.d);
      const Selection lo = flatten(classes, 0, classes.size() / 2);
      const Selection hi = flatten(classes, classes.size() / 2, classes.size());
      double r = (sphere_projector_from_E(m.d, unite(lo, hi), cfg_.tol) -
                  sphere_projector_from_E(m.d, lo, cfg_.tol) - sphere_projector_from_E(m.d, hi, cfg_.tol))
                     .frobenius();
      const std::size_t half = m.d.angles().size() / 2;
      const Selection a = range(0, half), b = range(half, m.d.angles().size());
      r = std::max(r, (spectral_pairing(m.d, unite(a, b), m.x, m.y) - spectral_pairing(m.d, a, m.x, m.y) -
                       spectral_pairing(m.d, b, m.x, m.y)).abs());
      return r;
    });
    each("spectral_measure.multiplicative", 1e-9, [&](auto seed) {
      const auto m = measure_instance(seed);
      const auto classes = symmetric_classes(m.d);
      const std::size_t c = classes.size();
      const Selection s = flatten(classes, 0, c / 2 + 1), t = flatten(classes, (c - 1) / 2, c);
      return (sphere_projector_from_E(m.d, s, cfg_.tol) * sphere_projector_from_E(m.d, t, cfg_.tol) -
              sphere_projector_from_E(m.d, intersect(s, t), cfg_.tol))
          .frobenius();
    });
    each("spectral_measure.commutes", 1e-9, [&](auto seed) {
      const auto m = measure_instance(seed);
      const auto classes = symmetric_classes(m.d);
      const QMatrix e = sphere_projector_from_E(m.d, classes[seed % classes.size()], cfg_.tol);
      return (e * m.u - m.u * e).frobenius();
    });
    each("spectral_measure.pairing_bound", 1e-10, [&](auto seed) {
      const auto m = measure_instance(seed);
      QuaternionRng rng(derive_seed(seed, 2, 0));
      Selection s;
      for (std::size_t k = 0; k < m.d.angles().size(); ++k)
        if (rng.uniform(0.0, 1.0) < 0.5) s.push_back(k);
      return std::max(0.0, spectral_pairing(m.d, s, m.x, m.y).abs() - m.x.norm() * m.y.norm());
    });
  }

  void self_adjoint() {
    each("self_adjoint.complex_preserving", 1e-10, [&](auto seed) {
      QuaternionRng rng(seed);
      const QMatrix u = random_complex_unitary(dim(seed), rng.next_seed());
      if (!complex_preserving_check(u, cfg_.tol)) return kInf;
      const SpectralDecomposition d = decompose(u, Frame{}, cfg_.tol);
      return pair_measure(d, complex_unit_vector(rng, u.dim()), complex_unit_vector(rng, u.dim()))
          .max_second_component();
    });
    each("self_adjoint.quaternionic", 0.0, [&](auto seed) {
      QuaternionRng rng(seed);
      const QMatrix u = random_unitary(dim(seed), rng.next_seed());
      if (complex_preserving_check(u, cfg_.tol)) return 1.0;
      const SpectralDecomposition d = decompose(u, Frame{}, cfg_.tol);
      const QVector x = complex_unit_vector(rng, u.dim());
      return pair_measure(d, x, x).max_second_component() > 1e-6 ? 0.0 : 1.0;
    });
  }

  void calculus() {
    each("calculus.trigpoly", 1e-10, [&](auto seed) {
      QuaternionRng rng(seed);
      const QMatrix u = random_unitary(dim(seed), rng.next_seed());
      TrigPoly p(1 + static_cast<int>(seed % 8));
      for (int m = -p.degree(); m <= p.degree(); ++m) p.coeff(m) = Quaternion{rng.normal()};
      return (funcalc_spectral(p.as_slice_function(), decomposition(u), cfg_.tol) -
              funcalc_trigpoly(p, u))
          .frobenius();
    });
    each("calculus.inverse", 1e-10, [&](auto seed) {
      const QMatrix u = random_unitary(dim(seed), seed);
      return (funcalc_spectral(builtin_function("inverse"), decomposition(u), cfg_.tol) - adjoint(u))
          .frobenius();
    });
    each("calculus.multiplicative", 1e-9, [&](auto seed) {
      const QMatrix u = random_unitary(dim(seed), seed);
      const SpectralDecomposition d = decomposition(u);
      const SliceFunction f = builtin_function("exp_scaled"), g = builtin_function("square");
      return (funcalc_spectral(f, d, cfg_.tol) * funcalc_spectral(g, d, cfg_.tol) -
              funcalc_spectral(product(f, g), d, cfg_.tol))
          .frobenius();
    });
    each("calculus.weierstrass", 1e-9, [&](auto seed) {
      const QMatrix u = random_unitary(dim(seed), seed);
      const auto rows = funcalc_converge(builtin_function("abs_cos"), u, {4, 16, 64}, cfg_.tol);
      double r = 0.0;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        r = std::max(r, rows[k].operator_error - rows[k].angle_error);
        if (k > 0) r = std::max(r, rows[k].grid_error - rows[k - 1].grid_error);
      }
      return r;
    });
    each("calculus.contour_vs_spectral", 1e-9, [&](auto seed) {
      const QMatrix u = random_unitary(dim(seed), seed);
      const int m = static_cast<int>(seed % 4);
      RightPolynomial f;
      f.coeffs.assign(static_cast<std::size_t>(m + 1), Quaternion{});
      f.coeffs.back() = kOne;
      TrigPoly p(m);
      p.coeff(m) = kOne;
      ContourSpec c;
      c.plane = cfg_.plane;
      c.nodes_per_loop = cfg_.nodes_per_loop;
      c.loops = {Loop{{0.0, 0.0}, 1.5}};
      const QMatrix direct = power(u, static_cast<unsigned>(m));
      const QMatrix spectral = funcalc_spectral(p.as_slice_function(), decomposition(u), cfg_.tol);
      return std::max((funcalc_contour(f, u, c, cfg_.tol) - direct).frobenius(),
                      (spectral - direct).frobenius());
    });
  }

  void cauchy() {
    each("cauchy.formula", cfg_.tol.quad, [&](auto seed) {
      QuaternionRng rng(seed);
      RightPolynomial f;
      for (std::uint64_t k = 0; k <= 1 + seed % 4; ++k) f.coeffs.push_back(rng.quaternion());
      const Quaternion q = random_point(rng, 0.0, 1.0);
      ContourSpec c;
      c.plane = cfg_.plane;
      c.nodes_per_loop = cfg_.nodes_per_loop;
      c.loops = {Loop{{0.0, 0.0}, 2.5}};
      const Quaternion exact = f(q);
      return (cauchy_eval(f, q, c, cfg_.tol) - exact).abs() / std::max(1.0, exact.abs());
    });
    each("cauchy.plane_independence", 2.0 * cfg_.tol.quad, [&](auto seed) {
      QuaternionRng rng(seed);
      const QMatrix u = separated_unitary(seed);
      const Selection s{seed % s_spectrum(u, cfg_.tol).spheres.size()};
      QuadratureConfig q = qcfg_;
      q.plane = kUnitI;
      const QMatrix reference = riesz_projector(u, s, q).projector;
      double r = 0.0;
      for (int k = 0; k < 5; ++k) {
        q.plane = rng.unit();
        r = std::max(r, (riesz_projector(u, s, q).projector - reference).frobenius());
      }
      return r;
    });
  }

  void bridge() {
    each("bridge.riesz_equals_spectral", 2.0 * cfg_.tol.quad, [&](auto seed) {
      const QMatrix u = separated_unitary(seed);
      const SSpectrum spec = s_spectrum(u, cfg_.tol);
      const SpectralDecomposition d = decomposition(u);
      double r = 0.0;
      for (std::size_t k = 0; k < spec.spheres.size(); ++k) {
        const Selection angles = d.angles_on_sphere(spec.spheres[k], 1e-6);
        if (angles.empty()) return kInf;
        r = std::max(r, (projector(u, {k}) - sphere_projector_from_E(d, angles, cfg_.tol)).frobenius());
      }
      return r;
    });
  }

  const RunConfig& cfg_;
  QuadratureConfig qcfg_;
  Frame frame_;
  std::vector<VerificationRecord> records_;
};

}  // namespace

std::vector<VerificationRecord> verify_all(const RunConfig& cfg) {
  cfg.validate();
  return Suite(cfg).run_all();
}

std::vector<GroupSummary> report(const std::vector<VerificationRecord>& records) {
  std::vector<GroupSummary> groups;
  std::map<std::string, std::size_t> index;
  for (const auto& r : records) {
    auto [it, fresh] = index.try_emplace(r.theorem_id, groups.size());
    if (fresh) groups.push_back({r.theorem_id, 0, 0.0, r.tolerance, true});
    GroupSummary& g = groups[it->second];
    ++g.instances;
    g.max_residual = std::max(g.max_residual, r.residual);
    g.tolerance = std::max(g.tolerance, r.tolerance);
    g.pass = g.pass && r.pass;
  }
  return groups;
}

namespace {

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json to_json(const VerificationRecord& r) {
  return Json{{"theorem", r.theorem_id},
              {"instance_seed", r.instance_seed},
              {"residual", number_or_null(r.residual)},
              {"tolerance", r.tolerance},
              {"pass", r.pass}};
}

Json to_json(const GroupSummary& g) {
  return Json{{"theorem", g.theorem},
              {"instances", g.instances},
              {"max_residual", number_or_null(g.max_residual)},
              {"tolerance", g.tolerance},
              {"pass", g.pass}};
}

std::string report_text(const std::vector<GroupSummary>& groups) {
  std::ostringstream os;
  for (const auto& g : groups) {
    os << (g.pass ? "PASS " : "FAIL ") << std::left << std::setw(38) << g.theorem << std::right
       << std::setw(4) << g.instances << "  max " << std::scientific << std::setprecision(3)
       << g.max_residual << "  tol " << g.tolerance << "\n";
  }
  return os.str();
}

int exit_code(const std::vector<VerificationRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; }) ? 0 : 1;
}

}  // namespace qspec
