#include "qspec/slicefun.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "qspec/error.hpp"

namespace qspec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kApproxGrid = 1024;

double component(const Quaternion& q, int l) {
  switch (l) {
    case 0: return q.w;
    case 1: return q.x;
    case 2: return q.y;
    default: return q.z;
  }
}

bool finite(const Quaternion& q) {
  return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

/// f(e^{it}) for an intrinsic f, as a point of C_i.
std::complex<double> intrinsic_value(const SliceFunction& f, double t) {
  return {f.alpha(std::cos(t), std::sin(t)).w, f.beta(std::cos(t), std::sin(t)).w};
}

}  // namespace

Quaternion SliceFunction::operator()(const Quaternion& q) const {
  const double v = q.imag_abs();
  if (v == 0.0) return alpha(q.w, 0.0) + kI * beta(q.w, 0.0);
  const Quaternion unit = q.imag() / v;
  return alpha(q.w, v) + unit * beta(q.w, v);
}

Quaternion SliceFunction::on_circle(double t, const UnitImaginary& plane) const {
  const double u = std::cos(t), v = std::sin(t);
  return alpha(u, v) + plane.as_quaternion() * beta(u, v);
}

void check_slice(const SliceFunction& f, double eps_slice, const std::vector<double>& extra_angles) {
  if (!f.alpha || !f.beta) throw Error(ErrorKind::NotSliceContinuous, "alpha or beta is empty");
  std::vector<double> angles;
  for (int k = 0; k < kSliceGrid; ++k) angles.push_back(kTwoPi * k / kSliceGrid);
  angles.insert(angles.end(), extra_angles.begin(), extra_angles.end());

  double worst = 0.0, worst_t = 0.0;
  auto note = [&](double r, double t) {
    if (!(r <= worst)) {
      worst = std::isnan(r) ? std::numeric_limits<double>::infinity() : r;
      worst_t = t;
    }
  };
  for (double t : angles) {
    const double u = std::cos(t), v = std::sin(t);
    const Quaternion a_plus = f.alpha(u, v), a_minus = f.alpha(u, -v);
    const Quaternion b_plus = f.beta(u, v), b_minus = f.beta(u, -v);
    if (!finite(a_plus) || !finite(a_minus) || !finite(b_plus) || !finite(b_minus)) {
      note(std::numeric_limits<double>::infinity(), t);
      continue;
    }
    note(max_abs_diff(a_plus, a_minus), t);
    note(max_abs_diff(b_plus, -b_minus), t);
    if (f.declared_intrinsic) {
      note(a_plus.imag_abs(), t);
      note(b_plus.imag_abs(), t);
    }
  }
  if (worst > eps_slice) {
    std::ostringstream os;
    os << "slice condition violated by " << worst << " at (u, v) = (" << std::cos(worst_t) << ", "
       << std::sin(worst_t) << ")";
    throw Error(ErrorKind::NotSliceContinuous, os.str(), worst);
  }
}

std::array<SliceFunction, 4> intrinsic_split(const SliceFunction& f, double eps_slice) {
  check_slice(f, eps_slice);
  std::array<SliceFunction, 4> parts;
  for (int l = 0; l < 4; ++l) {
    parts[static_cast<std::size_t>(l)] = SliceFunction{
        [alpha = f.alpha, l](double u, double v) { return Quaternion{component(alpha(u, v), l)}; },
        [beta = f.beta, l](double u, double v) { return Quaternion{component(beta(u, v), l)}; },
        true};
  }
  return parts;
}

SliceFunction product(const SliceFunction& f, const SliceFunction& g) {
  if (!f.declared_intrinsic || !g.declared_intrinsic) {
    throw Error(ErrorKind::Domain, "product is defined here for intrinsic functions only");
  }
  return {[f, g](double u, double v) {
            return f.alpha(u, v) * g.alpha(u, v) - f.beta(u, v) * g.beta(u, v);
          },
          [f, g](double u, double v) {
            return f.alpha(u, v) * g.beta(u, v) + f.beta(u, v) * g.alpha(u, v);
          },
          true};
}

std::pair<RealFunction, RealFunction> symmetrize(RealFunction a_tilde, RealFunction b_tilde) {
  RealFunction a = [a_tilde](double u, double v) { return 0.5 * (a_tilde(u, v) + a_tilde(u, -v)); };
  RealFunction b = [b_tilde](double u, double v) { return 0.5 * (b_tilde(u, -v) - b_tilde(u, v)); };
  return {std::move(a), std::move(b)};
}

bool TrigPoly::real_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Quaternion& q) { return q.x == 0.0 && q.y == 0.0 && q.z == 0.0; });
}

Quaternion TrigPoly::operator()(double t, const UnitImaginary& plane) const {
  Quaternion s;
  for (int m = -degree_; m <= degree_; ++m) s += exp_unit(plane, m * t) * coeff(m);
  return s;
}

SliceFunction TrigPoly::as_slice_function() const {
  const TrigPoly p = *this;
  return {[p](double u, double v) {
            const double t = std::atan2(v, u);
            Quaternion s;
            for (int m = -p.degree(); m <= p.degree(); ++m) s += std::cos(m * t) * p.coeff(m);
            return s;
          },
          [p](double u, double v) {
            const double t = std::atan2(v, u);
            Quaternion s;
            for (int m = -p.degree(); m <= p.degree(); ++m) s += std::sin(m * t) * p.coeff(m);
            return s;
          },
          real_coefficients()};
}

TrigPoly TrigPoly::from_terms(const std::vector<std::pair<int, Quaternion>>& terms) {
  int degree = 0;
  for (const auto& [m, a] : terms) degree = std::max(degree, std::abs(m));
  TrigPoly p(degree);
  for (const auto& [m, a] : terms) p.coeff(m) += a;
  return p;
}

Approximation weierstrass_approx(const SliceFunction& f, int degree) {
  if (degree < 0) throw Error(ErrorKind::Domain, "degree must be nonnegative");
  SliceFunction checked = f;
  checked.declared_intrinsic = true;
  check_slice(checked);

  std::vector<std::complex<double>> g(kApproxGrid);
  for (int k = 0; k < kApproxGrid; ++k) g[static_cast<std::size_t>(k)] = intrinsic_value(f, kTwoPi * k / kApproxGrid);

  // Fejér weights on the DFT coefficients. For an intrinsic f the samples
  // satisfy g(-t) = conj g(t), so the coefficients are real up to rounding;
  // keeping the real parts is the even/odd symmetrization of α and β.
  Approximation out{TrigPoly(degree), 0.0};
  for (int m = -degree; m <= degree; ++m) {
    std::complex<double> c = 0.0;
    for (int k = 0; k < kApproxGrid; ++k)
      c += g[static_cast<std::size_t>(k)] * std::polar(1.0, -kTwoPi * m * k / kApproxGrid);
    c /= static_cast<double>(kApproxGrid);
    const double fejer = 1.0 - static_cast<double>(std::abs(m)) / (degree + 1);
    out.poly.coeff(m) = Quaternion{fejer * c.real()};
  }

  for (int k = 0; k < kApproxGrid; ++k) {
    const double t = kTwoPi * k / kApproxGrid;
    std::complex<double> r = 0.0;
    for (int m = -degree; m <= degree; ++m) r += out.poly.coeff(m).w * std::polar(1.0, m * t);
    out.sup_error = std::max(out.sup_error, std::abs(r - g[static_cast<std::size_t>(k)]));
  }
  return out;
}

QMatrix funcalc_spectral(const SliceFunction& f, const SpectralDecomposition& d,
                         const Tolerances& tol) {
  check_slice(f, tol.slice, d.angles());
  const Frame& frame = d.frame();
  const auto size = static_cast<Eigen::Index>(2 * d.dim());
  const Quaternion units[4] = {kOne, kI, kJ, kK};

  std::vector<Quaternion> alpha, beta;
  for (double lambda : d.angles()) {
    alpha.push_back(frame.from_frame(f.alpha(std::cos(lambda), std::sin(lambda))));
    beta.push_back(frame.from_frame(f.beta(std::cos(lambda), std::sin(lambda))));
  }

  QMatrix result(d.dim());
  for (int l = 0; l < 4; ++l) {
    CMatrix m = CMatrix::Zero(size, size);
    bool nonzero = false;
    for (std::size_t k = 0; k < d.angles().size(); ++k) {
      const std::complex<double> value{component(alpha[k], l), component(beta[k], l)};
      if (value == 0.0) continue;
      m += value * d.projectors()[k];
      nonzero = true;
    }
    if (!nonzero) continue;
    QMatrix part;
    try {
      part = chi_inv(m, tol.sym);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotInImage) throw;
      throw Error(ErrorKind::CalculusInconsistency,
                  "intrinsic component " + std::to_string(l) + " failed the chi symmetry check",
                  e.value());
    }
    result = result + part * units[l];
  }
  return to_frame(result, frame);
}

QMatrix funcalc_trigpoly(const TrigPoly& p, const QMatrix& u) {
  if (!is_unitary(u, 1e-10)) throw Error(ErrorKind::NotUnitary, "funcalc_trigpoly needs a unitary matrix");
  const std::size_t n = u.dim();
  const QMatrix u_star = adjoint(u);
  QMatrix acc = QMatrix::identity(n) * p.coeff(0);
  QMatrix pos = QMatrix::identity(n), neg = QMatrix::identity(n);
  for (int m = 1; m <= p.degree(); ++m) {
    pos = u * pos;
    neg = u_star * neg;
    acc = acc + pos * p.coeff(m) + neg * p.coeff(-m);
  }
  return acc;
}

std::vector<ConvergenceRow> funcalc_converge(const SliceFunction& f, const QMatrix& u,
                                             const std::vector<int>& degrees,
                                             const Tolerances& tol) {
  const SpectralDecomposition d = decompose(u, Frame{}, tol);
  const QMatrix exact = funcalc_spectral(f, d, tol);
  std::vector<ConvergenceRow> rows;
  for (int degree : degrees) {
    const Approximation approx = weierstrass_approx(f, degree);
    ConvergenceRow row;
    row.degree = degree;
    row.operator_error = operator_norm(funcalc_trigpoly(approx.poly, u) - exact);
    for (double lambda : d.angles())
      row.angle_error =
          std::max(row.angle_error, (approx.poly(lambda) - f.on_circle(lambda)).abs());
    row.grid_error = approx.sup_error;
    rows.push_back(row);
  }
  return rows;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"identity",    "inverse", "square",
                                                 "cosine_part", "abs_cos", "exp_scaled"};
  return names;
}

SliceFunction builtin_function(const std::string& name) {
  using Q = Quaternion;
  if (name == "identity")
    return {[](double u, double) { return Q{u}; }, [](double, double v) { return Q{v}; }, true};
  if (name == "inverse")
    return {[](double u, double v) { return Q{u / (u * u + v * v)}; },
            [](double u, double v) { return Q{-v / (u * u + v * v)}; }, true};
  if (name == "square")
    return {[](double u, double v) { return Q{u * u - v * v}; },
            [](double u, double v) { return Q{2.0 * u * v}; }, true};
  if (name == "cosine_part")
    return {[](double u, double) { return Q{u}; }, [](double, double) { return Q{}; }, true};
  if (name == "abs_cos")
    return {[](double u, double) { return Q{std::abs(u)}; }, [](double, double) { return Q{}; },
            true};
  if (name == "exp_scaled")
    return {[](double u, double v) { return Q{std::exp(0.5 * u) * std::cos(0.5 * v)}; },
            [](double u, double v) { return Q{std::exp(0.5 * u) * std::sin(0.5 * v)}; }, true};
  throw Error(ErrorKind::Config, "unknown function '" + name + "'");
}

}  // namespace qspec
