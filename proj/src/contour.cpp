#include "qspec/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qspec/error.hpp"

namespace qspec {

void ContourSpec::validate() const {
  if (nodes_per_loop < 16) {
    throw Error(ErrorKind::Contour, "nodes_per_loop must be at least 16",
                static_cast<double>(nodes_per_loop));
  }
  for (std::size_t a = 0; a < loops.size(); ++a) {
    const Loop& la = loops[a];
    if (!(la.radius > 0.0) || !std::isfinite(la.radius)) {
      throw Error(ErrorKind::Contour, "loop radius must be positive", la.radius);
    }
    for (std::size_t b = a + 1; b < loops.size(); ++b) {
      const Loop& lb = loops[b];
      if (std::abs(la.center - lb.center) <= la.radius + lb.radius) {
        throw Error(ErrorKind::Contour,
                    "loops " + std::to_string(a) + " and " + std::to_string(b) + " intersect");
      }
    }
    const double eps = 1e-12 * (1.0 + std::abs(la.center) + la.radius);
    const bool mirrored = std::any_of(loops.begin(), loops.end(), [&](const Loop& l) {
      return std::abs(l.center - std::conj(la.center)) <= eps &&
             std::abs(l.radius - la.radius) <= eps;
    });
    if (!mirrored) {
      throw Error(ErrorKind::Contour, "loop set is not symmetric under conjugation");
    }
  }
}

bool ContourSpec::encloses(std::complex<double> z, double margin) const {
  return std::any_of(loops.begin(), loops.end(), [&](const Loop& l) {
    return std::abs(z - l.center) < l.radius - margin;
  });
}

bool ContourSpec::encloses_sphere(const EigenSphere& s, double margin) const {
  return encloses({s.u, s.v}, margin) && encloses({s.u, -s.v}, margin);
}

double ContourSpec::boundary_distance(std::complex<double> z) const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& l : loops) d = std::min(d, std::abs(std::abs(z - l.center) - l.radius));
  return d;
}

std::vector<QuadratureNode> quadrature_nodes(const ContourSpec& c) {
  c.validate();
  std::vector<QuadratureNode> nodes;
  nodes.reserve(c.loops.size() * static_cast<std::size_t>(c.nodes_per_loop));
  const double n = static_cast<double>(c.nodes_per_loop);
  for (const auto& loop : c.loops) {
    for (int m = 0; m < c.nodes_per_loop; ++m) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / n;
      const std::complex<double> offset = std::polar(loop.radius, theta);
      nodes.push_back({embed(loop.center + offset, c.plane), embed(offset, c.plane) / n});
    }
  }
  return nodes;
}

Quaternion RightPolynomial::operator()(const Quaternion& s) const {
  Quaternion acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = s * acc + *it;
  return acc;
}

QMatrix RightPolynomial::operator()(const QMatrix& a) const {
  const std::size_t n = a.dim();
  QMatrix acc(n);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = a * acc;
    for (std::size_t k = 0; k < n; ++k) acc(k, k) += *it;
  }
  return acc;
}

namespace {

void guard_nodes(const std::vector<QuadratureNode>& nodes, const SSpectrum& spec,
                 const Tolerances& tol) {
  for (std::size_t m = 0; m < nodes.size(); ++m) {
    const double d = spec.distance_to(nodes[m].s);
    if (d <= tol.spec) {
      std::ostringstream os;
      os << "quadrature node " << m << " at " << nodes[m].s << " is within " << d
         << " of the S-spectrum";
      throw Error(ErrorKind::ContourTouchesSpectrum, os.str(), d);
    }
  }
}

}  // namespace

QMatrix integrate_left(const ContourSpec& c, const QMatrix& a, const Tolerances& tol) {
  const auto nodes = quadrature_nodes(c);
  guard_nodes(nodes, s_spectrum(a, tol), tol);
  const QMatrix a2 = a * a;
  QMatrix sum(a.dim());
  for (const auto& node : nodes)
    sum = sum + s_resolvent_left_unchecked(node.s, a, a2) * node.weight;
  return sum;
}

QMatrix integrate_right(const ContourSpec& c, const QMatrix& a, const Tolerances& tol) {
  const auto nodes = quadrature_nodes(c);
  guard_nodes(nodes, s_spectrum(a, tol), tol);
  const QMatrix a2 = a * a;
  QMatrix sum(a.dim());
  for (const auto& node : nodes)
    sum = sum + node.weight * s_resolvent_right_unchecked(node.s, a, a2);
  return sum;
}

ContourSpec riesz_contour(const SSpectrum& spectrum, const std::vector<std::size_t>& selection,
                          const QuadratureConfig& cfg) {
  const auto& spheres = spectrum.spheres;
  std::vector<bool> chosen(spheres.size(), false);
  for (std::size_t idx : selection) {
    if (idx >= spheres.size()) {
      throw Error(ErrorKind::Selection, "sphere index " + std::to_string(idx) +
                                            " out of range (" + std::to_string(spheres.size()) +
                                            " spheres)");
    }
    chosen[idx] = true;
  }

  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < spheres.size(); ++a) {
    if (!chosen[a]) continue;
    for (std::size_t b = 0; b < spheres.size(); ++b) {
      if (b == a) continue;
      const double d = sphere_distance(spheres[a], spheres[b]);
      if (d < cfg.min_gap) {
        std::ostringstream os;
        os << "spheres " << a << " (u=" << spheres[a].u << ", v=" << spheres[a].v << ") and "
           << b << " (u=" << spheres[b].u << ", v=" << spheres[b].v << ") are " << d
           << " apart, below the separable gap " << cfg.min_gap;
        throw Error(ErrorKind::Geometry, os.str(), d);
      }
      gap = std::min(gap, d);
    }
  }
  const double r_auto = std::min(0.25, gap / 3.0);

  ContourSpec c;
  c.plane = cfg.plane;
  c.nodes_per_loop = cfg.nodes_per_loop;
  for (std::size_t a = 0; a < spheres.size(); ++a) {
    if (!chosen[a]) continue;
    const EigenSphere& s = spheres[a];
    if (s.v > 0.5 * r_auto) {
      const double rho = std::min(r_auto, 2.0 * s.v / 3.0);
      c.loops.push_back({{s.u, s.v}, rho});
      c.loops.push_back({{s.u, -s.v}, rho});
    } else {
      c.loops.push_back({{s.u, 0.0}, r_auto});
    }
  }
  return c;
}

RieszProjector riesz_projector(const QMatrix& a, const std::vector<std::size_t>& selection,
                               const QuadratureConfig& cfg) {
  const SSpectrum spec = s_spectrum(a, cfg.tol);
  RieszProjector out;
  out.contour = riesz_contour(spec, selection, cfg);
  out.contour.validate();
  const auto nodes = quadrature_nodes(out.contour);
  guard_nodes(nodes, spec, cfg.tol);
  const QMatrix a2 = a * a;
  QMatrix p(a.dim());
  for (const auto& node : nodes) p = p + s_resolvent_left_unchecked(node.s, a, a2) * node.weight;
  out.idempotency_residual = (p * p - p).frobenius();
  out.commutator_residual = (a * p - p * a).frobenius();
  out.projector = std::move(p);
  return out;
}

QMatrix check_lemma_identity(const QMatrix& b, const Quaternion& p, const ContourSpec& c,
                             const Tolerances& tol) {
  const auto nodes = quadrature_nodes(c);
  const EigenSphere ps = sphere_of(p, 0.0);
  QMatrix sum(b.dim());
  for (std::size_t m = 0; m < nodes.size(); ++m) {
    const Quaternion& s = nodes[m].s;
    const double d = sphere_distance(sphere_of(s, 0.0), ps);
    if (d <= tol.spec) {
      std::ostringstream os;
      os << "quadrature node " << m << " at " << s << " meets [p] for p = " << p;
      throw Error(ErrorKind::KernelSingularity, os.str(), d);
    }
    const Quaternion denom = p * p - (2.0 * s.w) * p + Quaternion{s.norm2()};
    sum = sum + nodes[m].weight * ((s.conj() * b - b * p) * inverse(denom));
  }
  return sum;
}

Quaternion cauchy_eval(const RightPolynomial& f, const Quaternion& q, const ContourSpec& c,
                       const Tolerances& tol) {
  if (f.degree() > 32) throw Error(ErrorKind::Domain, "polynomial degree above 32");
  c.validate();
  if (!c.encloses_sphere(sphere_of(q, 0.0), tol.spec)) {
    std::ostringstream os;
    os << "[q] for q = " << q << " is outside or touching the contour";
    throw Error(ErrorKind::Contour, os.str());
  }
  Quaternion sum;
  for (const auto& node : quadrature_nodes(c))
    sum += cauchy_kernel_left(node.s, q, tol.spec) * node.weight * f(node.s);
  return sum;
}

QMatrix funcalc_contour(const RightPolynomial& f, const QMatrix& a, const ContourSpec& c,
                        const Tolerances& tol) {
  c.validate();
  const SSpectrum spec = s_spectrum(a, tol);
  for (const auto& s : spec.spheres) {
    if (!c.encloses_sphere(s, tol.spec)) {
      std::ostringstream os;
      os << "contour does not enclose sphere (u=" << s.u << ", v=" << s.v << ")";
      throw Error(ErrorKind::Contour, os.str());
    }
  }
  const auto nodes = quadrature_nodes(c);
  guard_nodes(nodes, spec, tol);
  const QMatrix a2 = a * a;
  QMatrix sum(a.dim());
  for (const auto& node : nodes)
    sum = sum + s_resolvent_left_unchecked(node.s, a, a2) * (node.weight * f(node.s));
  return sum;
}

}  // namespace qspec
