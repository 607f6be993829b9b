// Python bindings. Matrices are float arrays of shape (n, n, 4), vectors
// (n, 4), quaternions (4,), components ordered w, x, y, z.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qspec/contour.hpp"
#include "qspec/error.hpp"
#include "qspec/slicefun.hpp"
#include "qspec/spectral.hpp"
#include "qspec/sspectrum.hpp"
#include "qspec/verify.hpp"

namespace py = pybind11;
using namespace qspec;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Quaternion to_quaternion(const Array& a) {
  if (a.ndim() != 1 || a.shape(0) != 4) throw Error(ErrorKind::Dimension, "quaternion must have shape (4,)");
  const auto v = a.unchecked<1>();
  return {v(0), v(1), v(2), v(3)};
}

UnitImaginary to_unit(const Array& a) {
  if (a.ndim() != 1 || a.shape(0) != 3) throw Error(ErrorKind::Dimension, "unit must have shape (3,)");
  const auto v = a.unchecked<1>();
  return UnitImaginary::normalized(v(0), v(1), v(2));
}

QMatrix to_matrix(const Array& a) {
  if (a.ndim() != 3 || a.shape(0) != a.shape(1) || a.shape(2) != 4)
    throw Error(ErrorKind::Dimension, "matrix must have shape (n, n, 4)");
  const auto v = a.unchecked<3>();
  const auto n = static_cast<std::size_t>(a.shape(0));
  check_dimension(n);
  QMatrix m(n);
  for (py::ssize_t r = 0; r < a.shape(0); ++r)
    for (py::ssize_t c = 0; c < a.shape(1); ++c)
      m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = {v(r, c, 0), v(r, c, 1), v(r, c, 2), v(r, c, 3)};
  return m;
}

QVector to_vector(const Array& a) {
  if (a.ndim() != 2 || a.shape(1) != 4) throw Error(ErrorKind::Dimension, "vector must have shape (n, 4)");
  const auto v = a.unchecked<2>();
  QVector x(static_cast<std::size_t>(a.shape(0)));
  for (py::ssize_t k = 0; k < a.shape(0); ++k) x[static_cast<std::size_t>(k)] = {v(k, 0), v(k, 1), v(k, 2), v(k, 3)};
  return x;
}

Array from_quaternion(const Quaternion& q) {
  Array out(4);
  auto v = out.mutable_unchecked<1>();
  v(0) = q.w, v(1) = q.x, v(2) = q.y, v(3) = q.z;
  return out;
}

Array from_matrix(const QMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  Array out({n, n, py::ssize_t{4}});
  auto v = out.mutable_unchecked<3>();
  for (py::ssize_t r = 0; r < n; ++r)
    for (py::ssize_t c = 0; c < n; ++c) {
      const Quaternion& q = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      v(r, c, 0) = q.w, v(r, c, 1) = q.x, v(r, c, 2) = q.y, v(r, c, 3) = q.z;
    }
  return out;
}

Frame frame_for(const std::optional<Array>& plane) {
  if (!plane) return Frame{};
  const UnitImaginary p = to_unit(*plane);
  return p == kUnitI ? Frame{} : Frame(p, orthogonal_unit(p, 1));
}

py::list spheres(const Array& a) {
  py::list out;
  for (const auto& s : s_spectrum(to_matrix(a)).spheres)
    out.append(py::dict(py::arg("u") = s.u, py::arg("v") = s.v, py::arg("mult") = s.multiplicity));
  return out;
}

Array resolvent(const Array& a, const Array& s, const std::string& side) {
  if (side == "left") return from_matrix(s_resolvent_left(to_quaternion(s), to_matrix(a)));
  if (side == "right") return from_matrix(s_resolvent_right(to_quaternion(s), to_matrix(a)));
  throw Error(ErrorKind::Config, "side must be 'left' or 'right'");
}

py::dict resolvent_check(const Array& a, const Array& s, const Array& p) {
  const auto r = check_resolvent_equation(to_quaternion(s), to_quaternion(p), to_matrix(a));
  return py::dict(py::arg("first_form") = r.first_form, py::arg("second_form") = r.second_form,
                  py::arg("lhs_norm") = r.lhs_norm);
}

py::dict riesz(const Array& a, const std::vector<std::size_t>& select, int nodes, const std::optional<Array>& plane) {
  QuadratureConfig cfg;
  cfg.nodes_per_loop = nodes;
  if (plane) cfg.plane = to_unit(*plane);
  const RieszProjector r = riesz_projector(to_matrix(a), select, cfg);
  return py::dict(py::arg("projector") = from_matrix(r.projector), py::arg("idem") = r.idempotency_residual,
                  py::arg("comm") = r.commutator_residual);
}

py::dict decomposition(const Array& u, const std::optional<Array>& plane) {
  const SpectralDecomposition d = decompose(to_matrix(u), frame_for(plane));
  return py::dict(py::arg("angles") = d.angles(), py::arg("multiplicities") = d.multiplicities());
}

py::dict measure(const Array& u, const Array& x, const std::optional<Array>& y, const std::optional<Array>& plane) {
  const Frame frame = frame_for(plane);
  const SpectralDecomposition d = decompose(to_matrix(u), frame);
  const QVector xv = to_vector(x);
  const AtomicQMeasure nu = pair_measure(d, xv, y ? to_vector(*y) : xv);
  py::list atoms;
  for (const auto& a : nu.atoms) atoms.append(py::make_tuple(a.t, from_quaternion(a.weight)));
  return py::dict(py::arg("atoms") = atoms, py::arg("q_positive") = q_positivity(nu, frame).verdict);
}

py::dict herglotz(const Array& u, const Array& x, int order) {
  const HerglotzSequence r = herglotz_sequence(to_matrix(u), to_vector(x), order);
  const PsdCheck psd = positive_definite_check(r, order);
  Array seq({static_cast<py::ssize_t>(2 * order + 1), py::ssize_t{4}});
  auto v = seq.mutable_unchecked<2>();
  for (int n = -order; n <= order; ++n) {
    const Quaternion& q = r.at(n);
    const py::ssize_t k = n + order;
    v(k, 0) = q.w, v(k, 1) = q.x, v(k, 2) = q.y, v(k, 3) = q.z;
  }
  return py::dict(py::arg("sequence") = seq, py::arg("min_eigenvalue") = psd.min_eigenvalue,
                  py::arg("psd") = psd.psd);
}

Array funcalc(const Array& u, const std::string& fn, const std::optional<Array>& plane) {
  return from_matrix(funcalc_spectral(builtin_function(fn), decompose(to_matrix(u), frame_for(plane))));
}

Array funcalc_trig(const Array& u, const std::vector<std::pair<int, Array>>& terms) {
  std::vector<std::pair<int, Quaternion>> t;
  for (const auto& [m, a] : terms) t.emplace_back(m, to_quaternion(a));
  return from_matrix(funcalc_trigpoly(TrigPoly::from_terms(t), to_matrix(u)));
}

py::dict verify(std::uint64_t seed, int nodes, std::size_t dim_cap, int instances) {
  RunConfig cfg;
  cfg.seed = seed;
  cfg.nodes_per_loop = nodes;
  cfg.dim_cap = dim_cap;
  cfg.instances = instances;
  const auto records = verify_all(cfg);
  py::list summary;
  for (const auto& g : report(records))
    summary.append(py::dict(py::arg("theorem") = g.theorem, py::arg("instances") = g.instances,
                            py::arg("max_residual") = g.max_residual, py::arg("tolerance") = g.tolerance,
                            py::arg("pass") = g.pass));
  return py::dict(py::arg("summary") = summary, py::arg("exit_code") = exit_code(records));
}

}  // namespace

PYBIND11_MODULE(qspec, m) {
  m.doc() = "Quaternionic S-spectrum, Riesz projectors and spectral calculus";

  // message starts with the error kind, e.g. "resolvent singularity: ..."
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  m.def("s_spectrum", &spheres, py::arg("a"), "Eigen-spheres as dicts {u, v, mult}.");
  m.def("resolvent", &resolvent, py::arg("a"), py::arg("s"), py::arg("side") = "left");
  m.def("resolvent_check", &resolvent_check, py::arg("a"), py::arg("s"), py::arg("p"));
  m.def("riesz", &riesz, py::arg("a"), py::arg("select"), py::arg("nodes") = 256, py::arg("plane") = py::none());
  m.def("decompose", &decomposition, py::arg("u"), py::arg("plane") = py::none());
  m.def("measure", &measure, py::arg("u"), py::arg("x"), py::arg("y") = py::none(), py::arg("plane") = py::none());
  m.def("herglotz", &herglotz, py::arg("u"), py::arg("x"), py::arg("order") = 12);
  m.def("funcalc", &funcalc, py::arg("u"), py::arg("fn"), py::arg("plane") = py::none());
  m.def("funcalc_trig", &funcalc_trig, py::arg("u"), py::arg("terms"));
  m.def("verify", &verify, py::arg("seed") = 1, py::arg("nodes") = 256, py::arg("dim_cap") = 4,
        py::arg("instances") = 3);
  m.def("builtin_functions", &builtin_names);
}
