// qspec: command-line front end. Reads matrices and vectors in the JSON
// formats of json_io.hpp and writes JSON to stdout.
//
// Exit codes: 0 success / all records pass, 1 numerical failure or a failing
// record, 2 configuration or I/O error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qspec/contour.hpp"
#include "qspec/error.hpp"
#include "qspec/json_io.hpp"
#include "qspec/slicefun.hpp"
#include "qspec/spectral.hpp"
#include "qspec/sspectrum.hpp"
#include "qspec/verify.hpp"

using namespace qspec;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  int nodes = 256;
  Tolerances tol{};
  std::string plane;
  bool json = false;
  bool pretty = false;
};

void emit(const Json& j, const Globals& g) { std::cout << (g.pretty ? j.dump(2) : j.dump()) << "\n"; }

UnitImaginary plane_of(const Globals& g) { return g.plane.empty() ? kUnitI : parse_unit(g.plane); }

Frame frame_of(const Globals& g) {
  const UnitImaginary p = plane_of(g);
  if (p == kUnitI) return Frame{};
  return Frame(p, orthogonal_unit(p, g.seed));
}

QMatrix load_matrix(const std::string& path) { return matrix_from_json(read_json_file(path)); }
QVector load_vector(const std::string& path) { return vector_from_json(read_json_file(path)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternionic S-spectrum, Riesz projectors and spectral calculus"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--nodes", g.nodes, "quadrature nodes per loop")->check(CLI::Range(16, 1 << 16));
  app.add_option("--tol-real", g.tol.real, "real-part snapping tolerance");
  app.add_option("--tol-sym", g.tol.sym, "chi symmetry tolerance");
  app.add_option("--tol-sing", g.tol.sing, "singularity (reciprocal condition) tolerance");
  app.add_option("--tol-cluster", g.tol.cluster, "eigenvalue clustering tolerance");
  app.add_option("--tol-spec", g.tol.spec, "spectrum distance tolerance");
  app.add_option("--tol-quad", g.tol.quad, "quadrature residual tolerance");
  app.add_option("--tol-psd", g.tol.psd, "positive semidefiniteness tolerance");
  app.add_option("--tol-slice", g.tol.slice, "slice condition tolerance");
  app.add_option("--plane", g.plane, "imaginary unit x,y,z of the working slice");
  app.add_flag("--json", g.json, "JSON output for verify");
  app.add_flag("--pretty", g.pretty, "indented JSON");

  std::string matrix_path, x_path, y_path, side = "left", s_text, p_text, select_text, fn_name,
                           trig_path;
  int order = 12;
  std::size_t dim_cap = 4;
  int instances = 3;

  auto* sspec = app.add_subcommand("sspec", "S-spectrum spheres of a matrix");
  sspec->add_option("matrix", matrix_path)->required();

  auto* resolvent = app.add_subcommand("resolvent", "left or right S-resolvent at s");
  resolvent->add_option("matrix", matrix_path)->required();
  resolvent->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  resolvent->add_option("--s", s_text)->required();

  auto* rcheck = app.add_subcommand("resolvent-check", "residuals of the S-resolvent equation");
  rcheck->add_option("matrix", matrix_path)->required();
  rcheck->add_option("--s", s_text)->required();
  rcheck->add_option("--p", p_text)->required();

  auto* riesz = app.add_subcommand("riesz", "Riesz projector of selected spheres");
  riesz->add_option("matrix", matrix_path)->required();
  riesz->add_option("--select", select_text)->required();

  auto* decomp = app.add_subcommand("decompose", "eigen-angles of a unitary matrix");
  decomp->add_option("matrix", matrix_path)->required();

  auto* measure = app.add_subcommand("measure", "atomic measure nu_{x,y} of a unitary matrix");
  measure->add_option("matrix", matrix_path)->required();
  measure->add_option("--x", x_path)->required();
  measure->add_option("--y", y_path);

  auto* herglotz = app.add_subcommand("herglotz", "Herglotz sequence and Toeplitz PSD check");
  herglotz->add_option("matrix", matrix_path)->required();
  herglotz->add_option("--x", x_path)->required();
  herglotz->add_option("--N", order)->check(CLI::Range(0, 512));

  auto* funcalc = app.add_subcommand("funcalc", "f(U) for a built-in function or a trig polynomial");
  funcalc->add_option("matrix", matrix_path)->required();
  auto* fn_opt = funcalc->add_option("--fn", fn_name)->check(CLI::IsMember(builtin_names()));
  auto* trig_opt = funcalc->add_option("--trig", trig_path);
  fn_opt->excludes(trig_opt);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--dim-cap", dim_cap, "largest random dimension");
  verify->add_option("--instances", instances, "instances per theorem id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sspec) {
      Json spheres = Json::array();
      for (const auto& s : s_spectrum(load_matrix(matrix_path), g.tol).spheres)
        spheres.push_back({{"u", s.u}, {"v", s.v}, {"mult", s.multiplicity}});
      emit({{"spheres", spheres}}, g);
    } else if (*resolvent) {
      const QMatrix a = load_matrix(matrix_path);
      const Quaternion s = parse_quaternion(s_text);
      emit(to_json(side == "left" ? s_resolvent_left(s, a, g.tol) : s_resolvent_right(s, a, g.tol)), g);
    } else if (*rcheck) {
      const auto r = check_resolvent_equation(parse_quaternion(s_text), parse_quaternion(p_text),
                                              load_matrix(matrix_path), g.tol);
      emit({{"first_form", r.first_form}, {"second_form", r.second_form}, {"lhs_norm", r.lhs_norm}}, g);
    } else if (*riesz) {
      QuadratureConfig q;
      q.nodes_per_loop = g.nodes;
      q.plane = plane_of(g);
      q.tol = g.tol;
      const RieszProjector r = riesz_projector(load_matrix(matrix_path), parse_indices(select_text), q);
      Json out = to_json(r.projector);
      out["idem"] = r.idempotency_residual;
      out["comm"] = r.commutator_residual;
      emit(out, g);
    } else if (*decomp) {
      const SpectralDecomposition d = decompose(load_matrix(matrix_path), frame_of(g), g.tol);
      emit({{"angles", d.angles()}, {"multiplicities", d.multiplicities()}}, g);
    } else if (*measure) {
      const Frame frame = frame_of(g);
      const SpectralDecomposition d = decompose(load_matrix(matrix_path), frame, g.tol);
      const QVector x = load_vector(x_path);
      const QVector y = y_path.empty() ? x : load_vector(y_path);
      const AtomicQMeasure nu = pair_measure(d, x, y);
      Json atoms = Json::array();
      for (const auto& a : nu.atoms) atoms.push_back({{"t", a.t}, {"w", to_json(a.weight)}});
      emit({{"atoms", atoms}, {"q_positive", q_positivity(nu, frame, g.tol).verdict}}, g);
    } else if (*herglotz) {
      const HerglotzSequence r = herglotz_sequence(load_matrix(matrix_path), load_vector(x_path), order);
      const PsdCheck psd = positive_definite_check(r, order, g.tol.psd);
      Json seq = Json::array();
      for (int n = -order; n <= order; ++n) seq.push_back({{"n", n}, {"r", to_json(r.at(n))}});
      emit({{"sequence", seq}, {"min_eigenvalue", psd.min_eigenvalue}, {"psd", psd.psd}}, g);
    } else if (*funcalc) {
      const QMatrix u = load_matrix(matrix_path);
      if (!trig_path.empty()) {
        emit(to_json(funcalc_trigpoly(trigpoly_from_json(read_json_file(trig_path)), u)), g);
      } else {
        if (fn_name.empty()) throw Error(ErrorKind::Config, "funcalc needs --fn or --trig");
        emit(to_json(funcalc_spectral(builtin_function(fn_name), decompose(u, frame_of(g), g.tol), g.tol)), g);
      }
    } else if (*verify) {
      RunConfig cfg;
      cfg.seed = g.seed;
      cfg.nodes_per_loop = g.nodes;
      cfg.tol = g.tol;
      cfg.plane = plane_of(g);
      cfg.dim_cap = dim_cap;
      cfg.instances = instances;
      cfg.validate();
      const auto records = verify_all(cfg);
      const auto groups = report(records);
      if (g.json || g.pretty) {
        Json summary = Json::array(), recs = Json::array();
        for (const auto& grp : groups) summary.push_back(to_json(grp));
        for (const auto& r : records) recs.push_back(to_json(r));
        emit({{"summary", summary}, {"records", recs}}, g);
      } else {
        std::cout << report_text(groups);
      }
      return exit_code(records);
    }
  } catch (const Error& e) {
    std::cerr << "qspec: " << e.what() << "\n";
    return e.kind() == ErrorKind::Config ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "qspec: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
