// Python bindings: a thin string-coordinate facade over the C++ core. All
// field elements cross the boundary as their canonical strings, so the exact
// arithmetic never touches Python floats.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "albert/config.hpp"
#include "albert/errors.hpp"
#include "albert/exprs.hpp"
#include "albert/harness.hpp"
#include "albert/operators.hpp"

namespace py = pybind11;
using namespace albert;

namespace {

using Strings = std::vector<std::string>;
using StringGrid = std::vector<Strings>;

class PyAlgebra {
 public:
  explicit PyAlgebra(const std::string& config_text)
      : cfg_(parse_config_text(config_text)), alg_(build_algebra(cfg_)) {}

  static PyAlgebra from_fixture(const std::string& name) {
    return PyAlgebra(fixture_config(name).dump());
  }

  std::string kind() const { return alg_.kind; }
  size_t dim() const { return alg_.jordan->dim(); }
  std::string field_kind() const { return alg_.field->descriptor()["kind"].get<std::string>(); }
  std::string config() const { return cfg_.canonical.dump(); }

  Strings unit() const { return to_strings(alg_.jordan->unit()); }

  Strings product(const Strings& x, const Strings& y) const {
    return to_strings(alg_.jordan->product(parse_vec(x), parse_vec(y)));
  }

  std::string norm(const Strings& x) const {
    return alg_.field->to_string(alg_.norm(parse_vec(x)));
  }

  py::dict trace_coeffs(const Strings& x) const {
    auto c = alg_.jordan->generic_coeffs(parse_vec(x));
    py::dict d;
    d["T"] = alg_.field->to_string(c.T);
    d["S"] = alg_.field->to_string(c.S);
    d["N"] = alg_.field->to_string(c.N);
    return d;
  }

  Strings inverse(const Strings& x) const { return to_strings(alg_.jordan->inverse(parse_vec(x))); }
  Strings adjoint(const Strings& x) const { return to_strings(alg_.jordan->adjoint(parse_vec(x))); }

  Strings u_apply(const Strings& p, const Strings& x) const {
    return to_strings(alg_.jordan->u_apply(parse_vec(p), parse_vec(x)));
  }

  Strings isotope_product(const Strings& p, const Strings& x, const Strings& y) const {
    return to_strings(alg_.jordan->isotope_product(parse_vec(p), parse_vec(x), parse_vec(y)));
  }

  py::dict similarity_check(const StringGrid& g) const {
    SimilarityVerdict v = ops().similarity_check(parse_matrix(g));
    py::dict d;
    d["is_similarity"] = v.is_similarity;
    d["multiplier"] = v.multiplier ? py::object(py::str(alg_.field->to_string(*v.multiplier)))
                                   : py::object(py::none());
    d["reason"] = v.reason;
    return d;
  }

  bool automorphism_check(const StringGrid& g) const {
    return ops().automorphism_check(parse_matrix(g));
  }

  std::optional<Strings> isotopy_decompose(const StringGrid& g) const {
    auto p = ops().isotopy_decompose(parse_matrix(g));
    if (!p) return std::nullopt;
    return to_strings(*p);
  }

  std::string eval(const std::string& expr) const { return eval_expression(alg_, expr); }

  py::object check() const {
    RunResult r = run_suites(cfg_, alg_);
    std::string fp = config_fingerprint(cfg_.canonical);
    py::list lines;
    for (const SuiteOutcome& o : r.outcomes)
      lines.append(py::module_::import("json").attr("loads")(outcome_json(o, fp).dump()));
    py::dict d;
    d["outcomes"] = lines;
    d["any_failure"] = r.any_failure;
    return d;
  }

  py::object probe_division(size_t trials, size_t subalgebra_samples, uint64_t seed) const {
    jsonu::Json j = probe_report(alg_, trials, subalgebra_samples, seed);
    return py::module_::import("json").attr("loads")(j.dump());
  }

 private:
  Vec parse_vec(const Strings& s) const {
    if (s.size() != alg_.jordan->dim())
      fail(ErrorCode::ShapeError, "expected " + std::to_string(alg_.jordan->dim()) +
                                      " coordinates, got " + std::to_string(s.size()));
    Vec v;
    v.reserve(s.size());
    for (const std::string& c : s) v.push_back(alg_.field->parse(c));
    return v;
  }

  Strings to_strings(const Vec& v) const {
    Strings out;
    out.reserve(v.size());
    for (const Fe& c : v) out.push_back(alg_.field->to_string(c));
    return out;
  }

  Matrix parse_matrix(const StringGrid& g) const {
    size_t d = alg_.jordan->dim();
    if (g.size() != d) fail(ErrorCode::ShapeError, "operator has the wrong shape for this algebra");
    Matrix m(alg_.field, d, d);
    for (size_t r = 0; r < d; ++r) {
      if (g[r].size() != d)
        fail(ErrorCode::ShapeError, "operator has the wrong shape for this algebra");
      for (size_t c = 0; c < d; ++c) m.at(r, c) = alg_.field->parse(g[r][c]);
    }
    return m;
  }

  StructureOps& ops() const {
    if (!ops_) ops_ = std::make_unique<StructureOps>(*alg_.jordan, alg_.norm);
    return *ops_;
  }

  RunConfig cfg_;
  BuiltAlgebra alg_;
  mutable std::unique_ptr<StructureOps> ops_;
};

}  // namespace

PYBIND11_MODULE(albertalg, m) {
  m.doc() = "exact exceptional Jordan algebra workbench";

  py::register_exception<Error>(m, "AlbertError");

  py::class_<PyAlgebra>(m, "Algebra")
      .def(py::init<const std::string&>(), py::arg("config"),
           "Build from a JSON config string (same schema as albertctl).")
      .def_static("fixture", &PyAlgebra::from_fixture, py::arg("name"),
                  "Named built-in configuration, e.g. 'split-f7' or 'division-qs'.")
      .def_property_readonly("kind", &PyAlgebra::kind)
      .def_property_readonly("dim", &PyAlgebra::dim)
      .def_property_readonly("field_kind", &PyAlgebra::field_kind)
      .def_property_readonly("config", &PyAlgebra::config)
      .def("unit", &PyAlgebra::unit)
      .def("product", &PyAlgebra::product, py::arg("x"), py::arg("y"))
      .def("norm", &PyAlgebra::norm, py::arg("x"))
      .def("trace_coeffs", &PyAlgebra::trace_coeffs, py::arg("x"))
      .def("inverse", &PyAlgebra::inverse, py::arg("x"))
      .def("adjoint", &PyAlgebra::adjoint, py::arg("x"))
      .def("u_apply", &PyAlgebra::u_apply, py::arg("p"), py::arg("x"))
      .def("isotope_product", &PyAlgebra::isotope_product, py::arg("p"), py::arg("x"), py::arg("y"))
      .def("similarity_check", &PyAlgebra::similarity_check, py::arg("matrix"))
      .def("automorphism_check", &PyAlgebra::automorphism_check, py::arg("matrix"))
      .def("isotopy_decompose", &PyAlgebra::isotopy_decompose, py::arg("matrix"))
      .def("eval", &PyAlgebra::eval, py::arg("expression"))
      .def("check", &PyAlgebra::check, "Run the configured suites; returns outcomes and a flag.")
      .def("probe_division", &PyAlgebra::probe_division, py::arg("trials") = 1000,
           py::arg("subalgebra_samples") = 25, py::arg("seed") = 42);

  m.def("fixture_names", [] {
    return Strings{"split-f7", "split-q", "h3-zorn", "cyclic7-q", "division-qs"};
  });
}
