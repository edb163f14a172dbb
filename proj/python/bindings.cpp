#include "cominus/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cominus;

namespace {

py::int_ big(const BigInt& v) { return py::int_(py::str(v.str())); }

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::optional<std::vector<int>> parts_of(const std::optional<Partition>& mu) {
  if (!mu) return std::nullopt;
  return mu->parts();
}

py::tuple witness(const MinTwistWitness& w) {
  py::list parts;
  for (const auto& mu : w.partitions) parts.append(py::cast(mu.parts()));
  return py::make_tuple(w.l, parts);
}

}  // namespace

PYBIND11_MODULE(cominus, m) {
  m.doc() = "Twisted differential forms on cominuscule Grassmannians";

  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_ArithmeticError);

  py::class_<GrassmannianSpec>(m, "Space")
      .def(py::init([](const std::string& text) { return parse_space(text); }), py::arg("name"))
      .def_property_readonly("name", &GrassmannianSpec::name)
      .def_property_readonly("description", &GrassmannianSpec::description)
      .def_property_readonly("family", [](const GrassmannianSpec& s) { return to_string(s.family()); })
      .def_property_readonly("ambient", [](const GrassmannianSpec& s) { return s.ambient().type().name(); })
      .def_property_readonly("marked_node", &GrassmannianSpec::marked_node)
      .def_property_readonly("dim", &GrassmannianSpec::dim)
      .def_property_readonly("c1", &GrassmannianSpec::index_c1)
      .def_property_readonly("cotangent", [](const GrassmannianSpec& s) { return s.cotangent_weight().vec(); })
      .def_property_readonly("levi", &GrassmannianSpec::levi_description)
      .def("__repr__", [](const GrassmannianSpec& s) { return "Space('" + s.name() + "')"; });

  py::class_<IrreducibleSummand>(m, "Summand")
      .def_property_readonly("weight", [](const IrreducibleSummand& s) { return s.highest_weight.vec(); })
      .def_property_readonly("label", [](const IrreducibleSummand& s) { return s.highest_weight.pretty(); })
      .def_property_readonly("levi_dim", [](const IrreducibleSummand& s) { return big(s.levi_dim); })
      .def_property_readonly("partition", [](const IrreducibleSummand& s) { return parts_of(s.partition); })
      .def("__repr__", [](const IrreducibleSummand& s) { return "Summand(" + s.highest_weight.pretty() + ")"; });

  py::class_<DecompositionReport>(m, "Decomposition")
      .def_property_readonly("space", [](const DecompositionReport& r) { return r.spec.name(); })
      .def_readonly("p", &DecompositionReport::p)
      .def_property_readonly("method", [](const DecompositionReport& r) { return to_string(r.method); })
      .def_readonly("summands", &DecompositionReport::summands)
      .def_property_readonly("rank", [](const DecompositionReport& r) { return big(r.rank()); })
      .def_property_readonly("expected_rank", [](const DecompositionReport& r) { return big(r.expected_rank); })
      .def("to_dict", [](const DecompositionReport& r) { return to_py(to_json(r)); });

  py::class_<MinTwistReport>(m, "MinTwist")
      .def_property_readonly("space", [](const MinTwistReport& r) { return r.spec.name(); })
      .def_readonly("p", &MinTwistReport::p)
      .def_readonly("l", &MinTwistReport::l)
      .def_readonly("degree", &MinTwistReport::degree)
      .def_property_readonly("h0_dim", [](const MinTwistReport& r) { return big(r.h0_dim); })
      .def_readonly("witnesses", &MinTwistReport::witnesses)
      .def_property_readonly("h0_weights",
                             [](const MinTwistReport& r) {
                               std::vector<std::vector<int>> out;
                               for (const auto& w : r.h0_weights) out.push_back(w.vec());
                               return out;
                             })
      .def_readonly("closed_form_l", &MinTwistReport::closed_form_l)
      .def("to_dict", [](const MinTwistReport& r) { return to_py(to_json(r)); });

  m.def(
      "decompose",
      [](const GrassmannianSpec& s, int p, bool force_dp, bool use_duality) {
        DecomposeOptions o;
        o.force_dp = force_dp;
        o.use_duality = use_duality;
        return decompose_omega(s, p, o);
      },
      py::arg("space"), py::arg("p"), py::arg("force_dp") = false, py::arg("use_duality") = true,
      "Irreducible Levi summands of Omega^p.");
  m.def(
      "min_twist",
      [](const GrassmannianSpec& s, int p, bool force_plethysm) {
        TwistOptions o;
        o.force_plethysm = force_plethysm;
        return min_twist(s, p, o);
      },
      py::arg("space"), py::arg("p"), py::arg("force_plethysm") = false,
      "Smallest l with H^0(Omega^p(l)) != 0, with its witnesses.");
  m.def("closed_form_min_twist", &closed_form_min_twist, py::arg("space"), py::arg("p"));
  m.def("h0_dim", [](const DecompositionReport& r, int l) { return big(h0_dim(r, l)); }, py::arg("decomposition"),
        py::arg("l"));

  m.def("min_twist_grass", &min_twist_grass, py::arg("k"), py::arg("n"), py::arg("p"));
  m.def("min_twist_lagr", &min_twist_lagr, py::arg("p"));
  m.def("min_twist_spinor", &min_twist_spinor, py::arg("p"));
  m.def("min_twist_grass_oracle", [](int k, int n, int p) { return witness(min_twist_grass_oracle(k, n, p)); },
        py::arg("k"), py::arg("n"), py::arg("p"), "(l, minimizing partitions)");
  m.def("min_twist_lagr_oracle", [](int n, int p) { return witness(min_twist_lagr_oracle(n, p)); }, py::arg("n"),
        py::arg("p"));
  m.def("min_twist_spinor_oracle", [](int n, int p) { return witness(min_twist_spinor_oracle(n, p)); }, py::arg("n"),
        py::arg("p"));

  m.def(
      "table_audit",
      [](const std::string& which, std::optional<int> max_p) {
        if (which != "E6" && which != "E7") throw py::value_error("which must be 'E6' or 'E7'");
        return to_py(to_json(table_audit(which == "E6" ? ExceptionalTable::E6 : ExceptionalTable::E7, max_p)));
      },
      py::arg("which"), py::arg("max_p") = py::none());
  m.def(
      "nonvanishing_scan",
      [](int max_rank) {
        Json j = Json::array();
        for (const auto& r : nonvanishing_scan(max_rank)) j.push_back(to_json(r));
        return to_py(j);
      },
      py::arg("max_rank") = 6);
  m.def(
      "rect_family",
      [](int k, int n, int p) {
        Json j = Json::array();
        for (const auto& r : rect_family(k, n, p)) j.push_back(to_json(r));
        return to_py(j);
      },
      py::arg("k"), py::arg("n"), py::arg("p"));
  m.def("symplectic_family", [](int n, int a) { return to_py(to_json(symplectic_family(n, a))); }, py::arg("n"),
        py::arg("a"));
  m.def("orthogonal_family", [](int n, int a) { return to_py(to_json(orthogonal_family(n, a))); }, py::arg("n"),
        py::arg("a"));
  m.def("cayley_family", [] { return to_py(to_json(cayley_family())); });
  m.def(
      "catalog",
      [](int max_rank) {
        py::list out;
        for (const auto& s : catalog_up_to_rank(max_rank)) out.append(py::cast(s));
        return out;
      },
      py::arg("max_rank"));
}
