#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "burniat/cases.hpp"
#include "burniat/degenerations.hpp"
#include "burniat/fan_io.hpp"
#include "burniat/report.hpp"

namespace py = pybind11;
using namespace burniat;

namespace {

CaseId to_case(const std::string& name) {
  auto id = parse_case_id(name);
  if (!id) throw py::value_error("unknown case '" + name + "'; expected 3, 4a, 4b or 5");
  return *id;
}

std::vector<std::vector<Int>> rows_of(const std::vector<LatticeVector>& vs) {
  std::vector<std::vector<Int>> out;
  for (const auto& v : vs) out.push_back(v.coords());
  return out;
}

IntMatrix matrix_from(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) throw py::value_error("empty matrix");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw py::value_error("ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<Int>> matrix_rows(const IntMatrix& m) {
  std::vector<std::vector<Int>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i).coords());
  return out;
}

py::dict group_dict(const PermGroup& g) {
  py::dict d;
  d["order"] = g.order();
  d["structure"] = identify_small_group(g);
  std::vector<std::string> elems;
  for (const auto& e : g.elements()) elems.push_back(e.perm().cycle_string());
  d["elements"] = elems;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Toric case data and degeneration tables for Burniat surfaces";
  m.attr("__version__") = library_version();

  py::register_exception<LatticeError>(m, "LatticeError", PyExc_ValueError);
  py::register_exception<GroupError>(m, "GroupError", PyExc_ValueError);
  py::register_exception<FanError>(m, "FanError", PyExc_ValueError);
  py::register_exception<FanIoError>(m, "FanIoError", PyExc_IOError);
  py::register_exception<UnknownFamily>(m, "UnknownFamily", PyExc_KeyError);

  m.def("case_names", [] {
    std::vector<std::string> out;
    for (CaseId id : kAllCases) out.push_back(case_name(id));
    return out;
  });

  // Lattices.
  m.def("smith_invariant_factors", [](const std::vector<std::vector<Int>>& rows) {
    return smith_normal_form(matrix_from(rows)).invariant_factors;
  });
  m.def("hermite_normal_form", [](const std::vector<std::vector<Int>>& rows) {
    return matrix_rows(hermite_normal_form(matrix_from(rows)));
  });
  m.def("character_pushforward", [](const std::array<Int, 6>& exponents) {
    Covector c = character_pushforward(exponents);
    return py::make_tuple(c.numerators(), c.denominator());
  }, py::arg("exponents"));
  m.def("case_lattice", [](const std::string& name) { return rows_of(case_spec(to_case(name)).sublattice.basis()); },
        py::arg("case"));

  // Groups.
  m.def("gamma6", [] { return group_dict(gamma6()); });
  m.def("relabeling_group", [](const std::string& name) {
    CaseGroup g = relabeling_group(to_case(name));
    py::dict d = group_dict(g.group);
    d["kernel_order"] = g.kernel.order();
    d["faithful_quotient_order"] = g.faithful_quotient_order;
    return d;
  }, py::arg("case"));

  // Fans.
  py::class_<Fan>(m, "Fan")
      .def_property_readonly("rays", [](const Fan& f) { return rows_of(f.rays()); })
      .def_property_readonly("ray_types", [](const Fan& f) {
        std::string s;
        for (RayType t : f.ray_types()) s += ray_type_char(t);
        return s;
      })
      .def_property_readonly("max_cones", [](const Fan& f) {
        std::vector<std::vector<std::size_t>> out;
        for (const auto& c : f.max_cones()) out.push_back(c.rays);
        return out;
      })
      .def_property_readonly("lattice_basis", [](const Fan& f) { return rows_of(f.lattice().basis()); })
      .def_property_readonly("dim", &Fan::dim)
      .def("is_smooth", &is_smooth_fan)
      .def("is_complete", &is_complete)
      .def("is_valid", [](const Fan& f) { return validate_fan(f).valid; })
      .def("census", &cone_type_census)
      .def("to_json", &fan_to_json)
      .def("__eq__", [](const Fan& a, const Fan& b) { return a == b; })
      .def("__repr__", [](const Fan& f) {
        return "<Fan rank " + std::to_string(f.dim()) + ", " + std::to_string(f.rays().size()) + " rays, " +
               std::to_string(f.max_cones().size()) + " cones>";
      });
  m.def("build_case_fan", [](const std::string& name) { return build_case_fan(to_case(name)); }, py::arg("case"));
  m.def("fan_from_json", &fan_from_json, py::arg("text"));
  m.def("classify_ray", [](const std::vector<Int>& v) {
    return std::string(1, ray_type_char(classify_ray(LatticeVector(v))));
  }, py::arg("vector"));

  // Case data.
  m.def("f_curves_in_case", [](const std::string& name) {
    FCurveSplit s = f_curves_in_case(to_case(name));
    py::dict d;
    d["inside"] = rows_of(s.inside);
    d["transversal"] = rows_of(s.transversal);
    return d;
  }, py::arg("case"));
  m.def("boundary_divisors", [](const std::string& name) {
    BoundaryReport b = boundary_divisors(to_case(name));
    py::dict d;
    d["computed"] = b.computed;
    d["recorded"] = b.recorded;
    d["divisors"] = b.divisors;
    d["points"] = b.points;
    d["excluded"] = b.excluded;
    d["total"] = b.total;
    return d;
  }, py::arg("case"));

  // Degenerations.
  m.def("base_volume", &base_volume, py::arg("family"));
  m.def("child", [](int family, int blowups) {
    ComponentType c = child(base_component(family), blowups);
    return py::make_tuple(c.label(), c.volume, marker_name(c.marker));
  }, py::arg("family"), py::arg("blowups"));
  m.def("derive_generic_component", [](const std::string& name) { return derive_generic_component(to_case(name)).label(); },
        py::arg("case"));
  m.def("validate_tables", [](std::optional<std::string> text) {
    TablesReport r = text ? validate_tables(*text) : validate_tables();
    py::list rows;
    for (const auto& row : r.rows) {
      py::dict d;
      d["table"] = row.table;
      d["row"] = row.row;
      d["degree"] = row.degree;
      d["components"] = row.components;
      d["volume_sum"] = row.volume_sum;
      d["pass"] = row.pass;
      d["notes"] = row.notes;
      d["errors"] = row.errors;
      rows.append(d);
    }
    py::dict out;
    out["rows"] = rows;
    out["errors"] = r.errors;
    out["ok"] = r.ok();
    return out;
  }, py::arg("text") = py::none());

  // Verification.
  m.def("verify", [](std::optional<std::string> name, const std::string& format, std::optional<std::string> tables) {
    VerifyOptions o;
    if (name) o.case_filter = to_case(*name);
    o.tables_json = std::move(tables);
    if (format != "json" && format != "md") throw py::value_error("format must be 'json' or 'md'");
    VerifyReport r;
    {
      py::gil_scoped_release release;
      r = run_verify(o);
    }
    return py::make_tuple(exit_code(r), format == "md" ? render_markdown(r) : render_json(r));
  }, py::arg("case") = py::none(), py::arg("format") = "json", py::arg("tables") = py::none());
}
