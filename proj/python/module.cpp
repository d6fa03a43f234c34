#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "primenf/class_data.hpp"
#include "primenf/errors.hpp"
#include "primenf/intersection.hpp"
#include "primenf/normal_form.hpp"
#include "primenf/presentation.hpp"
#include "primenf/serialize.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object big_int(const std::string& digits) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::list matrix_to_py(const primenf::IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(big_int(m(i, j).get_str()));
    rows.append(row);
  }
  return rows;
}

primenf::IntMatrix matrix_from_py(const py::sequence& rows) {
  std::vector<std::vector<primenf::Integer>> out;
  for (const auto& row : rows) {
    std::vector<primenf::Integer> r;
    for (const auto& cell : row.cast<py::sequence>()) {
      r.emplace_back(py::str(cell.cast<py::int_>()).cast<std::string>(), 10);
    }
    out.push_back(std::move(r));
  }
  return primenf::IntMatrix::from_rows(out);
}

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(json_to_py(v));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
      return out;
    }
    default:
      return py::none();
  }
}

py::dict normal_form_py(int p, const std::vector<int>& n, int g0, bool trace_steps) {
  const auto r = primenf::normal_form(p, n, g0);
  py::dict out = json_to_py(primenf::result_to_json(r, trace_steps));
  out["matrix"] = matrix_to_py(r.matrix);
  out["J"] = matrix_to_py(r.J);
  out["V"] = matrix_to_py(r.V);
  out["normalized_n"] = r.normalized.n;
  return out;
}

py::dict presentation_py(int p, const std::vector<int>& n, int g0) {
  const auto cls = primenf::validate_class(p, n, g0);
  const auto pres = cls.t() == 0
                        ? primenf::t0_presentation(cls).presentation
                        : primenf::build_presentation(primenf::normalize_class(cls).cls);
  py::dict out = json_to_py(primenf::presentation_to_json(pres));
  out["action_matrix"] = matrix_to_py(primenf::adapted_action_matrix(pres));
  return out;
}

py::dict candidate_py(const py::sequence& matrix, const py::object& form) {
  const auto m = matrix_from_py(matrix);
  const auto j = form.is_none() ? primenf::standard_J(0, static_cast<int>(m.rows() / 2))
                                : matrix_from_py(form.cast<py::sequence>());
  return json_to_py(primenf::verdict_to_json(primenf::candidate_check(m, j)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Symplectic normal forms of prime-order mapping classes";

  py::register_exception<primenf::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<primenf::InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  py::register_exception<primenf::NotUnimodularError>(m, "NotUnimodularError",
                                                      PyExc_ArithmeticError);

  m.def("mod_inverse", &primenf::mod_inverse, py::arg("a"), py::arg("p"));
  m.def("genus_of", &primenf::genus_of, py::arg("p"), py::arg("t"), py::arg("g0"));
  m.def(
      "validate_class",
      [](int p, const std::vector<int>& n, int g0) {
        return json_to_py(primenf::class_to_json(primenf::validate_class(p, n, g0)));
      },
      py::arg("p"), py::arg("n"), py::arg("g0"));
  m.def(
      "normalize_class",
      [](int p, const std::vector<int>& n, int g0) {
        const auto r = primenf::normalize_class(primenf::validate_class(p, n, g0));
        return py::make_tuple(r.cls.n, r.power);
      },
      py::arg("p"), py::arg("n"), py::arg("g0"),
      "Returns (normalized tuple, power).");
  m.def(
      "enumerate_classes",
      [](int g, int p) {
        py::list out;
        for (const auto& c : primenf::enumerate_classes(g, p))
          out.append(json_to_py(primenf::class_to_json(c)));
        return out;
      },
      py::arg("g"), py::arg("p"));
  m.def("normal_form", &normal_form_py, py::arg("p"), py::arg("n"), py::arg("g0"),
        py::arg("trace_steps") = false);
  m.def("presentation", &presentation_py, py::arg("p"), py::arg("n"), py::arg("g0"));
  m.def(
      "adapted_intersection",
      [](int p, const std::vector<int>& n, int g0) {
        const auto cls = primenf::validate_class(p, n, g0);
        return matrix_to_py(primenf::adapted_intersection(primenf::normalize_class(cls).cls));
      },
      py::arg("p"), py::arg("n"), py::arg("g0"));
  m.def("candidate_check", &candidate_py, py::arg("matrix"), py::arg("J") = py::none());
  m.def(
      "standard_J", [](int pg0, int q) { return matrix_to_py(primenf::standard_J(pg0, q)); },
      py::arg("pg0"), py::arg("q"));
}
