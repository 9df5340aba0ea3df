#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qpart/audit.hpp"
#include "qpart/combinat.hpp"
#include "qpart/dsl.hpp"
#include "qpart/errors.hpp"
#include "qpart/qfactory.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const qpart::Integer& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list coefficients(const qpart::Series& s) {
  py::list out;
  for (const auto& c : s.coefficients()) out.append(to_py(c));
  return out;
}

qpart::Family family_or_throw(const std::string& name) {
  const auto f = qpart::family_from_name(name);
  if (!f) throw qpart::UnknownName("unknown family '" + name + "'");
  return *f;
}

py::dict report_dict(const qpart::AuditReport& r) {
  py::dict d;
  d["id"] = r.id;
  d["order"] = r.order;
  d["status"] = std::string(qpart::status_name(r.status));
  if (r.divergence) {
    d["first_divergence"] = r.divergence->index;
    d["left_value"] = to_py(r.divergence->left);
    d["right_value"] = to_py(r.divergence->right);
  }
  if (r.verified_variant) d["verified_variant"] = *r.verified_variant;
  py::dict variants;
  for (const auto& v : r.variants) variants[py::str(v.name)] = std::string(qpart::status_name(v.status));
  d["variants"] = variants;
  if (!r.error.empty()) d["error"] = r.error;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact truncated q-series and two-color partition counts";

  auto base = py::register_exception<qpart::Error>(m, "QPartError", PyExc_ValueError);
  py::register_exception<qpart::dsl::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<qpart::InvalidSpecialization>(m, "InvalidSpecialization", base.ptr());

  m.def(
      "expand",
      [](const std::string& expression, std::size_t order) {
        return coefficients(qpart::dsl::evaluate(*qpart::dsl::parse(expression), order));
      },
      py::arg("expression"), py::arg("order"),
      "Coefficients 0..order of an expression such as \"1/(q;q)_inf\".");

  m.def(
      "named_series",
      [](const std::string& key, std::size_t order) {
        return coefficients(qpart::named_series(key, order));
      },
      py::arg("key"), py::arg("order"));

  m.def("catalog_keys", [] {
    std::vector<std::string> keys;
    for (const auto& e : qpart::catalog()) keys.emplace_back(e.key);
    return keys;
  });

  m.def(
      "count",
      [](const std::string& family, std::size_t n) -> py::int_ {
        if (family == "pbar") return to_py(qpart::count_overpartitions(n));
        if (family == "pbar_odd") return to_py(qpart::count_overpartitions_odd(n));
        return to_py(qpart::count_family(family_or_throw(family), n));
      },
      py::arg("family"), py::arg("n"));

  m.def(
      "enumerate",
      [](const std::string& family, std::size_t n) {
        const auto f = family_or_throw(family);
        if (f != qpart::Family::F && f != qpart::Family::H) {
          throw qpart::UnknownName("enumerate supports F and H only");
        }
        std::vector<std::string> out;
        for (const auto& p : f == qpart::Family::F ? qpart::enumerate_F(n) : qpart::enumerate_H(n)) {
          out.push_back(p.to_string());
        }
        return out;
      },
      py::arg("family"), py::arg("n"));

  m.def(
      "verify",
      [](const std::vector<std::string>& ids, std::optional<std::size_t> order) {
        py::list out;
        for (const auto& r : qpart::run_suite(order, ids)) out.append(report_dict(r));
        return out;
      },
      py::arg("ids") = std::vector<std::string>{}, py::arg("order") = py::none());

  m.def("check_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : qpart::registry()) ids.push_back(c.id);
    return ids;
  });
}
