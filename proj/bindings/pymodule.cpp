#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bihom/catalog.hpp"
#include "bihom/io.hpp"

namespace py = pybind11;
using namespace bihom;

namespace {

py::object json_loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

py::object report_dict(const CheckReport& r) { return json_loads(report_to_json(r).dump()); }

LinearMap map_from_rows(const std::vector<std::vector<std::string>>& rows) {
  const int n = static_cast<int>(rows.size());
  LinearMap m(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != n)
      throw DimensionMismatch("matrix rows must form a square");
    for (int c = 0; c < n; ++c)
      m.at(r, c) = Rational::parse(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  }
  return m;
}

std::vector<std::vector<std::string>> map_rows(const LinearMap& m) {
  std::vector<std::vector<std::string>> rows;
  for (int r = 0; r < m.dim(); ++r) {
    std::vector<std::string> row;
    for (int c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> vec_strings(const Vec& v) {
  std::vector<std::string> out;
  for (int i = 0; i < v.dim(); ++i) out.push_back(v[i].str());
  return out;
}

Vec product_at(const MultilinearMap& m, const std::vector<int>& idx) {
  if (static_cast<int>(idx.size()) != m.arity())
    throw DimensionMismatch("wrong number of indices");
  const Vec* v = m.basis_image(idx);
  return v ? *v : Vec(m.dim());
}

template <typename T>
py::object classify_dict(const T& a) {
  return json_loads(classification_to_json(classify(a)).dump());
}

template <typename T>
py::object audit_list(const T& a) {
  const Classification c = classify(a);
  return json_loads(audit_to_json(audit(c, a)).dump()).attr("__getitem__")("violations");
}

template <typename T>
T parse_as(const std::string& text) {
  Structure s = parse_algebra(text);
  if (!std::holds_alternative<T>(s)) throw SchemaError("unexpected document kind", "/kind");
  return std::get<T>(std::move(s));
}

}  // namespace

PYBIND11_MODULE(_bihom, m) {
  m.doc() = "exact structure-constant calculus and identity checking for "
            "algebras with two commuting twisting maps";

  py::register_exception<Error>(m, "BihomError");

  py::class_<LinearMap>(m, "LinearMap")
      .def(py::init(&map_from_rows), py::arg("rows"))
      .def_static("identity", &LinearMap::identity, py::arg("dim"))
      .def_property_readonly("dim", &LinearMap::dim)
      .def("rows", &map_rows)
      .def("compose", &LinearMap::compose)
      .def("inverse", &LinearMap::inverse)
      .def("power", &LinearMap::power)
      .def("commutes_with", &LinearMap::commutes_with)
      .def("is_identity", &LinearMap::is_identity)
      .def("to_json", [](const LinearMap& f) { return serialize(f); })
      .def_static("from_json", &parse_linear_map)
      .def(py::self == py::self);

  py::class_<BiHomAlgebra>(m, "BiHomAlgebra")
      .def_property_readonly("dim", &BiHomAlgebra::dim)
      .def_property_readonly("regular", &BiHomAlgebra::regular)
      .def_property_readonly("multiplicative", &BiHomAlgebra::multiplicative)
      .def_property_readonly("alpha", &BiHomAlgebra::alpha)
      .def_property_readonly("beta", &BiHomAlgebra::beta)
      .def("product",
           [](const BiHomAlgebra& a, int i, int j) {
             return vec_strings(product_at(a.mu(), {i, j}));
           })
      .def("check", [](const BiHomAlgebra& a, const std::string& id) {
        return report_dict(check(a, id));
      })
      .def("classify", &classify_dict<BiHomAlgebra>)
      .def("audit", &audit_list<BiHomAlgebra>)
      .def("to_json", [](const BiHomAlgebra& a) { return serialize(a); })
      .def_static("from_json", &parse_as<BiHomAlgebra>)
      .def(py::self == py::self);

  py::class_<AkivisAlgebra>(m, "AkivisAlgebra")
      .def_property_readonly("dim", &AkivisAlgebra::dim)
      .def("bracket",
           [](const AkivisAlgebra& a, int i, int j) {
             return vec_strings(product_at(a.bracket(), {i, j}));
           })
      .def("triple",
           [](const AkivisAlgebra& a, int i, int j, int k) {
             return vec_strings(product_at(a.triple(), {i, j, k}));
           })
      .def("check", [](const AkivisAlgebra& a, const std::string& id) {
        return report_dict(check(a, id));
      })
      .def("classify", &classify_dict<AkivisAlgebra>)
      .def("audit", &audit_list<AkivisAlgebra>)
      .def("to_json", [](const AkivisAlgebra& a) { return serialize(a); })
      .def_static("from_json", &parse_as<AkivisAlgebra>)
      .def(py::self == py::self);

  py::class_<BiHomAkivisAlgebra>(m, "BiHomAkivisAlgebra")
      .def_property_readonly("dim", &BiHomAkivisAlgebra::dim)
      .def_property_readonly("regular", &BiHomAkivisAlgebra::regular)
      .def_property_readonly("multiplicative", &BiHomAkivisAlgebra::multiplicative)
      .def_property_readonly("alpha", &BiHomAkivisAlgebra::alpha)
      .def_property_readonly("beta", &BiHomAkivisAlgebra::beta)
      .def("bracket",
           [](const BiHomAkivisAlgebra& a, int i, int j) {
             return vec_strings(product_at(a.bracket(), {i, j}));
           })
      .def("triple",
           [](const BiHomAkivisAlgebra& a, int i, int j, int k) {
             return vec_strings(product_at(a.triple(), {i, j, k}));
           })
      .def("check", [](const BiHomAkivisAlgebra& a, const std::string& id) {
        return report_dict(check(a, id));
      })
      .def("classify", &classify_dict<BiHomAkivisAlgebra>)
      .def("audit", &audit_list<BiHomAkivisAlgebra>)
      .def("to_json", [](const BiHomAkivisAlgebra& a) { return serialize(a); })
      .def_static("from_json", &parse_as<BiHomAkivisAlgebra>)
      .def(py::self == py::self);

  // catalog
  m.def("make_ex1", [](const std::string& lambda) { return make_ex1(Rational::parse(lambda)); });
  m.def("make_ex1_base", &make_ex1_base);
  m.def("ex1_alpha", [](const std::string& lambda) { return ex1_alpha(Rational::parse(lambda)); });
  m.def("ex1_beta", [](const std::string& lambda) { return ex1_beta(Rational::parse(lambda)); });
  m.def("make_akivis2d", &make_akivis2d);
  m.def("make_r_map", [](const std::string& r) { return make_r_map(Rational::parse(r)); });
  m.def("make_s_map", [](const std::string& s) { return make_s_map(Rational::parse(s)); });
  m.def("make_octonions", &make_octonions);
  m.def("octonion_involution", &octonion_involution);
  m.def("make_cross3", &make_cross3);
  m.def("rot_z", &rot_z);
  m.def("rot_z_inv", &rot_z_inv);

  // constructions
  m.def("yau_twist", [](const BiHomAlgebra& base, const LinearMap& alpha, const LinearMap& beta) {
    return yau_twist(base.mu(), alpha, beta);
  });
  m.def("commutator_algebra", &commutator_algebra);
  m.def("associated_akivis", &associated_akivis);
  m.def("akivis_to_bihom", &akivis_to_bihom);
  m.def("twist_bihom_akivis", &twist_bihom_akivis);

  m.def("check_morphism",
        [](const LinearMap& f, const BiHomAlgebra& src, const BiHomAlgebra& dst) {
          return report_dict(check_morphism(f, src, dst));
        });
  m.def("check_morphism",
        [](const LinearMap& f, const AkivisAlgebra& src, const AkivisAlgebra& dst) {
          return report_dict(check_morphism(f, src, dst));
        });
  m.def("check_morphism",
        [](const LinearMap& f, const BiHomAkivisAlgebra& src, const BiHomAkivisAlgebra& dst) {
          return report_dict(check_morphism(f, src, dst));
        });

  m.def("parse_algebra", [](const std::string& text) {
    return py::cast(parse_algebra(text));
  });
  m.def("identity_ids", [] {
    std::vector<std::string> ids;
    for (const auto& info : identity_registry()) ids.push_back(info.id);
    return ids;
  });
}
