#include "bihom/io.hpp"

#include <array>
#include <set>
#include <sstream>

namespace bihom {

using nlohmann::json;

namespace {

constexpr const char* kKindBiHom = "bihom-algebra";
constexpr const char* kKindAkivis = "akivis-algebra";
constexpr const char* kKindBiHomAkivis = "bihom-akivis-algebra";
constexpr const char* kKindLinearMap = "linear-map";

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.what(), "byte " + std::to_string(e.byte));
  }
}

void require_fields(const json& j, const std::set<std::string>& required,
                    const std::set<std::string>& optional, const std::string& where) {
  for (const auto& f : required)
    if (!j.contains(f)) throw SchemaError("missing field '" + f + "'", where);
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!required.contains(key) && !optional.contains(key))
      throw SchemaError("unexpected field '" + key + "'", where + "/" + key);
  }
}

int get_dim(const json& j) {
  const json& d = j.at("dim");
  if (!d.is_number_integer() || d.get<int>() < 1)
    throw SchemaError("'dim' must be a positive integer", "/dim");
  return d.get<int>();
}

void check_convention(const json& j) {
  const json& c = j.at("convention");
  if (!c.is_string() || c.get<std::string>() != "column")
    throw SchemaError("'convention' must be the string \"column\"", "/convention");
}

void check_basis(const json& j, int dim) {
  if (!j.contains("basis")) return;
  const json& b = j.at("basis");
  if (!b.is_array() || static_cast<int>(b.size()) != dim)
    throw SchemaError("'basis' must list one label per dimension", "/basis");
  for (const auto& x : b)
    if (!x.is_string()) throw SchemaError("basis labels must be strings", "/basis");
}

Rational get_rational(const json& v, const std::string& where) {
  if (!v.is_string()) throw SchemaError("rationals must be strings like \"p/q\"", where);
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const BadParameter& e) {
    throw SchemaError(e.what(), where);
  }
}

int get_index(const json& v, int dim, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaError("indices must be integers", where);
  const int i = v.get<int>();
  if (i < 0 || i >= dim) throw SchemaError("index out of range", where);
  return i;
}

MultilinearMap get_product(const json& j, const std::string& field, int dim, int arity) {
  const json& rows = j.at(field);
  const std::string where = "/" + field;
  if (!rows.is_array()) throw SchemaError("'" + field + "' must be an array", where);
  static constexpr std::array<const char*, 3> kIndexNames{"i", "j", "k"};

  MultilinearMap m(dim, arity);
  std::set<std::vector<int>> seen;
  int row_no = 0;
  for (const auto& row : rows) {
    const std::string rw = where + "[" + std::to_string(row_no++) + "]";
    if (!row.is_object()) throw SchemaError("product entries must be objects", rw);
    std::set<std::string> required{"coeffs"};
    for (int t = 0; t < arity; ++t) required.insert(kIndexNames[static_cast<std::size_t>(t)]);
    require_fields(row, required, {}, rw);

    std::vector<int> in;
    for (int t = 0; t < arity; ++t) {
      const char* name = kIndexNames[static_cast<std::size_t>(t)];
      in.push_back(get_index(row.at(name), dim, rw + "/" + name));
    }
    if (!seen.insert(in).second) throw SchemaError("duplicate product entry", rw);

    const json& coeffs = row.at("coeffs");
    if (!coeffs.is_object()) throw SchemaError("'coeffs' must be an object", rw + "/coeffs");
    for (const auto& [key, value] : coeffs.items()) {
      int out = -1;
      try {
        std::size_t used = 0;
        out = std::stoi(key, &used);
        if (used != key.size()) out = -1;
      } catch (...) {
        out = -1;
      }
      if (out < 0 || out >= dim)
        throw SchemaError("output index out of range", rw + "/coeffs/" + key);
      m.add_term(in, out, get_rational(value, rw + "/coeffs/" + key));
    }
  }
  return m;
}

LinearMap get_matrix(const json& j, const std::string& field, int dim) {
  const json& rows = j.at(field);
  const std::string where = "/" + field;
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw SchemaError("'" + field + "' must be a " + std::to_string(dim) + "x" +
                          std::to_string(dim) + " array",
                      where);
  LinearMap m(dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = rows[static_cast<std::size_t>(r)];
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw SchemaError("matrix rows must have length " + std::to_string(dim), rw);
    for (int c = 0; c < dim; ++c)
      m.at(r, c) = get_rational(row[static_cast<std::size_t>(c)],
                                rw + "[" + std::to_string(c) + "]");
  }
  return m;
}

json product_to_json(const MultilinearMap& m) {
  static constexpr std::array<const char*, 3> kIndexNames{"i", "j", "k"};
  json rows = json::array();
  for (const auto& [key, img] : m.entries()) {
    const std::vector<int> in = m.unpack(key);
    json row;
    for (int t = 0; t < m.arity(); ++t)
      row[kIndexNames[static_cast<std::size_t>(t)]] = in[static_cast<std::size_t>(t)];
    json coeffs = json::object();
    for (int out = 0; out < m.dim(); ++out)
      if (!img[out].is_zero()) coeffs[std::to_string(out)] = img[out].str();
    row["coeffs"] = std::move(coeffs);
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_to_json(const LinearMap& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json header(const std::string& kind, int dim) {
  json j;
  j["kind"] = kind;
  j["convention"] = "column";
  j["dim"] = dim;
  return j;
}

[[noreturn]] void rethrow_invariant(const Error& e, const std::string& where) {
  throw InvariantError(e.what(), where);
}

}  // namespace

std::string kind_of(const Structure& s) {
  if (std::holds_alternative<BiHomAlgebra>(s)) return kKindBiHom;
  if (std::holds_alternative<AkivisAlgebra>(s)) return kKindAkivis;
  return kKindBiHomAkivis;
}

Structure parse_algebra(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw SchemaError("top-level value must be an object", "/");
  if (!j.contains("kind") || !j.at("kind").is_string())
    throw SchemaError("missing or ill-typed field 'kind'", "/kind");
  const std::string kind = j.at("kind").get<std::string>();

  if (kind == kKindBiHom) {
    require_fields(j, {"kind", "convention", "dim", "mu", "alpha", "beta"}, {"basis"}, "/");
    check_convention(j);
    const int dim = get_dim(j);
    check_basis(j, dim);
    MultilinearMap mu = get_product(j, "mu", dim, 2);
    LinearMap alpha = get_matrix(j, "alpha", dim);
    LinearMap beta = get_matrix(j, "beta", dim);
    try {
      return BiHomAlgebra(std::move(mu), std::move(alpha), std::move(beta));
    } catch (const NotCommuting& e) {
      rethrow_invariant(e, "/alpha,/beta");
    } catch (const BadParameter& e) {
      rethrow_invariant(e, "/dim");
    }
  }
  if (kind == kKindAkivis) {
    require_fields(j, {"kind", "convention", "dim", "bracket", "triple"}, {"basis"}, "/");
    check_convention(j);
    const int dim = get_dim(j);
    check_basis(j, dim);
    MultilinearMap bracket = get_product(j, "bracket", dim, 2);
    MultilinearMap triple = get_product(j, "triple", dim, 3);
    try {
      return AkivisAlgebra(std::move(bracket), std::move(triple));
    } catch (const InvalidStructure& e) {
      rethrow_invariant(e, "/bracket,/triple");
    } catch (const BadParameter& e) {
      rethrow_invariant(e, "/dim");
    }
  }
  if (kind == kKindBiHomAkivis) {
    require_fields(j, {"kind", "convention", "dim", "bracket", "triple", "alpha", "beta"},
                   {"basis"}, "/");
    check_convention(j);
    const int dim = get_dim(j);
    check_basis(j, dim);
    MultilinearMap bracket = get_product(j, "bracket", dim, 2);
    MultilinearMap triple = get_product(j, "triple", dim, 3);
    LinearMap alpha = get_matrix(j, "alpha", dim);
    LinearMap beta = get_matrix(j, "beta", dim);
    try {
      return BiHomAkivisAlgebra(std::move(bracket), std::move(triple), std::move(alpha),
                                std::move(beta));
    } catch (const NotCommuting& e) {
      rethrow_invariant(e, "/alpha,/beta");
    } catch (const InvalidStructure& e) {
      rethrow_invariant(e, "/bracket");
    } catch (const BadParameter& e) {
      rethrow_invariant(e, "/dim");
    }
  }
  if (kind == kKindLinearMap)
    throw SchemaError("expected an algebra document, got a linear map", "/kind");
  throw SchemaError("unknown kind '" + kind + "'", "/kind");
}

LinearMap parse_linear_map(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw SchemaError("top-level value must be an object", "/");
  if (!j.contains("kind") || !j.at("kind").is_string() ||
      j.at("kind").get<std::string>() != kKindLinearMap)
    throw SchemaError("expected kind \"linear-map\"", "/kind");
  require_fields(j, {"kind", "convention", "dim", "matrix"}, {}, "/");
  check_convention(j);
  const int dim = get_dim(j);
  return get_matrix(j, "matrix", dim);
}

std::string serialize(const BiHomAlgebra& a) {
  json j = header(kKindBiHom, a.dim());
  j["mu"] = product_to_json(a.mu());
  j["alpha"] = matrix_to_json(a.alpha());
  j["beta"] = matrix_to_json(a.beta());
  return dump(j);
}

std::string serialize(const AkivisAlgebra& a) {
  json j = header(kKindAkivis, a.dim());
  j["bracket"] = product_to_json(a.bracket());
  j["triple"] = product_to_json(a.triple());
  return dump(j);
}

std::string serialize(const BiHomAkivisAlgebra& a) {
  json j = header(kKindBiHomAkivis, a.dim());
  j["bracket"] = product_to_json(a.bracket());
  j["triple"] = product_to_json(a.triple());
  j["alpha"] = matrix_to_json(a.alpha());
  j["beta"] = matrix_to_json(a.beta());
  return dump(j);
}

std::string serialize(const Structure& s) {
  return std::visit([](const auto& a) { return serialize(a); }, s);
}

std::string serialize(const LinearMap& m) {
  json j = header(kKindLinearMap, m.dim());
  j["matrix"] = matrix_to_json(m);
  return dump(j);
}

json report_to_json(const CheckReport& r) {
  json j;
  j["id"] = r.id;
  j["name"] = r.name;
  j["verdict"] = to_string(r.verdict);
  if (r.failed()) {
    j["witness"] = r.witness;
    json res = json::array();
    for (int i = 0; i < r.residual.dim(); ++i) res.push_back(r.residual[i].str());
    j["residual"] = std::move(res);
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

std::string serialize_reports(const std::vector<CheckReport>& reports) {
  json j = json::array();
  for (const auto& r : reports) j.push_back(report_to_json(r));
  return dump(j);
}

json classification_to_json(const Classification& c) {
  json j;
  j["kind"] = c.kind;
  j["dim"] = c.dim;
  if (c.has_maps) {
    j["regular"] = c.regular;
    j["multiplicative"] = c.multiplicative;
  }
  json reports = json::array();
  for (const auto& r : c.reports) reports.push_back(report_to_json(r));
  j["reports"] = std::move(reports);
  json derived;
  for (const auto& [flag, value] : c.derived_flags()) derived[flag] = value;
  j["derived"] = std::move(derived);
  return j;
}

std::string classification_to_text(const Classification& c) {
  std::ostringstream out;
  out << "kind: " << c.kind << "  dim: " << c.dim;
  if (c.has_maps)
    out << "  regular: " << (c.regular ? "yes" : "no")
        << "  multiplicative: " << (c.multiplicative ? "yes" : "no");
  out << "\n";
  for (const auto& r : c.reports) {
    out << "  " << r.id;
    for (std::size_t i = r.id.size(); i < 5; ++i) out << ' ';
    out << r.name;
    for (std::size_t i = r.name.size(); i < 28; ++i) out << ' ';
    out << to_string(r.verdict);
    if (r.failed()) {
      out << "  witness=(";
      for (std::size_t i = 0; i < r.witness.size(); ++i)
        out << (i ? "," : "") << r.witness[i];
      out << ")  residual=" << r.residual.str();
    }
    if (!r.notes.empty()) out << "  [" << r.notes << "]";
    out << "\n";
  }
  out << "derived:";
  for (const auto& [flag, value] : c.derived_flags())
    out << " " << flag << "=" << (value ? "yes" : "no");
  out << "\n";
  return out.str();
}

json audit_to_json(const std::vector<AuditViolation>& violations) {
  json j;
  json list = json::array();
  for (const auto& v : violations) {
    json item;
    item["rule"] = v.rule;
    item["message"] = v.message;
    list.push_back(std::move(item));
  }
  j["violations"] = std::move(list);
  return j;
}

std::string audit_to_text(const std::vector<AuditViolation>& violations) {
  if (violations.empty()) return "no violations\n";
  std::ostringstream out;
  for (const auto& v : violations) out << v.rule << ": " << v.message << "\n";
  return out.str();
}

}  // namespace bihom
