#include "bihom/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bihom/catalog.hpp"
#include "bihom/io.hpp"

namespace bihom {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file '" + path + "'");
  out << text;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) out << text;
  else write_file(path, text);
}

Classification classify_structure(const Structure& s) {
  return std::visit([](const auto& a) { return classify(a); }, s);
}

std::vector<AuditViolation> audit_structure(const Classification& c, const Structure& s) {
  return std::visit([&](const auto& a) { return audit(c, a); }, s);
}

CheckReport check_structure(const Structure& s, const std::string& id) {
  return std::visit([&](const auto& a) { return check(a, id); }, s);
}

int run_validate(const std::string& file, std::ostream& out) {
  const Structure s = parse_algebra(read_file(file));
  out << "kind: " << kind_of(s) << "\n";
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        out << "dim: " << a.dim() << "\n";
        if constexpr (std::is_same_v<T, BiHomAlgebra>) {
          const ValidationReport rep = a.validate();
          out << "commuting: yes\n";
          out << "regular: " << (rep.regular() ? "yes" : "no");
          if (!rep.alpha_regular) out << "  (alpha is singular)";
          if (!rep.beta_regular) out << "  (beta is singular)";
          out << "\n";
          out << "multiplicative: " << (rep.multiplicative ? "yes" : "no");
          if (!rep.multiplicative) {
            out << "  (" << rep.mult_map << " fails at (";
            for (std::size_t i = 0; i < rep.mult_witness.size(); ++i)
              out << (i ? "," : "") << rep.mult_witness[i];
            out << "))";
          }
          out << "\n";
        } else if constexpr (std::is_same_v<T, AkivisAlgebra>) {
          out << "skew-symmetric bracket: yes\n";
          out << "akivis identity: yes\n";
        } else {
          out << "commuting: yes\n";
          out << "bihom-skew-symmetric bracket: yes\n";
          out << "regular: " << (a.regular() ? "yes" : "no") << "\n";
          out << "multiplicative: " << (a.multiplicative() ? "yes" : "no") << "\n";
        }
      },
      s);
  return 0;
}

int run_classify(const std::string& file, const std::string& identities,
                 const std::string& format, std::ostream& out) {
  const Structure s = parse_algebra(read_file(file));
  bool any_fail = false;

  if (identities.empty()) {
    const Classification c = classify_structure(s);
    any_fail = c.any_failed();
    if (format == "json") out << classification_to_json(c).dump(2) << "\n";
    else out << classification_to_text(c);
  } else {
    std::vector<CheckReport> reports;
    std::stringstream list(identities);
    std::string id;
    while (std::getline(list, id, ',')) {
      if (id.empty()) continue;
      if (!find_identity(id)) throw BadParameter("unknown identity '" + id + "'");
      reports.push_back(check_structure(s, id));
    }
    for (const auto& r : reports) any_fail = any_fail || r.failed();
    if (format == "json") {
      out << serialize_reports(reports);
    } else {
      for (const auto& r : reports) {
        out << r.id << " " << r.name << ": " << to_string(r.verdict);
        if (r.failed()) {
          out << "  witness=(";
          for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? "," : "") << r.witness[i];
          out << ")  residual=" << r.residual.str();
        }
        if (!r.notes.empty()) out << "  [" << r.notes << "]";
        out << "\n";
      }
    }
  }
  return any_fail ? 1 : 0;
}

int run_audit(const std::string& file, const std::string& format, std::ostream& out) {
  const Structure s = parse_algebra(read_file(file));
  const Classification c = classify_structure(s);
  const std::vector<AuditViolation> violations = audit_structure(c, s);
  if (format == "json") out << audit_to_json(violations).dump(2) << "\n";
  else out << audit_to_text(violations);
  return violations.empty() ? 0 : 1;
}

int run_construct(const std::string& what, const std::string& file, const std::string& output,
                  std::ostream& out) {
  if (what != "associated-akivis")
    throw BadParameter("unknown construction '" + what + "' (expected associated-akivis)");
  const Structure s = parse_algebra(read_file(file));
  const BiHomAlgebra* a = std::get_if<BiHomAlgebra>(&s);
  if (!a) throw BadParameter("associated-akivis needs a bihom-algebra document");
  emit(output, serialize(associated_akivis(*a)), out);
  return 0;
}

int run_twist(const std::string& file, const std::string& alpha_file,
              const std::string& beta_file, const std::string& output, std::ostream& out) {
  const Structure s = parse_algebra(read_file(file));
  const LinearMap alpha = parse_linear_map(read_file(alpha_file));
  const LinearMap beta = parse_linear_map(read_file(beta_file));
  if (const BiHomAlgebra* a = std::get_if<BiHomAlgebra>(&s)) {
    emit(output, serialize(yau_twist(a->mu(), alpha, beta)), out);
    return 0;
  }
  if (const AkivisAlgebra* k = std::get_if<AkivisAlgebra>(&s)) {
    emit(output, serialize(akivis_to_bihom(*k, alpha, beta)), out);
    return 0;
  }
  throw BadParameter("use twist-akivis for bihom-akivis-algebra documents");
}

int run_twist_akivis(const std::string& file, const std::string& phi_file,
                     const std::string& psi_file, const std::string& output,
                     std::ostream& out) {
  const Structure s = parse_algebra(read_file(file));
  const BiHomAkivisAlgebra* k = std::get_if<BiHomAkivisAlgebra>(&s);
  if (!k) throw BadParameter("twist-akivis needs a bihom-akivis-algebra document");
  const LinearMap phi = parse_linear_map(read_file(phi_file));
  const LinearMap psi = parse_linear_map(read_file(psi_file));
  emit(output, serialize(twist_bihom_akivis(*k, phi, psi)), out);
  return 0;
}

int run_example(const std::string& name, const std::vector<std::string>& params,
                const std::string& output, std::ostream& out) {
  std::map<std::string, Rational> values;
  for (const std::string& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0)
      throw BadParameter("parameters must look like name=value, got '" + p + "'");
    values[p.substr(0, eq)] = Rational::parse(p.substr(eq + 1));
  }
  const CatalogValue value = make_example(name, values);
  std::visit([&](const auto& v) { emit(output, serialize(v), out); }, value);
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact identity checking for algebras with two commuting twisting maps"};
  app.require_subcommand(1);

  std::string file, output, format = "text", identities;
  std::string alpha_file, beta_file, phi_file, psi_file;
  std::string construct_what, example_name;
  std::vector<std::string> params;

  CLI::App* validate = app.add_subcommand("validate", "parse a document and report its flags");
  validate->add_option("file", file)->required();

  CLI::App* classify_cmd = app.add_subcommand("classify", "run identity checks");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("--identities", identities, "comma-separated identity ids");
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* construct = app.add_subcommand("construct", "derive a structure");
  construct->add_option("what", construct_what)->required();
  construct->add_option("file", file)->required();
  construct->add_option("-o,--output", output);

  CLI::App* twist = app.add_subcommand("twist", "twist a bihom or akivis algebra");
  twist->add_option("file", file)->required();
  twist->add_option("--alpha", alpha_file)->required();
  twist->add_option("--beta", beta_file)->required();
  twist->add_option("-o,--output", output);

  CLI::App* twist_akivis = app.add_subcommand("twist-akivis",
                                              "twist a bihom-akivis algebra by self-morphisms");
  twist_akivis->add_option("file", file)->required();
  twist_akivis->add_option("--phi", phi_file)->required();
  twist_akivis->add_option("--psi", psi_file)->required();
  twist_akivis->add_option("-o,--output", output);

  CLI::App* example = app.add_subcommand("example", "emit a catalog structure");
  example->add_option("name", example_name)->required();
  example->add_option("--param", params, "parameter as name=value");
  example->add_option("-o,--output", output);

  CLI::App* audit_cmd = app.add_subcommand("audit", "cross-check structural implications");
  audit_cmd->add_option("file", file)->required();
  audit_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::vector<const char*> argv;
  argv.push_back("bihom");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*validate) return run_validate(file, out);
    if (*classify_cmd) return run_classify(file, identities, format, out);
    if (*construct) return run_construct(construct_what, file, output, out);
    if (*twist) return run_twist(file, alpha_file, beta_file, output, out);
    if (*twist_akivis) return run_twist_akivis(file, phi_file, psi_file, output, out);
    if (*example) return run_example(example_name, params, output, out);
    if (*audit_cmd) return run_audit(file, format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace bihom
