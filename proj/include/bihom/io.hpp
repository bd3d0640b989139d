#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bihom/identities.hpp"

namespace bihom {

using Structure = std::variant<BiHomAlgebra, AkivisAlgebra, BiHomAkivisAlgebra>;

std::string kind_of(const Structure& s);

/// Parses a structure document. Throws SyntaxError (malformed JSON),
/// SchemaError (missing, extra or ill-typed fields) or InvariantError
/// (violated structure invariants), each carrying a location.
Structure parse_algebra(const std::string& text);

/// Parses a kind:"linear-map" document.
LinearMap parse_linear_map(const std::string& text);

/// Canonical documents: sorted sparse entries, rationals as "p/q" strings.
std::string serialize(const BiHomAlgebra& a);
std::string serialize(const AkivisAlgebra& a);
std::string serialize(const BiHomAkivisAlgebra& a);
std::string serialize(const Structure& s);
std::string serialize(const LinearMap& m);

nlohmann::json report_to_json(const CheckReport& r);
std::string serialize_reports(const std::vector<CheckReport>& reports);

nlohmann::json classification_to_json(const Classification& c);
std::string classification_to_text(const Classification& c);

nlohmann::json audit_to_json(const std::vector<AuditViolation>& violations);
std::string audit_to_text(const std::vector<AuditViolation>& violations);

}  // namespace bihom
