#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihom/algebra.hpp"

namespace bihom {

enum class Verdict { pass, fail, not_applicable };
std::string to_string(Verdict v);

struct CheckReport {
  std::string id;    // registry code, e.g. "I2"
  std::string name;  // e.g. "bihom-associative"
  Verdict verdict = Verdict::not_applicable;
  std::vector<int> witness;  // lexicographically first failing slot tuple
  Vec residual;              // value at the witness
  std::string notes;

  bool passed() const { return verdict == Verdict::pass; }
  bool failed() const { return verdict == Verdict::fail; }
};

struct IdentityInfo {
  std::string id;
  std::string name;
};

/// All identity codes, in registry order.
const std::vector<IdentityInfo>& identity_registry();
/// Lookup by code or name; nullptr when unknown.
const IdentityInfo* find_identity(const std::string& id_or_name);
/// Codes applicable to a structure kind ("bihom-algebra", "akivis-algebra",
/// "bihom-akivis-algebra"), in classification order.
std::vector<std::string> identities_for_kind(const std::string& kind);

/// Decides one identity exactly. Identities with repeated variables are
/// polarized: each degree-d variable becomes d slots and the evaluator is
/// summed over all d! slot-to-occurrence assignments; over a field of
/// characteristic 0 vanishing on all basis slot tuples is equivalent to the
/// original identity holding for all vectors.
CheckReport check(const BiHomAlgebra& a, const std::string& identity);
CheckReport check(const AkivisAlgebra& a, const std::string& identity);
CheckReport check(const BiHomAkivisAlgebra& a, const std::string& identity);

/// Pass iff m composed slotwise with the given maps vanishes whenever two
/// arguments coincide; decided on basis tuples by antisymmetry under adjacent
/// transpositions plus vanishing on repeated indices.
CheckReport check_alternating(const MultilinearMap& m, const std::vector<LinearMap>& slot_maps,
                              const std::string& id = "alternating",
                              const std::string& name = "alternating");

/// Morphism conditions of f from src to dst on all basis tuples; map
/// intertwining is skipped for plain Akivis algebras.
CheckReport check_morphism(const LinearMap& f, const BiHomAlgebra& src, const BiHomAlgebra& dst);
CheckReport check_morphism(const LinearMap& f, const AkivisAlgebra& src, const AkivisAlgebra& dst);
CheckReport check_morphism(const LinearMap& f, const BiHomAkivisAlgebra& src,
                           const BiHomAkivisAlgebra& dst);

struct Classification {
  std::string kind;
  int dim = 0;
  bool has_maps = false;
  bool regular = false;
  bool multiplicative = false;
  std::vector<CheckReport> reports;

  const CheckReport* find(const std::string& id) const;
  bool any_failed() const;
  /// Derived property flags in a fixed order; absent when a constituent
  /// report is not applicable.
  std::vector<std::pair<std::string, bool>> derived_flags() const;
};

Classification classify(const BiHomAlgebra& a);
Classification classify(const AkivisAlgebra& a);
Classification classify(const BiHomAkivisAlgebra& a);

struct AuditViolation {
  std::string rule;  // "R1" .. "R9"
  std::string message;
};

/// Cross-checks the classification against the structural implication rules
/// R1-R9 (closure properties between identities, including the derived
/// commutator bracket and associated Akivis structure). Rules with
/// not-applicable premises or conclusions are skipped, never confirmed.
std::vector<AuditViolation> audit(const Classification& c, const BiHomAlgebra& a);
std::vector<AuditViolation> audit(const Classification& c, const AkivisAlgebra& a);
std::vector<AuditViolation> audit(const Classification& c, const BiHomAkivisAlgebra& a);

/// Direct (unpolarized) residual evaluators, used by the random-sampling
/// cross-check of the polarized decision procedure.
enum class RawKind { residual, alternating, multiplicativity };
struct RawIdentity {
  RawKind kind = RawKind::residual;
  int nargs = 0;
  std::function<Vec(const std::vector<Vec>&)> eval;
};
std::optional<RawIdentity> raw_identity(const BiHomAlgebra& a, const std::string& identity);
std::optional<RawIdentity> raw_identity(const AkivisAlgebra& a, const std::string& identity);
std::optional<RawIdentity> raw_identity(const BiHomAkivisAlgebra& a, const std::string& identity);

}  // namespace bihom
