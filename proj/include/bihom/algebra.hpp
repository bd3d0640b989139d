#pragma once

#include <string>
#include <vector>

#include "bihom/linear_map.hpp"
#include "bihom/multilinear_map.hpp"

namespace bihom {

/// Dimension cap; keeps full basis enumeration of arity-4 identities cheap.
inline constexpr int kMaxDim = 16;

struct ValidationReport {
  bool commuting = true;
  int commuting_witness = -1;  // first basis index where alpha.beta and beta.alpha differ
  bool alpha_regular = true;
  bool beta_regular = true;
  bool multiplicative = true;
  std::string mult_map;             // "alpha" or "beta" when multiplicativity fails
  std::vector<int> mult_witness;    // first basis pair where it fails

  bool regular() const { return alpha_regular && beta_regular; }
};

/// Checks the quadruple (mu, alpha, beta): commuting maps, bijectivity,
/// multiplicativity. Witnesses are lexicographically first.
ValidationReport validate_bihom(const MultilinearMap& mu, const LinearMap& alpha,
                                const LinearMap& beta);

/// Quadruple (A, mu, alpha, beta) with commuting twisting maps.
class BiHomAlgebra {
 public:
  BiHomAlgebra(MultilinearMap mu, LinearMap alpha, LinearMap beta);

  int dim() const { return mu_.dim(); }
  const MultilinearMap& mu() const { return mu_; }
  const LinearMap& alpha() const { return alpha_; }
  const LinearMap& beta() const { return beta_; }
  bool regular() const { return regular_; }
  bool multiplicative() const { return multiplicative_; }

  Vec product(const Vec& x, const Vec& y) const;
  ValidationReport validate() const { return validate_bihom(mu_, alpha_, beta_); }

  friend bool operator==(const BiHomAlgebra& a, const BiHomAlgebra& b) {
    return a.mu_ == b.mu_ && a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

 private:
  MultilinearMap mu_;
  LinearMap alpha_, beta_;
  bool regular_ = false;
  bool multiplicative_ = false;
};

/// Skew-symmetric bracket plus trilinear product satisfying the Akivis
/// identity; both are enforced at construction.
class AkivisAlgebra {
 public:
  AkivisAlgebra(MultilinearMap bracket, MultilinearMap triple);

  int dim() const { return bracket_.dim(); }
  const MultilinearMap& bracket() const { return bracket_; }
  const MultilinearMap& triple() const { return triple_; }

  friend bool operator==(const AkivisAlgebra& a, const AkivisAlgebra& b) {
    return a.bracket_ == b.bracket_ && a.triple_ == b.triple_;
  }

 private:
  MultilinearMap bracket_, triple_;
};

/// Quintuple (V, bracket, triple, alpha, beta) with commuting maps and a
/// BiHom-skew-symmetric bracket: [beta(x), alpha(y)] = -[beta(y), alpha(x)].
class BiHomAkivisAlgebra {
 public:
  BiHomAkivisAlgebra(MultilinearMap bracket, MultilinearMap triple, LinearMap alpha,
                     LinearMap beta);

  int dim() const { return bracket_.dim(); }
  const MultilinearMap& bracket() const { return bracket_; }
  const MultilinearMap& triple() const { return triple_; }
  const LinearMap& alpha() const { return alpha_; }
  const LinearMap& beta() const { return beta_; }
  bool regular() const { return regular_; }
  bool multiplicative() const { return multiplicative_; }

  friend bool operator==(const BiHomAkivisAlgebra& a, const BiHomAkivisAlgebra& b) {
    return a.bracket_ == b.bracket_ && a.triple_ == b.triple_ && a.alpha_ == b.alpha_ &&
           a.beta_ == b.beta_;
  }

 private:
  MultilinearMap bracket_, triple_;
  LinearMap alpha_, beta_;
  bool regular_ = false;
  bool multiplicative_ = false;
};

// ---- constructions ----

/// Twisted product mu'(x, y) = mu(alpha(x), beta(y)) with maps (alpha, beta).
BiHomAlgebra yau_twist(const MultilinearMap& mu, const LinearMap& alpha,
                       const LinearMap& beta);

/// as(x,y,z) = mu(mu(x,y), beta(z)) - mu(alpha(x), mu(y,z)), materialized
/// as structure constants.
MultilinearMap bihom_associator(const BiHomAlgebra& a);

/// [x,y] = mu(x,y) - mu(alpha^-1 beta (y), alpha beta^-1 (x)). Needs regular.
MultilinearMap bihom_commutator(const BiHomAlgebra& a);

/// The commutator bracket repackaged as an algebra with the same maps.
BiHomAlgebra commutator_algebra(const BiHomAlgebra& a);

/// Bracket = the commutator, triple(x,y,z) = as(alpha^-1 beta^2 (x), beta(y),
/// alpha(z)). Needs regular and multiplicative.
BiHomAkivisAlgebra associated_akivis(const BiHomAlgebra& a);

/// Twists an Akivis algebra along commuting endomorphisms:
/// bracket'(x,y) = [alpha(x), beta(y)], triple' = alpha beta^2 . triple.
BiHomAkivisAlgebra akivis_to_bihom(const AkivisAlgebra& k, const LinearMap& alpha,
                                   const LinearMap& beta);

/// Twists along commuting self-morphisms phi, psi:
/// ([phi(x), psi(y)], phi psi^2 . triple, phi alpha, psi beta).
BiHomAkivisAlgebra twist_bihom_akivis(const BiHomAkivisAlgebra& k, const LinearMap& phi,
                                      const LinearMap& psi);

/// J(x,y,z) = sum over cyclic permutations of [beta^2(x), [beta(y), alpha(z)]].
MultilinearMap bihom_jacobiator(const MultilinearMap& bracket, const LinearMap& alpha,
                                const LinearMap& beta);

/// f(w,x,y,z) = as(mu(b^2 w, ab x), a^2 b y, a^3 z)
///            - mu(as(b^2 x, ab y, a^2 z), a^3 b w)
///            - mu(a^2 b^2 x, as(ab w, a^2 y, a^3 b^-1 z)).  Needs regular.
MultilinearMap bruck_kleinfeld(const BiHomAlgebra& a);

}  // namespace bihom
