#pragma once

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "bihom/algebra.hpp"

namespace bihom {

// ---- the two-dimensional twisted family ----

/// Base product on K^2: mu(e0, e1) = mu(e1, e1) = e0, all other products 0.
MultilinearMap ex1_base_mu();
BiHomAlgebra make_ex1_base();

/// alpha_lambda: e0 -> (lambda+1) e0, e1 -> lambda e0 + e1.
LinearMap ex1_alpha(const Rational& lambda);
/// beta_lambda = alpha_lambda^-1.
LinearMap ex1_beta(const Rational& lambda);

/// yau_twist of the base product by (alpha_lambda, beta_lambda).
/// Throws BadParameter at lambda = -1.
BiHomAlgebra make_ex1(const Rational& lambda);

// ---- the two-dimensional Akivis algebra and its endomorphism family ----

/// [e0, e1] = e0 (skew-completed), [e0,e1,e1] = [e1,e1,e1] = e0.
AkivisAlgebra make_akivis2d();
/// e0 -> (r+1) e0, e1 -> r e0 + e1; an endomorphism for every r.
LinearMap make_r_map(const Rational& r);
LinearMap make_s_map(const Rational& s);

// ---- octonions ----

/// Cayley-Dickson doubling from the reals with (a,b)(c,d) = (ac - conj(d) b,
/// da + b conj(c)); basis 1, i, j, k, l, il, jl, kl; identity twisting maps.
BiHomAlgebra make_octonions();
/// The doubling automorphism (a, b) -> (a, -b): fixes e0..e3, negates e4..e7.
LinearMap octonion_involution();

// ---- cross product on K^3 ----

/// [e0,e1] = e2 cyclic, as an algebra with identity maps.
BiHomAlgebra make_cross3();
/// Rotation by the 3-4-5 angle around e2; an automorphism of the cross
/// product with rational inverse equal to its transpose.
LinearMap rot_z();
LinearMap rot_z_inv();

// ---- named catalog for the CLI and bindings ----

using CatalogValue = std::variant<BiHomAlgebra, AkivisAlgebra, BiHomAkivisAlgebra, LinearMap>;

struct CatalogEntry {
  std::string name;
  std::string kind;                 // "bihom-algebra" | "akivis-algebra" | "linear-map"
  std::vector<std::string> params;  // required parameter names
  std::string doc;
  std::function<CatalogValue(const std::map<std::string, Rational>&)> make;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_catalog_entry(const std::string& name);

/// Instantiates a named entry; throws BadParameter on unknown names,
/// missing/extra parameters, or inadmissible values.
CatalogValue make_example(const std::string& name,
                          const std::map<std::string, Rational>& params);

}  // namespace bihom
