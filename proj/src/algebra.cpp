#include "bihom/algebra.hpp"

#include <array>
#include <utility>

namespace bihom {

namespace {

Vec ev2(const MultilinearMap& m, const Vec& x, const Vec& y) {
  const std::array<Vec, 2> a{x, y};
  return m.eval(a);
}

Vec ev3(const MultilinearMap& m, const Vec& x, const Vec& y, const Vec& z) {
  const std::array<Vec, 3> a{x, y, z};
  return m.eval(a);
}

void require_dim_cap(int dim) {
  if (dim < 1 || dim > kMaxDim)
    throw BadParameter("dimension must be between 1 and " + std::to_string(kMaxDim));
}

void require_square_match(const MultilinearMap& m, const LinearMap& f, const char* what) {
  if (f.dim() != m.dim()) throw DimensionMismatch(std::string(what) + " has wrong dimension");
}

// First basis pair/triple (lex) where map fails to be an endomorphism of m,
// or empty when it is one.
std::vector<int> endo_witness(const MultilinearMap& m, const LinearMap& f) {
  const int n = m.dim();
  std::vector<Vec> fb;
  fb.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) fb.push_back(f.apply(Vec::basis(n, i)));

  std::vector<int> idx(static_cast<std::size_t>(m.arity()), 0);
  do {
    Vec lhs(n);
    if (const Vec* img = m.basis_image(idx)) lhs = f.apply(*img);
    std::vector<Vec> args;
    args.reserve(idx.size());
    for (int i : idx) args.push_back(fb[static_cast<std::size_t>(i)]);
    if (!(lhs - m.eval(args)).is_zero()) return idx;
  } while (next_tuple(idx, n));
  return {};
}

}  // namespace

ValidationReport validate_bihom(const MultilinearMap& mu, const LinearMap& alpha,
                                const LinearMap& beta) {
  require_square_match(mu, alpha, "alpha");
  require_square_match(mu, beta, "beta");
  ValidationReport rep;

  const LinearMap ab = alpha.compose(beta);
  const LinearMap ba = beta.compose(alpha);
  if (!(ab == ba)) {
    rep.commuting = false;
    for (int c = 0; c < mu.dim(); ++c) {
      if (!(ab.column(c) == ba.column(c))) {
        rep.commuting_witness = c;
        break;
      }
    }
  }

  rep.alpha_regular = alpha.invertible();
  rep.beta_regular = beta.invertible();

  auto w = endo_witness(mu, alpha);
  if (!w.empty()) {
    rep.multiplicative = false;
    rep.mult_map = "alpha";
    rep.mult_witness = w;
  } else {
    w = endo_witness(mu, beta);
    if (!w.empty()) {
      rep.multiplicative = false;
      rep.mult_map = "beta";
      rep.mult_witness = w;
    }
  }
  return rep;
}

BiHomAlgebra::BiHomAlgebra(MultilinearMap mu, LinearMap alpha, LinearMap beta)
    : mu_(std::move(mu)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (mu_.arity() != 2) throw BadParameter("algebra product must be bilinear");
  require_dim_cap(mu_.dim());
  require_square_match(mu_, alpha_, "alpha");
  require_square_match(mu_, beta_, "beta");
  const ValidationReport rep = validate_bihom(mu_, alpha_, beta_);
  if (!rep.commuting)
    throw NotCommuting("alpha and beta do not commute (first difference on e_" +
                       std::to_string(rep.commuting_witness) + ")");
  regular_ = rep.regular();
  multiplicative_ = rep.multiplicative;
}

Vec BiHomAlgebra::product(const Vec& x, const Vec& y) const { return ev2(mu_, x, y); }

AkivisAlgebra::AkivisAlgebra(MultilinearMap bracket, MultilinearMap triple)
    : bracket_(std::move(bracket)), triple_(std::move(triple)) {
  if (bracket_.arity() != 2) throw BadParameter("bracket must be bilinear");
  if (triple_.arity() != 3) throw BadParameter("triple product must be trilinear");
  if (triple_.dim() != bracket_.dim())
    throw DimensionMismatch("bracket and triple dimensions differ");
  require_dim_cap(bracket_.dim());

  const int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const std::array<int, 2> ij{i, j}, ji{j, i};
      Vec sum(n);
      if (const Vec* v = bracket_.basis_image(ij)) sum += *v;
      if (const Vec* v = bracket_.basis_image(ji)) sum += *v;
      if (i == j) {
        if (const Vec* v = bracket_.basis_image(ij); v && !v->is_zero())
          throw InvalidStructure("bracket is not skew-symmetric: [e_" + std::to_string(i) +
                                 ", e_" + std::to_string(i) + "] is nonzero");
      } else if (!sum.is_zero()) {
        throw InvalidStructure("bracket is not skew-symmetric at (e_" + std::to_string(i) +
                               ", e_" + std::to_string(j) + ")");
      }
    }

  // Akivis identity on all basis triples (trilinear, so this decides it).
  std::vector<Vec> b;
  for (int i = 0; i < n; ++i) b.push_back(Vec::basis(n, i));
  std::vector<int> t(3, 0);
  do {
    const Vec &x = b[static_cast<std::size_t>(t[0])], &y = b[static_cast<std::size_t>(t[1])],
              &z = b[static_cast<std::size_t>(t[2])];
    Vec r = ev2(bracket_, x, ev2(bracket_, y, z));
    r += ev2(bracket_, y, ev2(bracket_, z, x));
    r += ev2(bracket_, z, ev2(bracket_, x, y));
    r -= ev3(triple_, x, y, z);
    r -= ev3(triple_, y, z, x);
    r -= ev3(triple_, z, x, y);
    r += ev3(triple_, y, x, z);
    r += ev3(triple_, z, y, x);
    r += ev3(triple_, x, z, y);
    if (!r.is_zero())
      throw InvalidStructure("Akivis identity fails at (e_" + std::to_string(t[0]) + ", e_" +
                             std::to_string(t[1]) + ", e_" + std::to_string(t[2]) + ")");
  } while (next_tuple(t, n));
}

BiHomAkivisAlgebra::BiHomAkivisAlgebra(MultilinearMap bracket, MultilinearMap triple,
                                       LinearMap alpha, LinearMap beta)
    : bracket_(std::move(bracket)),
      triple_(std::move(triple)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)) {
  if (bracket_.arity() != 2) throw BadParameter("bracket must be bilinear");
  if (triple_.arity() != 3) throw BadParameter("triple product must be trilinear");
  if (triple_.dim() != bracket_.dim())
    throw DimensionMismatch("bracket and triple dimensions differ");
  require_dim_cap(bracket_.dim());
  require_square_match(bracket_, alpha_, "alpha");
  require_square_match(bracket_, beta_, "beta");

  if (!alpha_.commutes_with(beta_)) throw NotCommuting("alpha and beta do not commute");

  const int n = dim();
  std::vector<Vec> ab, bb;
  for (int i = 0; i < n; ++i) {
    ab.push_back(alpha_.apply(Vec::basis(n, i)));
    bb.push_back(beta_.apply(Vec::basis(n, i)));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Vec r = ev2(bracket_, bb[static_cast<std::size_t>(i)], ab[static_cast<std::size_t>(j)]);
      r += ev2(bracket_, bb[static_cast<std::size_t>(j)], ab[static_cast<std::size_t>(i)]);
      if (!r.is_zero())
        throw InvalidStructure("bracket is not BiHom-skew-symmetric at (e_" +
                               std::to_string(i) + ", e_" + std::to_string(j) + ")");
    }

  regular_ = alpha_.invertible() && beta_.invertible();
  multiplicative_ = endo_witness(bracket_, alpha_).empty() &&
                    endo_witness(bracket_, beta_).empty() &&
                    endo_witness(triple_, alpha_).empty() &&
                    endo_witness(triple_, beta_).empty();
}

BiHomAlgebra yau_twist(const MultilinearMap& mu, const LinearMap& alpha,
                       const LinearMap& beta) {
  if (mu.arity() != 2) throw BadParameter("yau twist needs a bilinear product");
  require_square_match(mu, alpha, "alpha");
  require_square_match(mu, beta, "beta");
  if (!alpha.commutes_with(beta)) throw NotCommuting("twisting maps do not commute");

  const int n = mu.dim();
  MultilinearMap twisted = MultilinearMap::from_basis_fn(n, 2, [&](const std::vector<int>& t) {
    return ev2(mu, alpha.apply(Vec::basis(n, t[0])), beta.apply(Vec::basis(n, t[1])));
  });
  return BiHomAlgebra(std::move(twisted), alpha, beta);
}

MultilinearMap bihom_associator(const BiHomAlgebra& a) {
  const int n = a.dim();
  const MultilinearMap& mu = a.mu();
  return MultilinearMap::from_basis_fn(n, 3, [&](const std::vector<int>& t) {
    const Vec x = Vec::basis(n, t[0]), y = Vec::basis(n, t[1]), z = Vec::basis(n, t[2]);
    return ev2(mu, ev2(mu, x, y), a.beta().apply(z)) -
           ev2(mu, a.alpha().apply(x), ev2(mu, y, z));
  });
}

MultilinearMap bihom_commutator(const BiHomAlgebra& a) {
  if (!a.regular()) throw NotRegular("the commutator needs invertible alpha and beta");
  const int n = a.dim();
  const LinearMap ainv_b = a.alpha().inverse().compose(a.beta());
  const LinearMap a_binv = a.alpha().compose(a.beta().inverse());
  return MultilinearMap::from_basis_fn(n, 2, [&](const std::vector<int>& t) {
    const Vec x = Vec::basis(n, t[0]), y = Vec::basis(n, t[1]);
    return ev2(a.mu(), x, y) - ev2(a.mu(), ainv_b.apply(y), a_binv.apply(x));
  });
}

BiHomAlgebra commutator_algebra(const BiHomAlgebra& a) {
  return BiHomAlgebra(bihom_commutator(a), a.alpha(), a.beta());
}

BiHomAkivisAlgebra associated_akivis(const BiHomAlgebra& a) {
  if (!a.regular()) throw NotRegular("the associated Akivis algebra needs a regular algebra");
  if (!a.multiplicative())
    throw NotMultiplicative("the associated Akivis algebra needs multiplicative maps");
  const int n = a.dim();
  MultilinearMap bracket = bihom_commutator(a);
  const MultilinearMap as = bihom_associator(a);
  const LinearMap pre = a.alpha().inverse().compose(a.beta().power(2));
  MultilinearMap triple = MultilinearMap::from_basis_fn(n, 3, [&](const std::vector<int>& t) {
    return ev3(as, pre.apply(Vec::basis(n, t[0])), a.beta().apply(Vec::basis(n, t[1])),
               a.alpha().apply(Vec::basis(n, t[2])));
  });
  return BiHomAkivisAlgebra(std::move(bracket), std::move(triple), a.alpha(), a.beta());
}

BiHomAkivisAlgebra akivis_to_bihom(const AkivisAlgebra& k, const LinearMap& alpha,
                                   const LinearMap& beta) {
  require_square_match(k.bracket(), alpha, "alpha");
  require_square_match(k.bracket(), beta, "beta");
  if (!alpha.commutes_with(beta)) throw NotCommuting("twisting maps do not commute");
  for (const auto& [name, f] : {std::pair<const char*, const LinearMap*>{"alpha", &alpha},
                                {"beta", &beta}}) {
    if (!endo_witness(k.bracket(), *f).empty())
      throw NotEndomorphism(std::string(name) + " is not an endomorphism of the bracket");
    if (!endo_witness(k.triple(), *f).empty())
      throw NotEndomorphism(std::string(name) + " is not an endomorphism of the triple product");
  }

  const int n = k.dim();
  MultilinearMap bracket = MultilinearMap::from_basis_fn(n, 2, [&](const std::vector<int>& t) {
    return ev2(k.bracket(), alpha.apply(Vec::basis(n, t[0])), beta.apply(Vec::basis(n, t[1])));
  });
  const LinearMap post = alpha.compose(beta.power(2));
  MultilinearMap triple = MultilinearMap::from_basis_fn(n, 3, [&](const std::vector<int>& t) {
    if (const Vec* img = k.triple().basis_image(t)) return post.apply(*img);
    return Vec(n);
  });
  return BiHomAkivisAlgebra(std::move(bracket), std::move(triple), alpha, beta);
}

BiHomAkivisAlgebra twist_bihom_akivis(const BiHomAkivisAlgebra& k, const LinearMap& phi,
                                      const LinearMap& psi) {
  require_square_match(k.bracket(), phi, "phi");
  require_square_match(k.bracket(), psi, "psi");
  if (!phi.commutes_with(psi)) throw NotCommuting("phi and psi do not commute");
  for (const auto& [name, f] : {std::pair<const char*, const LinearMap*>{"phi", &phi},
                                {"psi", &psi}}) {
    if (!f->commutes_with(k.alpha()))
      throw NotMorphism(std::string(name) + " does not commute with alpha");
    if (!f->commutes_with(k.beta()))
      throw NotMorphism(std::string(name) + " does not commute with beta");
    if (!endo_witness(k.bracket(), *f).empty())
      throw NotMorphism(std::string(name) + " does not preserve the bracket");
    if (!endo_witness(k.triple(), *f).empty())
      throw NotMorphism(std::string(name) + " does not preserve the triple product");
  }

  const int n = k.dim();
  MultilinearMap bracket = MultilinearMap::from_basis_fn(n, 2, [&](const std::vector<int>& t) {
    return ev2(k.bracket(), phi.apply(Vec::basis(n, t[0])), psi.apply(Vec::basis(n, t[1])));
  });
  const LinearMap post = phi.compose(psi.power(2));
  MultilinearMap triple = MultilinearMap::from_basis_fn(n, 3, [&](const std::vector<int>& t) {
    if (const Vec* img = k.triple().basis_image(t)) return post.apply(*img);
    return Vec(n);
  });
  return BiHomAkivisAlgebra(std::move(bracket), std::move(triple), phi.compose(k.alpha()),
                            psi.compose(k.beta()));
}

MultilinearMap bihom_jacobiator(const MultilinearMap& bracket, const LinearMap& alpha,
                                const LinearMap& beta) {
  if (bracket.arity() != 2) throw BadParameter("jacobiator needs a bilinear bracket");
  require_square_match(bracket, alpha, "alpha");
  require_square_match(bracket, beta, "beta");
  const int n = bracket.dim();
  const LinearMap beta2 = beta.power(2);
  const auto term = [&](const Vec& x, const Vec& y, const Vec& z) {
    return ev2(bracket, beta2.apply(x), ev2(bracket, beta.apply(y), alpha.apply(z)));
  };
  return MultilinearMap::from_basis_fn(n, 3, [&](const std::vector<int>& t) {
    const Vec x = Vec::basis(n, t[0]), y = Vec::basis(n, t[1]), z = Vec::basis(n, t[2]);
    return term(x, y, z) + term(y, z, x) + term(z, x, y);
  });
}

MultilinearMap bruck_kleinfeld(const BiHomAlgebra& a) {
  if (!a.regular()) throw NotRegular("the Bruck-Kleinfeld function needs a regular algebra");
  const int n = a.dim();
  const MultilinearMap as = bihom_associator(a);
  const MultilinearMap& mu = a.mu();
  const LinearMap &al = a.alpha(), &be = a.beta();
  const LinearMap b2 = be.power(2), ab = al.compose(be), a2b = al.power(2).compose(be),
                  a3 = al.power(3), a3b = a3.compose(be), a2b2 = al.power(2).compose(b2),
                  a3binv = a3.compose(be.inverse());
  return MultilinearMap::from_basis_fn(n, 4, [&](const std::vector<int>& t) {
    const Vec w = Vec::basis(n, t[0]), x = Vec::basis(n, t[1]), y = Vec::basis(n, t[2]),
              z = Vec::basis(n, t[3]);
    Vec r = ev3(as, ev2(mu, b2.apply(w), ab.apply(x)), a2b.apply(y), a3.apply(z));
    r -= ev2(mu, ev3(as, b2.apply(x), ab.apply(y), al.power(2).apply(z)), a3b.apply(w));
    r -= ev2(mu, a2b2.apply(x), ev3(as, ab.apply(w), al.power(2).apply(y), a3binv.apply(z)));
    return r;
  });
}

}  // namespace bihom
