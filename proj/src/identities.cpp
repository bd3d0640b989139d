#include "bihom/identities.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>

namespace bihom {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "unknown";
}

namespace {

Vec ev2(const MultilinearMap& m, const Vec& x, const Vec& y) {
  const std::array<Vec, 2> a{x, y};
  return m.eval(a);
}
Vec ev3(const MultilinearMap& m, const Vec& x, const Vec& y, const Vec& z) {
  const std::array<Vec, 3> a{x, y, z};
  return m.eval(a);
}
Vec ev4(const MultilinearMap& m, const Vec& w, const Vec& x, const Vec& y, const Vec& z) {
  const std::array<Vec, 4> a{w, x, y, z};
  return m.eval(a);
}

enum class Code {
  I1, I2, I3, I4, I5, I6, I7, I8, I9, I10, I11, I12, I13, I14, I15, I16, I17,
  I18, I19, I20, I21L, I21R, I21F,
};

struct Row {
  Code code;
  const char* id;
  const char* name;
};

constexpr Row kRows[] = {
    {Code::I1, "I1", "akivis"},
    {Code::I2, "I2", "bihom-associative"},
    {Code::I3, "I3", "left-bihom-alternative"},
    {Code::I4, "I4", "right-bihom-alternative"},
    {Code::I5, "I5", "bihom-flexible"},
    {Code::I6, "I6", "bihom-skew-symmetry"},
    {Code::I7, "I7", "bihom-jacobi"},
    {Code::I8, "I8", "bihom-malcev"},
    {Code::I9, "I9", "bihom-akivis"},
    {Code::I10, "I10", "akivis-flexible"},
    {Code::I11, "I11", "akivis-left-alternative"},
    {Code::I12, "I12", "akivis-right-alternative"},
    {Code::I13, "I13", "alternating-composite"},
    {Code::I14, "I14", "bk-alternating"},
    {Code::I15, "I15", "bk-exchange-right"},
    {Code::I16, "I16", "bk-exchange-left"},
    {Code::I17, "I17", "bk-exchange-bracket"},
    {Code::I18, "I18", "six-associator"},
    {Code::I19, "I19", "cyclic-triple-zero"},
    {Code::I20, "I20", "multiplicativity"},
    {Code::I21L, "I21L", "short-left-alternative"},
    {Code::I21R, "I21R", "short-right-alternative"},
    {Code::I21F, "I21F", "short-flexible"},
};

const Row* row_for(const std::string& key) {
  for (const auto& r : kRows)
    if (key == r.id || key == r.name) return &r;
  return nullptr;
}

const Row& row_of(Code code) {
  for (const auto& r : kRows)
    if (r.code == code) return r;
  throw Error("registry row missing");
}

constexpr Code kBiHomCodes[] = {Code::I2,  Code::I3,  Code::I4,  Code::I5,
                                Code::I6,  Code::I7,  Code::I8,  Code::I13,
                                Code::I14, Code::I15, Code::I16, Code::I17,
                                Code::I20, Code::I21L, Code::I21R, Code::I21F};
constexpr Code kAkivisCodes[] = {Code::I1,  Code::I6,  Code::I7,  Code::I8, Code::I10,
                                 Code::I11, Code::I12, Code::I18, Code::I19};
constexpr Code kBiHomAkivisCodes[] = {Code::I6,  Code::I7,  Code::I8,  Code::I9, Code::I10,
                                      Code::I11, Code::I12, Code::I18, Code::I19, Code::I20};

template <std::size_t N>
bool in_list(Code code, const Code (&list)[N]) {
  for (Code c : list)
    if (c == code) return true;
  return false;
}

bool needs_regular(Code code) {
  return code == Code::I14 || code == Code::I15 || code == Code::I16 || code == Code::I17;
}

// Shared evaluation context; owns copies of everything the evaluators touch
// so raw_identity closures stay valid on their own.
struct Ctx {
  std::string kind;
  int dim = 0;
  bool regular = false;
  bool multiplicative = false;

  std::optional<BiHomAlgebra> A;                 // bihom kind only
  std::optional<MultilinearMap> bracket_s, triple_s;  // akivis kinds
  LinearMap alpha, beta;

  std::optional<MultilinearMap> as_, comm_, bk_;
  std::map<std::pair<int, int>, LinearMap> pcache;

  const MultilinearMap& bra() const { return A ? A->mu() : *bracket_s; }
  const MultilinearMap& trip() const { return *triple_s; }

  const MultilinearMap& as() {
    if (!as_) as_ = bihom_associator(*A);
    return *as_;
  }
  const MultilinearMap& comm() {
    if (!comm_) comm_ = bihom_commutator(*A);
    return *comm_;
  }
  const MultilinearMap& bk() {
    if (!bk_) bk_ = bruck_kleinfeld(*A);
    return *bk_;
  }

  const LinearMap& P(int i, int j) {
    const auto key = std::make_pair(i, j);
    auto it = pcache.find(key);
    if (it == pcache.end())
      it = pcache.emplace(key, alpha.power(i).compose(beta.power(j))).first;
    return it->second;
  }
  Vec ap(int i, int j, const Vec& v) { return P(i, j).apply(v); }

  Vec mu(const Vec& x, const Vec& y) const { return ev2(A->mu(), x, y); }
  Vec br(const Vec& x, const Vec& y) const { return ev2(bra(), x, y); }
  Vec tr(const Vec& x, const Vec& y, const Vec& z) const { return ev3(trip(), x, y, z); }

  /// Cyclic sum of [beta^2(x), [beta(y), alpha(z)]].
  Vec jac(const Vec& x, const Vec& y, const Vec& z) {
    Vec r = br(ap(0, 2, x), br(ap(0, 1, y), ap(1, 0, z)));
    r += br(ap(0, 2, y), br(ap(0, 1, z), ap(1, 0, x)));
    r += br(ap(0, 2, z), br(ap(0, 1, x), ap(1, 0, y)));
    return r;
  }
};

std::shared_ptr<Ctx> make_ctx(const BiHomAlgebra& a) {
  auto c = std::make_shared<Ctx>();
  c->kind = "bihom-algebra";
  c->dim = a.dim();
  c->regular = a.regular();
  c->multiplicative = a.multiplicative();
  c->A = a;
  c->alpha = a.alpha();
  c->beta = a.beta();
  return c;
}

std::shared_ptr<Ctx> make_ctx(const AkivisAlgebra& k) {
  auto c = std::make_shared<Ctx>();
  c->kind = "akivis-algebra";
  c->dim = k.dim();
  c->regular = true;   // identity maps
  c->multiplicative = true;
  c->bracket_s = k.bracket();
  c->triple_s = k.triple();
  c->alpha = LinearMap::identity(k.dim());
  c->beta = LinearMap::identity(k.dim());
  return c;
}

std::shared_ptr<Ctx> make_ctx(const BiHomAkivisAlgebra& k) {
  auto c = std::make_shared<Ctx>();
  c->kind = "bihom-akivis-algebra";
  c->dim = k.dim();
  c->regular = k.regular();
  c->multiplicative = k.multiplicative();
  c->bracket_s = k.bracket();
  c->triple_s = k.triple();
  c->alpha = k.alpha();
  c->beta = k.beta();
  return c;
}

std::string na_reason(const Ctx& c, Code code) {
  const bool bihom = c.kind == "bihom-algebra";
  const bool plain_akivis = c.kind == "akivis-algebra";
  const bool applicable = bihom ? in_list(code, kBiHomCodes)
                          : plain_akivis ? in_list(code, kAkivisCodes)
                                         : in_list(code, kBiHomAkivisCodes);
  if (!applicable) {
    if (bihom) return "structure has no trilinear product";
    if (code == Code::I1) return "applies to untwisted Akivis algebras; use I9";
    if (code == Code::I9) return "applies to twisted structures; use I1";
    if (code == Code::I20) return "structure has no twisting maps";
    return "identity is about the algebra product, not a bracket/triple structure";
  }
  if (needs_regular(code) && !c.regular) return "requires regular twisting maps";
  return "";
}

struct Polarized {
  std::vector<int> mult;
  std::function<Vec(const std::vector<Vec>&)> occ;
};

std::optional<Polarized> build_polarized(Ctx* c, Code code) {
  using V = std::vector<Vec>;
  switch (code) {
    case Code::I1:
      // cyclic [x,[y,z]] equals the cyclic triple alternation; the inner
      // bracket placement makes the jacobiator the negative of the outer
      // [[x,y],z] form, hence the signs below
      return Polarized{{1, 1, 1}, [c](const V& o) {
        Vec r = c->br(o[0], c->br(o[1], o[2]));
        r += c->br(o[1], c->br(o[2], o[0]));
        r += c->br(o[2], c->br(o[0], o[1]));
        r += c->tr(o[0], o[1], o[2]);
        r += c->tr(o[1], o[2], o[0]);
        r += c->tr(o[2], o[0], o[1]);
        r -= c->tr(o[1], o[0], o[2]);
        r -= c->tr(o[2], o[1], o[0]);
        r -= c->tr(o[0], o[2], o[1]);
        return r;
      }};
    case Code::I2:
      return Polarized{{1, 1, 1},
                       [c](const V& o) { return ev3(c->as(), o[0], o[1], o[2]); }};
    case Code::I3:
      return Polarized{{1, 1, 1}, [c](const V& o) {
        return ev3(c->as(), c->ap(0, 1, o[0]), c->ap(1, 0, o[1]), o[2]) +
               ev3(c->as(), c->ap(0, 1, o[1]), c->ap(1, 0, o[0]), o[2]);
      }};
    case Code::I4:
      return Polarized{{1, 1, 1}, [c](const V& o) {
        return ev3(c->as(), o[0], c->ap(0, 1, o[1]), c->ap(1, 0, o[2])) +
               ev3(c->as(), o[0], c->ap(0, 1, o[2]), c->ap(1, 0, o[1]));
      }};
    case Code::I5:
      return Polarized{{1, 1, 1}, [c](const V& o) {
        return ev3(c->as(), c->ap(0, 2, o[0]), c->ap(1, 1, o[1]), c->ap(2, 0, o[2])) +
               ev3(c->as(), c->ap(0, 2, o[2]), c->ap(1, 1, o[1]), c->ap(2, 0, o[0]));
      }};
    case Code::I6:
      return Polarized{{1, 1}, [c](const V& o) {
        return c->br(c->ap(0, 1, o[0]), c->ap(1, 0, o[1])) +
               c->br(c->ap(0, 1, o[1]), c->ap(1, 0, o[0]));
      }};
    case Code::I7:
      return Polarized{{1, 1, 1}, [c](const V& o) { return c->jac(o[0], o[1], o[2]); }};
    case Code::I8:
      // J(ab x, ab y, [b x', a z]) - [J(b x, b y, b z), a^2 b^2 x']
      return Polarized{{2, 1, 1}, [c](const V& o) {
        const Vec &x1 = o[0], &x2 = o[1], &y = o[2], &z = o[3];
        Vec lhs = c->jac(c->ap(1, 1, x1), c->ap(1, 1, y),
                         c->br(c->ap(0, 1, x2), c->ap(1, 0, z)));
        Vec rhs = c->br(c->jac(c->ap(0, 1, x1), c->ap(0, 1, y), c->ap(0, 1, z)),
                        c->ap(2, 2, x2));
        return lhs - rhs;
      }};
    case Code::I9:
      return Polarized{{1, 1, 1}, [c](const V& o) {
        Vec r = c->jac(o[0], o[1], o[2]);
        r -= c->tr(o[0], o[1], o[2]);
        r -= c->tr(o[1], o[2], o[0]);
        r -= c->tr(o[2], o[0], o[1]);
        r += c->tr(o[1], o[0], o[2]);
        r += c->tr(o[2], o[1], o[0]);
        r += c->tr(o[0], o[2], o[1]);
        return r;
      }};
    case Code::I10:
      return Polarized{{1, 1, 1}, [c](const V& o) {
        return c->tr(c->ap(1, 0, o[0]), c->ap(1, 0, o[1]), c->ap(1, 0, o[2])) +
               c->tr(c->ap(1, 0, o[2]), c->ap(1, 0, o[1]), c->ap(1, 0, o[0]));
      }};
    case Code::I11:
      return Polarized{{1, 1, 1}, [c](const V& o) {
        return c->tr(c->ap(2, 0, o[0]), c->ap(2, 0, o[1]), c->ap(0, 1, o[2])) +
               c->tr(c->ap(2, 0, o[1]), c->ap(2, 0, o[0]), c->ap(0, 1, o[2]));
      }};
    case Code::I12:
      return Polarized{{1, 1, 1}, [c](const V& o) {
        return c->tr(c->ap(1, 0, o[0]), c->ap(0, 2, o[1]), c->ap(0, 2, o[2])) +
               c->tr(c->ap(1, 0, o[0]), c->ap(0, 2, o[2]), c->ap(0, 2, o[1]));
      }};
    case Code::I15:
      // as(b^3 x, ab^2 y, ab(x') a^2 z) - as(a^-1 b^3 x, b^2 y, ab z) a^2 b^2 x'
      return Polarized{{2, 1, 1}, [c](const V& o) {
        const Vec &x1 = o[0], &x2 = o[1], &y = o[2], &z = o[3];
        Vec lhs = ev3(c->as(), c->ap(0, 3, x1), c->ap(1, 2, y),
                      c->mu(c->ap(1, 1, x2), c->ap(2, 0, z)));
        Vec rhs = c->mu(ev3(c->as(), c->ap(-1, 3, x1), c->ap(0, 2, y), c->ap(1, 1, z)),
                        c->ap(2, 2, x2));
        return lhs - rhs;
      }};
    case Code::I16:
      // as(b^3 x, ab^2 y, ab(z) a^2 x') - ab^3(x) as(b^2 x', ab y, a^2 z)
      return Polarized{{2, 1, 1}, [c](const V& o) {
        const Vec &x1 = o[0], &x2 = o[1], &y = o[2], &z = o[3];
        Vec lhs = ev3(c->as(), c->ap(0, 3, x1), c->ap(1, 2, y),
                      c->mu(c->ap(1, 1, z), c->ap(2, 0, x2)));
        Vec rhs = c->mu(c->ap(1, 3, x1),
                        ev3(c->as(), c->ap(0, 2, x2), c->ap(1, 1, y), c->ap(2, 0, z)));
        return lhs - rhs;
      }};
    case Code::I17:
      // as(b^3 x, ab^2 y, [ab x', a^2 z]) - [as(a^-1 b^3 x, b^2 y, ab z), a^2 b^2 x']
      return Polarized{{2, 1, 1}, [c](const V& o) {
        const Vec &x1 = o[0], &x2 = o[1], &y = o[2], &z = o[3];
        Vec lhs = ev3(c->as(), c->ap(0, 3, x1), c->ap(1, 2, y),
                      ev2(c->comm(), c->ap(1, 1, x2), c->ap(2, 0, z)));
        Vec rhs = ev2(c->comm(),
                      ev3(c->as(), c->ap(-1, 3, x1), c->ap(0, 2, y), c->ap(1, 1, z)),
                      c->ap(2, 2, x2));
        return lhs - rhs;
      }};
    case Code::I18:
      return Polarized{{1, 1, 1}, [c](const V& o) {
        Vec r = c->jac(o[0], o[1], o[2]);
        r -= Rational(6) * c->tr(o[0], o[1], o[2]);
        return r;
      }};
    case Code::I19:
      return Polarized{{1, 1, 1}, [c](const V& o) {
        Vec r = c->tr(o[0], o[1], o[2]);
        r += c->tr(o[1], o[2], o[0]);
        r += c->tr(o[2], o[0], o[1]);
        return r;
      }};
    case Code::I21L:
      return Polarized{{2, 1}, [c](const V& o) {
        return ev3(c->as(), c->ap(0, 1, o[0]), c->ap(1, 0, o[1]), o[2]);
      }};
    case Code::I21R:
      return Polarized{{1, 2}, [c](const V& o) {
        return ev3(c->as(), o[0], c->ap(0, 1, o[1]), c->ap(1, 0, o[2]));
      }};
    case Code::I21F:
      return Polarized{{2, 1}, [c](const V& o) {
        return ev3(c->as(), c->ap(0, 2, o[0]), c->ap(1, 1, o[2]), c->ap(2, 0, o[1]));
      }};
    default:
      return std::nullopt;  // I13, I14, I20 run through dedicated checkers
  }
}

CheckReport run_polarized(const Row& row, int dim, const Polarized& p) {
  CheckReport rep;
  rep.id = row.id;
  rep.name = row.name;
  rep.verdict = Verdict::pass;

  const int nvars = static_cast<int>(p.mult.size());
  std::vector<int> offset(static_cast<std::size_t>(nvars), 0);
  int nslots = 0;
  for (int v = 0; v < nvars; ++v) {
    offset[static_cast<std::size_t>(v)] = nslots;
    nslots += p.mult[static_cast<std::size_t>(v)];
  }

  std::vector<std::vector<std::vector<int>>> perms(static_cast<std::size_t>(nvars));
  for (int v = 0; v < nvars; ++v) {
    std::vector<int> sigma(static_cast<std::size_t>(p.mult[static_cast<std::size_t>(v)]));
    for (std::size_t t = 0; t < sigma.size(); ++t) sigma[t] = static_cast<int>(t);
    do {
      perms[static_cast<std::size_t>(v)].push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }

  std::vector<Vec> basis;
  basis.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) basis.push_back(Vec::basis(dim, i));

  std::vector<int> idx(static_cast<std::size_t>(nslots), 0);
  std::vector<Vec> occ(static_cast<std::size_t>(nslots));
  do {
    Vec total(dim);
    std::vector<std::size_t> choice(static_cast<std::size_t>(nvars), 0);
    for (;;) {
      for (int v = 0; v < nvars; ++v) {
        const auto& sigma = perms[static_cast<std::size_t>(v)][choice[static_cast<std::size_t>(v)]];
        const int off = offset[static_cast<std::size_t>(v)];
        for (std::size_t t = 0; t < sigma.size(); ++t)
          occ[static_cast<std::size_t>(off) + t] =
              basis[static_cast<std::size_t>(idx[static_cast<std::size_t>(off + sigma[t])])];
      }
      total += p.occ(occ);
      int v = nvars - 1;
      for (; v >= 0; --v) {
        if (++choice[static_cast<std::size_t>(v)] < perms[static_cast<std::size_t>(v)].size())
          break;
        choice[static_cast<std::size_t>(v)] = 0;
      }
      if (v < 0) break;
    }
    if (!total.is_zero()) {
      rep.verdict = Verdict::fail;
      rep.witness = idx;
      rep.residual = total;
      return rep;
    }
  } while (next_tuple(idx, dim));
  return rep;
}

CheckReport report_na(const Row& row, std::string reason) {
  CheckReport rep;
  rep.id = row.id;
  rep.name = row.name;
  rep.verdict = Verdict::not_applicable;
  rep.notes = std::move(reason);
  return rep;
}

CheckReport check_multiplicativity(const Row& row, Ctx& c) {
  CheckReport rep;
  rep.id = row.id;
  rep.name = row.name;
  rep.verdict = Verdict::pass;

  std::vector<std::pair<std::string, const MultilinearMap*>> products;
  if (c.kind == "bihom-algebra") {
    products.emplace_back("mu", &c.A->mu());
  } else {
    products.emplace_back("bracket", &*c.bracket_s);
    products.emplace_back("triple", &*c.triple_s);
  }

  const int n = c.dim;
  for (const auto& [map_name, f] :
       {std::pair<std::string, const LinearMap*>{"alpha", &c.alpha}, {"beta", &c.beta}}) {
    std::vector<Vec> fb;
    for (int i = 0; i < n; ++i) fb.push_back(f->apply(Vec::basis(n, i)));
    for (const auto& [prod_name, m] : products) {
      std::vector<int> t(static_cast<std::size_t>(m->arity()), 0);
      do {
        Vec lhs(n);
        if (const Vec* img = m->basis_image(t)) lhs = f->apply(*img);
        std::vector<Vec> args;
        for (int i : t) args.push_back(fb[static_cast<std::size_t>(i)]);
        const Vec diff = lhs - m->eval(args);
        if (!diff.is_zero()) {
          rep.verdict = Verdict::fail;
          rep.witness = t;
          rep.residual = diff;
          rep.notes = map_name + " is not an endomorphism of " + prod_name;
          return rep;
        }
      } while (next_tuple(t, n));
    }
  }
  return rep;
}

CheckReport check_impl(const std::shared_ptr<Ctx>& c, const Row& row) {
  if (std::string reason = na_reason(*c, row.code); !reason.empty())
    return report_na(row, std::move(reason));
  switch (row.code) {
    case Code::I13:
      return check_alternating(c->as(), {c->P(0, 2), c->P(1, 1), c->P(2, 0)}, row.id, row.name);
    case Code::I14: {
      const LinearMap id = LinearMap::identity(c->dim);
      return check_alternating(c->bk(), {id, id, id, id}, row.id, row.name);
    }
    case Code::I20:
      return check_multiplicativity(row, *c);
    default:
      return run_polarized(row, c->dim, *build_polarized(c.get(), row.code));
  }
}

template <std::size_t N>
Classification classify_impl(const std::shared_ptr<Ctx>& c, const Code (&codes)[N],
                             bool has_maps) {
  Classification cls;
  cls.kind = c->kind;
  cls.dim = c->dim;
  cls.has_maps = has_maps;
  cls.regular = c->regular;
  cls.multiplicative = c->multiplicative;
  for (Code code : codes) cls.reports.push_back(check_impl(c, row_of(code)));
  return cls;
}

std::optional<RawIdentity> raw_impl(const std::shared_ptr<Ctx>& c, const Row& row) {
  if (!na_reason(*c, row.code).empty()) return std::nullopt;
  RawIdentity r;
  switch (row.code) {
    case Code::I13:
      r.kind = RawKind::alternating;
      r.nargs = 3;
      r.eval = [c](const std::vector<Vec>& v) {
        return ev3(c->as(), c->ap(0, 2, v[0]), c->ap(1, 1, v[1]), c->ap(2, 0, v[2]));
      };
      return r;
    case Code::I14:
      r.kind = RawKind::alternating;
      r.nargs = 4;
      r.eval = [c](const std::vector<Vec>& v) { return ev4(c->bk(), v[0], v[1], v[2], v[3]); };
      return r;
    case Code::I20: {
      r.kind = RawKind::multiplicativity;
      const bool bihom = c->kind == "bihom-algebra";
      r.nargs = bihom ? 2 : 3;
      r.eval = [c, bihom](const std::vector<Vec>& v) {
        const auto endo_diff = [&](const LinearMap& f, const MultilinearMap& m,
                                   std::span<const Vec> args) {
          std::vector<Vec> mapped;
          for (const Vec& a : args) mapped.push_back(f.apply(a));
          return f.apply(m.eval(args)) - m.eval(mapped);
        };
        const std::array<Vec, 2> pair{v[0], v[1]};
        if (bihom) {
          Vec d = endo_diff(c->alpha, c->A->mu(), pair);
          if (!d.is_zero()) return d;
          return endo_diff(c->beta, c->A->mu(), pair);
        }
        const std::array<Vec, 3> tripargs{v[0], v[1], v[2]};
        for (const LinearMap* f : {&c->alpha, &c->beta}) {
          Vec d = endo_diff(*f, *c->bracket_s, pair);
          if (!d.is_zero()) return d;
          d = endo_diff(*f, *c->triple_s, tripargs);
          if (!d.is_zero()) return d;
        }
        return Vec(c->dim);
      };
      return r;
    }
    default: {
      const Polarized p = *build_polarized(c.get(), row.code);
      r.kind = RawKind::residual;
      r.nargs = static_cast<int>(p.mult.size());
      r.eval = [c, p](const std::vector<Vec>& vars) {
        std::vector<Vec> occ;
        for (std::size_t v = 0; v < p.mult.size(); ++v)
          for (int t = 0; t < p.mult[v]; ++t) occ.push_back(vars[v]);
        return p.occ(occ);
      };
      return r;
    }
  }
}

const Row& row_or_throw(const std::string& identity) {
  const Row* row = row_for(identity);
  if (!row) throw UnknownIdentity("unknown identity '" + identity + "'");
  return *row;
}

}  // namespace

const std::vector<IdentityInfo>& identity_registry() {
  static const std::vector<IdentityInfo> reg = [] {
    std::vector<IdentityInfo> v;
    for (const auto& r : kRows) v.push_back({r.id, r.name});
    return v;
  }();
  return reg;
}

const IdentityInfo* find_identity(const std::string& id_or_name) {
  const Row* row = row_for(id_or_name);
  if (!row) return nullptr;
  for (const auto& info : identity_registry())
    if (info.id == row->id) return &info;
  return nullptr;
}

std::vector<std::string> identities_for_kind(const std::string& kind) {
  std::vector<std::string> out;
  const auto collect = [&out](const Code* begin, const Code* end) {
    for (const Code* c = begin; c != end; ++c) out.push_back(row_of(*c).id);
  };
  if (kind == "bihom-algebra") collect(std::begin(kBiHomCodes), std::end(kBiHomCodes));
  else if (kind == "akivis-algebra") collect(std::begin(kAkivisCodes), std::end(kAkivisCodes));
  else if (kind == "bihom-akivis-algebra")
    collect(std::begin(kBiHomAkivisCodes), std::end(kBiHomAkivisCodes));
  else
    throw BadParameter("unknown structure kind '" + kind + "'");
  return out;
}

CheckReport check(const BiHomAlgebra& a, const std::string& identity) {
  return check_impl(make_ctx(a), row_or_throw(identity));
}
CheckReport check(const AkivisAlgebra& a, const std::string& identity) {
  return check_impl(make_ctx(a), row_or_throw(identity));
}
CheckReport check(const BiHomAkivisAlgebra& a, const std::string& identity) {
  return check_impl(make_ctx(a), row_or_throw(identity));
}

CheckReport check_alternating(const MultilinearMap& m, const std::vector<LinearMap>& slot_maps,
                              const std::string& id, const std::string& name) {
  const int k = m.arity();
  const int n = m.dim();
  if (static_cast<int>(slot_maps.size()) != k)
    throw DimensionMismatch("one precomposed map per slot required");
  for (const LinearMap& f : slot_maps)
    if (f.dim() != n) throw DimensionMismatch("slot map dimension mismatch");

  std::vector<std::vector<Vec>> mapped(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t)
    for (int i = 0; i < n; ++i)
      mapped[static_cast<std::size_t>(t)].push_back(slot_maps[static_cast<std::size_t>(t)].apply(Vec::basis(n, i)));

  const MultilinearMap g = MultilinearMap::from_basis_fn(n, k, [&](const std::vector<int>& t) {
    std::vector<Vec> args;
    for (int s = 0; s < k; ++s)
      args.push_back(mapped[static_cast<std::size_t>(s)][static_cast<std::size_t>(t[static_cast<std::size_t>(s)])]);
    return m.eval(args);
  });

  CheckReport rep;
  rep.id = id;
  rep.name = name;
  rep.verdict = Verdict::pass;

  std::vector<int> t(static_cast<std::size_t>(k), 0);
  do {
    bool repeated = false;
    for (int p = 0; p < k && !repeated; ++p)
      for (int q = p + 1; q < k && !repeated; ++q)
        repeated = t[static_cast<std::size_t>(p)] == t[static_cast<std::size_t>(q)];
    const Vec* v = g.basis_image(t);
    if (repeated && v) {
      rep.verdict = Verdict::fail;
      rep.witness = t;
      rep.residual = *v;
      rep.notes = "nonzero value on a repeated argument";
      return rep;
    }
    for (int p = 0; p + 1 < k; ++p) {
      std::vector<int> s = t;
      std::swap(s[static_cast<std::size_t>(p)], s[static_cast<std::size_t>(p + 1)]);
      Vec r = v ? *v : Vec(n);
      if (const Vec* w = g.basis_image(s)) r += *w;
      if (!r.is_zero()) {
        rep.verdict = Verdict::fail;
        rep.witness = t;
        rep.residual = r;
        rep.notes = "not antisymmetric under swapping slots " + std::to_string(p) + " and " +
                    std::to_string(p + 1);
        return rep;
      }
    }
  } while (next_tuple(t, n));
  return rep;
}

namespace {

// f(m_src(e_t...)) == m_dst(f(e_t)...) on every basis tuple.
bool product_intertwined(const LinearMap& f, const MultilinearMap& src,
                         const MultilinearMap& dst, std::vector<int>& witness, Vec& residual) {
  const int n = src.dim();
  std::vector<Vec> fb;
  for (int i = 0; i < n; ++i) fb.push_back(f.apply(Vec::basis(n, i)));
  std::vector<int> t(static_cast<std::size_t>(src.arity()), 0);
  do {
    Vec lhs(n);
    if (const Vec* img = src.basis_image(t)) lhs = f.apply(*img);
    std::vector<Vec> args;
    for (int i : t) args.push_back(fb[static_cast<std::size_t>(i)]);
    const Vec diff = lhs - dst.eval(args);
    if (!diff.is_zero()) {
      witness = t;
      residual = diff;
      return false;
    }
  } while (next_tuple(t, n));
  return true;
}

bool map_intertwined(const LinearMap& f, const LinearMap& src_map, const LinearMap& dst_map,
                     std::vector<int>& witness, Vec& residual) {
  const LinearMap lhs = f.compose(src_map), rhs = dst_map.compose(f);
  for (int col = 0; col < f.dim(); ++col) {
    const Vec diff = lhs.column(col) - rhs.column(col);
    if (!diff.is_zero()) {
      witness = {col};
      residual = diff;
      return false;
    }
  }
  return true;
}

struct MorphismPart {
  std::string what;
  std::function<bool(std::vector<int>&, Vec&)> run;
};

CheckReport run_morphism(const std::vector<MorphismPart>& parts) {
  CheckReport rep;
  rep.id = "morphism";
  rep.name = "morphism";
  rep.verdict = Verdict::pass;
  for (const auto& part : parts) {
    std::vector<int> w;
    Vec res;
    if (!part.run(w, res)) {
      rep.verdict = Verdict::fail;
      rep.witness = w;
      rep.residual = res;
      rep.notes = part.what;
      return rep;
    }
  }
  return rep;
}

}  // namespace

CheckReport check_morphism(const LinearMap& f, const BiHomAlgebra& src, const BiHomAlgebra& dst) {
  if (f.dim() != src.dim() || src.dim() != dst.dim())
    throw DimensionMismatch("morphism dimensions differ");
  return run_morphism({
      {"f does not intertwine alpha",
       [&](auto& w, auto& r) { return map_intertwined(f, src.alpha(), dst.alpha(), w, r); }},
      {"f does not intertwine beta",
       [&](auto& w, auto& r) { return map_intertwined(f, src.beta(), dst.beta(), w, r); }},
      {"f does not preserve the product",
       [&](auto& w, auto& r) { return product_intertwined(f, src.mu(), dst.mu(), w, r); }},
  });
}

CheckReport check_morphism(const LinearMap& f, const AkivisAlgebra& src,
                           const AkivisAlgebra& dst) {
  if (f.dim() != src.dim() || src.dim() != dst.dim())
    throw DimensionMismatch("morphism dimensions differ");
  return run_morphism({
      {"f does not preserve the bracket",
       [&](auto& w, auto& r) { return product_intertwined(f, src.bracket(), dst.bracket(), w, r); }},
      {"f does not preserve the triple product",
       [&](auto& w, auto& r) { return product_intertwined(f, src.triple(), dst.triple(), w, r); }},
  });
}

CheckReport check_morphism(const LinearMap& f, const BiHomAkivisAlgebra& src,
                           const BiHomAkivisAlgebra& dst) {
  if (f.dim() != src.dim() || src.dim() != dst.dim())
    throw DimensionMismatch("morphism dimensions differ");
  return run_morphism({
      {"f does not intertwine alpha",
       [&](auto& w, auto& r) { return map_intertwined(f, src.alpha(), dst.alpha(), w, r); }},
      {"f does not intertwine beta",
       [&](auto& w, auto& r) { return map_intertwined(f, src.beta(), dst.beta(), w, r); }},
      {"f does not preserve the bracket",
       [&](auto& w, auto& r) { return product_intertwined(f, src.bracket(), dst.bracket(), w, r); }},
      {"f does not preserve the triple product",
       [&](auto& w, auto& r) { return product_intertwined(f, src.triple(), dst.triple(), w, r); }},
  });
}

const CheckReport* Classification::find(const std::string& id) const {
  const Row* row = row_for(id);
  if (!row) return nullptr;
  for (const auto& r : reports)
    if (r.id == row->id) return &r;
  return nullptr;
}

bool Classification::any_failed() const {
  for (const auto& r : reports)
    if (r.failed()) return true;
  return false;
}

std::vector<std::pair<std::string, bool>> Classification::derived_flags() const {
  std::vector<std::pair<std::string, bool>> out;
  const auto add = [&](const std::string& flag, std::initializer_list<const char*> ids) {
    bool all = true;
    for (const char* id : ids) {
      const CheckReport* r = find(id);
      if (!r || r->verdict == Verdict::not_applicable) return;
      all = all && r->passed();
    }
    out.emplace_back(flag, all);
  };
  if (kind == "bihom-algebra") {
    add("bihom-associative", {"I2"});
    add("left-bihom-alternative", {"I3"});
    add("right-bihom-alternative", {"I4"});
    add("bihom-alternative", {"I3", "I4"});
    add("bihom-flexible", {"I5"});
    add("bihom-lie", {"I6", "I7"});
    add("bihom-malcev", {"I6", "I8"});
  } else {
    if (kind == "akivis-algebra") add("akivis", {"I1"});
    else add("bihom-akivis", {"I9"});
    add("akivis-flexible", {"I10"});
    add("akivis-left-alternative", {"I11"});
    add("akivis-right-alternative", {"I12"});
    add("bihom-lie", {"I6", "I7"});
    add("bihom-malcev", {"I6", "I8"});
  }
  return out;
}

Classification classify(const BiHomAlgebra& a) {
  return classify_impl(make_ctx(a), kBiHomCodes, true);
}
Classification classify(const AkivisAlgebra& a) {
  return classify_impl(make_ctx(a), kAkivisCodes, false);
}
Classification classify(const BiHomAkivisAlgebra& a) {
  return classify_impl(make_ctx(a), kBiHomAkivisCodes, true);
}

namespace {

std::optional<bool> verdict_of(const Classification& c, const char* id) {
  const CheckReport* r = c.find(id);
  if (!r || r->verdict == Verdict::not_applicable) return std::nullopt;
  return r->passed();
}

// R6 and R8 make sense for every structure carrying a bracket.
void bracket_rules(const Classification& c, bool regular, std::vector<AuditViolation>& out) {
  const auto v = [&](const char* id) { return verdict_of(c, id); };
  const auto passes = [&](const char* id) { return v(id).value_or(false); };
  const auto fails = [&](const char* id) {
    const auto r = v(id);
    return r.has_value() && !*r;
  };
  if (passes("I6") && passes("I7") && fails("I8"))
    out.push_back({"R6", "a bihom-lie bracket must satisfy the bihom-malcev identity"});
  if (regular && passes("I10")) {
    const auto jacobi = v("I7"), cyc = v("I19");
    if (jacobi && cyc && *jacobi != *cyc)
      out.push_back({"R8",
                     "for a flexible structure with regular maps, the bihom-jacobi identity and "
                     "the vanishing cyclic triple sum must agree"});
  }
}

}  // namespace

std::vector<AuditViolation> audit(const Classification& c, const BiHomAlgebra& a) {
  std::vector<AuditViolation> out;
  const auto v = [&](const char* id) { return verdict_of(c, id); };
  const auto passes = [&](const char* id) { return v(id).value_or(false); };
  const auto fails = [&](const char* id) {
    const auto r = v(id);
    return r.has_value() && !*r;
  };
  const bool reg = a.regular();

  if (reg && passes("I3") && passes("I4") && fails("I5"))
    out.push_back({"R1", "a regular bihom-alternative algebra must be bihom-flexible"});
  if (reg && passes("I3") && passes("I5") && fails("I4"))
    out.push_back(
        {"R2", "a regular left bihom-alternative, bihom-flexible algebra must be right "
               "bihom-alternative"});
  if (reg && passes("I4") && passes("I5") && fails("I3"))
    out.push_back(
        {"R3", "a regular right bihom-alternative, bihom-flexible algebra must be left "
               "bihom-alternative"});
  if (passes("I2"))
    for (const char* id : {"I3", "I4", "I5"})
      if (fails(id))
        out.push_back({"R4", std::string("a bihom-associative algebra must satisfy ") + id +
                                 " (" + row_or_throw(id).name + ")"});
  if (reg) {
    const auto left = v("I3"), right = v("I4"), comp = v("I13");
    if (left && right && comp && ((*left && *right) != *comp))
      out.push_back({"R5",
                     "bihom-alternativity (I3 and I4) and the alternating composite (I13) must "
                     "agree on a regular algebra"});
  }

  bracket_rules(c, reg, out);

  std::optional<BiHomAkivisAlgebra> ak;
  const auto associate = [&]() -> const BiHomAkivisAlgebra& {
    if (!ak) ak = associated_akivis(a);
    return *ak;
  };

  if (reg && a.multiplicative()) {
    if (passes("I5") && !check(associate(), "I10").passed())
      out.push_back(
          {"R7", "the associated akivis structure of a bihom-flexible algebra must be "
                 "akivis-flexible (I10)"});
    if (passes("I3") && passes("I4"))
      for (const char* id : {"I11", "I12"})
        if (!check(associate(), id).passed())
          out.push_back({"R7", std::string("the associated akivis structure of a "
                                           "bihom-alternative algebra must satisfy ") +
                                   id});
  }

  if (reg && passes("I3") && passes("I4")) {
    for (const char* id : {"I14", "I15", "I16", "I17"})
      if (fails(id))
        out.push_back({"R9", std::string("a regular bihom-alternative algebra must satisfy ") +
                                 id + " (" + row_or_throw(id).name + ")"});
    const BiHomAlgebra bracket_alg = commutator_algebra(a);
    if (!check(bracket_alg, "I6").passed())
      out.push_back({"R9", "the commutator bracket of a regular bihom-alternative algebra must "
                           "be bihom-skew-symmetric"});
    if (!check(bracket_alg, "I8").passed())
      out.push_back({"R9", "the commutator bracket of a regular bihom-alternative algebra must "
                           "satisfy the bihom-malcev identity"});
    if (a.multiplicative() && !check(associate(), "I18").passed())
      out.push_back({"R9", "the associated akivis structure of a regular bihom-alternative "
                           "algebra must satisfy the six-associator identity"});
  }
  return out;
}

std::vector<AuditViolation> audit(const Classification& c, const AkivisAlgebra&) {
  std::vector<AuditViolation> out;
  bracket_rules(c, true, out);
  return out;
}

std::vector<AuditViolation> audit(const Classification& c, const BiHomAkivisAlgebra& a) {
  std::vector<AuditViolation> out;
  bracket_rules(c, a.regular(), out);
  return out;
}

std::optional<RawIdentity> raw_identity(const BiHomAlgebra& a, const std::string& identity) {
  return raw_impl(make_ctx(a), row_or_throw(identity));
}
std::optional<RawIdentity> raw_identity(const AkivisAlgebra& a, const std::string& identity) {
  return raw_impl(make_ctx(a), row_or_throw(identity));
}
std::optional<RawIdentity> raw_identity(const BiHomAkivisAlgebra& a,
                                        const std::string& identity) {
  return raw_impl(make_ctx(a), row_or_throw(identity));
}

}  // namespace bihom
