#include "bihom/catalog.hpp"

#include <array>
#include <utility>

namespace bihom {

namespace {

// Basis product table with single-basis-element images: table[i][j] = (k, sign).
using SignTable = std::vector<std::vector<std::pair<int, int>>>;

// One Cayley-Dickson doubling step. conj_sign[k] is the sign of e_k under
// conjugation (realpart fixed, imaginary part negated).
void double_table(SignTable& t, std::vector<int>& conj_sign) {
  const int n = static_cast<int>(t.size());
  SignTable d(static_cast<std::size_t>(2 * n),
              std::vector<std::pair<int, int>>(static_cast<std::size_t>(2 * n)));
  const auto cj = [&](int i) { return conj_sign[static_cast<std::size_t>(i)]; };
  const auto prod = [&](int i, int j) { return t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      const bool hi_i = i >= n, hi_j = j >= n;
      const int a = hi_i ? i - n : i, b = hi_j ? j - n : j;
      std::pair<int, int> r;
      if (!hi_i && !hi_j) {
        // (a,0)(c,0) = (ac, 0)
        r = prod(a, b);
      } else if (!hi_i && hi_j) {
        // (a,0)(0,d) = (0, da)
        const auto [q, u] = prod(b, a);
        r = {q + n, u};
      } else if (hi_i && !hi_j) {
        // (0,b)(c,0) = (0, b conj(c))
        const auto [q, u] = prod(a, b);
        r = {q + n, u * cj(b)};
      } else {
        // (0,b)(0,d) = (-conj(d) b, 0)
        const auto [q, u] = prod(b, a);
        r = {q, -u * cj(b)};
      }
      d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r;
    }
  t = std::move(d);
  std::vector<int> cs(static_cast<std::size_t>(2 * n), -1);
  cs[0] = 1;
  conj_sign = std::move(cs);
}

SignTable octonion_table() {
  SignTable t{{{0, 1}}};  // the reals
  std::vector<int> conj{1};
  double_table(t, conj);  // complexes
  double_table(t, conj);  // quaternions
  double_table(t, conj);  // octonions
  return t;
}

MultilinearMap table_to_map(const SignTable& t) {
  const int n = static_cast<int>(t.size());
  MultilinearMap m(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto [k, s] = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const std::array<int, 2> in{i, j};
      m.add_term(in, k, Rational(s));
    }
  return m;
}

Rational req(const std::map<std::string, Rational>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw BadParameter("missing parameter '" + key + "'");
  return it->second;
}

void check_params(const CatalogEntry& e, const std::map<std::string, Rational>& params) {
  for (const auto& [k, v] : params) {
    (void)v;
    bool known = false;
    for (const auto& p : e.params) known = known || p == k;
    if (!known) throw BadParameter("unknown parameter '" + k + "' for example '" + e.name + "'");
  }
}

}  // namespace

MultilinearMap ex1_base_mu() {
  MultilinearMap mu(2, 2);
  const std::array<int, 2> a{0, 1}, b{1, 1};
  mu.add_term(a, 0, Rational(1));
  mu.add_term(b, 0, Rational(1));
  return mu;
}

BiHomAlgebra make_ex1_base() {
  return BiHomAlgebra(ex1_base_mu(), LinearMap::identity(2), LinearMap::identity(2));
}

LinearMap ex1_alpha(const Rational& lambda) {
  if (lambda == Rational(-1)) throw BadParameter("lambda = -1 is not admissible");
  LinearMap m(2);
  m.at(0, 0) = lambda + Rational(1);
  m.at(0, 1) = lambda;
  m.at(1, 1) = Rational(1);
  return m;
}

LinearMap ex1_beta(const Rational& lambda) {
  if (lambda == Rational(-1)) throw BadParameter("lambda = -1 is not admissible");
  LinearMap m(2);
  m.at(0, 0) = Rational(1) / (lambda + Rational(1));
  m.at(0, 1) = -lambda / (lambda + Rational(1));
  m.at(1, 1) = Rational(1);
  return m;
}

BiHomAlgebra make_ex1(const Rational& lambda) {
  return yau_twist(ex1_base_mu(), ex1_alpha(lambda), ex1_beta(lambda));
}

AkivisAlgebra make_akivis2d() {
  MultilinearMap bracket(2, 2);
  const std::array<int, 2> b01{0, 1}, b10{1, 0};
  bracket.add_term(b01, 0, Rational(1));
  bracket.add_term(b10, 0, Rational(-1));  // forced by skew-symmetry
  MultilinearMap triple(2, 3);
  const std::array<int, 3> t011{0, 1, 1}, t111{1, 1, 1};
  triple.add_term(t011, 0, Rational(1));
  triple.add_term(t111, 0, Rational(1));
  return AkivisAlgebra(std::move(bracket), std::move(triple));
}

LinearMap make_r_map(const Rational& r) {
  LinearMap m(2);
  m.at(0, 0) = r + Rational(1);
  m.at(0, 1) = r;
  m.at(1, 1) = Rational(1);
  return m;
}

LinearMap make_s_map(const Rational& s) { return make_r_map(s); }

BiHomAlgebra make_octonions() {
  return BiHomAlgebra(table_to_map(octonion_table()), LinearMap::identity(8),
                      LinearMap::identity(8));
}

LinearMap octonion_involution() {
  LinearMap m(8);
  for (int i = 0; i < 8; ++i) m.at(i, i) = Rational(i < 4 ? 1 : -1);
  return m;
}

BiHomAlgebra make_cross3() {
  MultilinearMap b(3, 2);
  const auto set = [&](int i, int j, int k) {
    const std::array<int, 2> ij{i, j}, ji{j, i};
    b.add_term(ij, k, Rational(1));
    b.add_term(ji, k, Rational(-1));
  };
  set(0, 1, 2);
  set(1, 2, 0);
  set(2, 0, 1);
  return BiHomAlgebra(std::move(b), LinearMap::identity(3), LinearMap::identity(3));
}

LinearMap rot_z() {
  LinearMap m(3);
  m.at(0, 0) = Rational(3, 5);
  m.at(1, 0) = Rational(4, 5);
  m.at(0, 1) = Rational(-4, 5);
  m.at(1, 1) = Rational(3, 5);
  m.at(2, 2) = Rational(1);
  return m;
}

LinearMap rot_z_inv() { return rot_z().inverse(); }

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"ex1", "bihom-algebra", {"lambda"},
       "two-dimensional twisted family (lambda != -1)",
       [](const auto& p) -> CatalogValue { return make_ex1(req(p, "lambda")); }},
      {"ex1-base", "bihom-algebra", {},
       "untwisted base of the two-dimensional family, identity maps",
       [](const auto&) -> CatalogValue { return make_ex1_base(); }},
      {"akivis2d", "akivis-algebra", {},
       "two-dimensional Akivis algebra",
       [](const auto&) -> CatalogValue { return make_akivis2d(); }},
      {"octonions", "bihom-algebra", {},
       "octonions by Cayley-Dickson doubling, identity maps",
       [](const auto&) -> CatalogValue { return make_octonions(); }},
      {"cross3", "bihom-algebra", {},
       "cross product on K^3, identity maps",
       [](const auto&) -> CatalogValue { return make_cross3(); }},
      {"ex1-alpha", "linear-map", {"lambda"},
       "alpha of the twisted family",
       [](const auto& p) -> CatalogValue { return ex1_alpha(req(p, "lambda")); }},
      {"ex1-beta", "linear-map", {"lambda"},
       "beta = alpha^-1 of the twisted family",
       [](const auto& p) -> CatalogValue { return ex1_beta(req(p, "lambda")); }},
      {"r-map", "linear-map", {"r"},
       "endomorphism family of akivis2d",
       [](const auto& p) -> CatalogValue { return make_r_map(req(p, "r")); }},
      {"s-map", "linear-map", {"s"},
       "second copy of the akivis2d endomorphism family",
       [](const auto& p) -> CatalogValue { return make_s_map(req(p, "s")); }},
      {"octonion-involution", "linear-map", {},
       "doubling automorphism of the octonions",
       [](const auto&) -> CatalogValue { return octonion_involution(); }},
      {"rot-z", "linear-map", {},
       "rational 3-4-5 rotation, an automorphism of cross3",
       [](const auto&) -> CatalogValue { return rot_z(); }},
      {"rot-z-inv", "linear-map", {},
       "inverse of rot-z",
       [](const auto&) -> CatalogValue { return rot_z_inv(); }},
      {"identity", "linear-map", {"dim"},
       "identity map of the given dimension",
       [](const auto& p) -> CatalogValue {
         const Rational d = req(p, "dim");
         if (d.den() != 1 || d < Rational(1) || d > Rational(kMaxDim))
           throw BadParameter("dim must be an integer between 1 and 16");
         return LinearMap::identity(static_cast<int>(d.num().get_si()));
       }},
  };
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

CatalogValue make_example(const std::string& name,
                          const std::map<std::string, Rational>& params) {
  const CatalogEntry* e = find_catalog_entry(name);
  if (!e) throw BadParameter("unknown example '" + name + "'");
  check_params(*e, params);
  return e->make(params);
}

}  // namespace bihom
