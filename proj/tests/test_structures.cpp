#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "bihom/catalog.hpp"

using namespace bihom;

namespace {

Rational rat(const std::string& s) { return Rational::parse(s); }

// K[x]/(x^2): e0 = 1, e1 = x. Associative and commutative.
MultilinearMap dual_numbers_mu() {
  MultilinearMap mu(2, 2);
  const std::array<int, 2> t00{0, 0}, t01{0, 1}, t10{1, 0};
  mu.add_term(t00, 0, Rational(1));
  mu.add_term(t01, 1, Rational(1));
  mu.add_term(t10, 1, Rational(1));
  return mu;
}

LinearMap all_ones(int n) {
  LinearMap m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = Rational(1);
  return m;
}

const Vec* image2(const MultilinearMap& m, int i, int j) {
  const std::array<int, 2> t{i, j};
  return m.basis_image(t);
}

const Vec* image3(const MultilinearMap& m, int i, int j, int k) {
  const std::array<int, 3> t{i, j, k};
  return m.basis_image(t);
}

Vec val2(const MultilinearMap& m, int i, int j) {
  const Vec* v = image2(m, i, j);
  return v ? *v : Vec(m.dim());
}

Vec val3(const MultilinearMap& m, int i, int j, int k) {
  const Vec* v = image3(m, i, j, k);
  return v ? *v : Vec(m.dim());
}

}  // namespace

TEST_CASE("validate_bihom flags") {
  const BiHomAlgebra a = make_ex1(1);
  const ValidationReport good = a.validate();
  CHECK(good.commuting);
  CHECK(good.regular());
  CHECK(good.multiplicative);

  // identity maps: always commuting, regular, multiplicative
  const ValidationReport trivial =
      validate_bihom(ex1_base_mu(), LinearMap::identity(2), LinearMap::identity(2));
  CHECK(trivial.commuting);
  CHECK(trivial.regular());
  CHECK(trivial.multiplicative);

  // alpha_1 against the all-ones map: neither commuting nor regular
  const ValidationReport bad = validate_bihom(ex1_base_mu(), ex1_alpha(1), all_ones(2));
  CHECK(!bad.commuting);
  CHECK(bad.commuting_witness == 0);
  CHECK(!bad.beta_regular);
}

TEST_CASE("constructor rejects non-commuting maps") {
  CHECK_THROWS_AS(BiHomAlgebra(ex1_base_mu(), ex1_alpha(1), all_ones(2)), NotCommuting);
  CHECK_THROWS_AS(yau_twist(ex1_base_mu(), ex1_alpha(1), all_ones(2)), NotCommuting);
}

TEST_CASE("yau twist by identities is the original product") {
  const BiHomAlgebra t =
      yau_twist(ex1_base_mu(), LinearMap::identity(2), LinearMap::identity(2));
  CHECK(t.mu() == ex1_base_mu());
}

TEST_CASE("twisted family products are (lambda+1) e0") {
  for (const char* ls : {"1", "2", "-1/2", "5/3"}) {
    const Rational lambda = rat(ls);
    const BiHomAlgebra a = make_ex1(lambda);
    const Vec expected = (lambda + Rational(1)) * Vec::basis(2, 0);
    CHECK(val2(a.mu(), 0, 1) == expected);
    CHECK(val2(a.mu(), 1, 1) == expected);
    CHECK(image2(a.mu(), 0, 0) == nullptr);
    CHECK(image2(a.mu(), 1, 0) == nullptr);
    CHECK(a.regular());
    CHECK(a.multiplicative());
    CHECK(a.beta() == a.alpha().inverse());
  }
}

TEST_CASE("associator vanishes on an associative algebra") {
  const BiHomAlgebra a =
      BiHomAlgebra(dual_numbers_mu(), LinearMap::identity(2), LinearMap::identity(2));
  CHECK(bihom_associator(a).is_zero());
  // commutative product with identity maps: zero commutator
  CHECK(bihom_commutator(a).is_zero());
}

TEST_CASE("classical associator at identity maps") {
  // mu(mu(e0,e1),e1) = e0 while mu(e0, mu(e1,e1)) = 0
  const MultilinearMap as = bihom_associator(make_ex1_base());
  CHECK(val3(as, 0, 1, 1) == Vec::basis(2, 0));
}

TEST_CASE("twisted family associator value is the derived (lambda+1)^2") {
  for (const char* ls : {"1", "2", "-1/2", "5/3"}) {
    const Rational lambda = rat(ls);
    const MultilinearMap as = bihom_associator(make_ex1(lambda));
    const Rational c = (lambda + Rational(1)) * (lambda + Rational(1));
    CHECK(val3(as, 0, 1, 1) == c * Vec::basis(2, 0));
  }
}

TEST_CASE("commutator of the twisted family matches the closed forms") {
  for (const char* ls : {"1", "2", "-1/2", "5/3"}) {
    const Rational lambda = rat(ls);
    const Rational lp1 = lambda + Rational(1);
    const MultilinearMap br = bihom_commutator(make_ex1(lambda));
    const Vec e0 = Vec::basis(2, 0);
    CHECK(val2(br, 0, 1) == lp1 * e0);
    CHECK(val2(br, 1, 0) == -(Rational(1) / lp1) * e0);
    CHECK(val2(br, 1, 1) == ((lambda * lambda + Rational(2) * lambda) / lp1) * e0);
    CHECK(image2(br, 0, 0) == nullptr);
  }
}

TEST_CASE("commutator requires a regular algebra") {
  const BiHomAlgebra a(ex1_base_mu(), LinearMap::identity(2), all_ones(2));
  CHECK(!a.regular());
  CHECK_THROWS_AS(bihom_commutator(a), NotRegular);
  CHECK_THROWS_AS(associated_akivis(a), NotRegular);
  CHECK_THROWS_AS(bruck_kleinfeld(a), NotRegular);
}

TEST_CASE("associated akivis needs multiplicative maps") {
  LinearMap shear = LinearMap::identity(2);
  shear.at(0, 1) = Rational(1);
  const BiHomAlgebra a(ex1_base_mu(), shear, shear);
  CHECK(a.regular());
  CHECK(!a.multiplicative());
  CHECK_THROWS_AS(associated_akivis(a), NotMultiplicative);
}

TEST_CASE("associated akivis of the twisted family matches the closed forms") {
  for (const char* ls : {"1", "2", "-1/2", "5/3"}) {
    const Rational lambda = rat(ls);
    const Rational lp1 = lambda + Rational(1);
    const BiHomAkivisAlgebra k = associated_akivis(make_ex1(lambda));
    const Vec e0 = Vec::basis(2, 0);
    CHECK(val2(k.bracket(), 0, 1) == lp1 * e0);
    CHECK(val3(k.triple(), 0, 1, 1) == (Rational(1) / lp1) * e0);
    CHECK(val3(k.triple(), 1, 1, 1) == (Rational(1) / lp1) * e0);
    CHECK(image3(k.triple(), 0, 0, 0) == nullptr);
    CHECK(image3(k.triple(), 1, 0, 0) == nullptr);
    CHECK(k.multiplicative());
    CHECK(k.regular());
  }
}

TEST_CASE("associated akivis of an associative algebra has zero triple") {
  const BiHomAlgebra a(dual_numbers_mu(), LinearMap::identity(2), LinearMap::identity(2));
  const BiHomAkivisAlgebra k = associated_akivis(a);
  CHECK(k.triple().is_zero());
  CHECK(k.bracket().is_zero());  // commutative product
}

TEST_CASE("akivis twist matches the closed forms (r+1) and (r+1)(s+1)^2") {
  const AkivisAlgebra k = make_akivis2d();
  struct Case { const char* r; const char* s; };
  for (const Case cs : {Case{"1", "2"}, Case{"0", "0"}, Case{"2", "3"}, Case{"-1/2", "1"}}) {
    const Rational r = rat(cs.r), s = rat(cs.s);
    const BiHomAkivisAlgebra t = akivis_to_bihom(k, make_r_map(r), make_s_map(s));
    const Rational b = r + Rational(1);
    const Rational c = (r + Rational(1)) * (s + Rational(1)) * (s + Rational(1));
    const Vec e0 = Vec::basis(2, 0);
    CHECK(val2(t.bracket(), 0, 1) == b * e0);
    CHECK(val3(t.triple(), 0, 1, 1) == c * e0);
    CHECK(val3(t.triple(), 1, 1, 1) == c * e0);
    CHECK(t.multiplicative());
  }
  // r = s = 0 gives identity maps, so products coincide with the base
  const BiHomAkivisAlgebra same = akivis_to_bihom(k, make_r_map(0), make_s_map(0));
  CHECK(same.bracket() == k.bracket());
  CHECK(same.triple() == k.triple());
  CHECK(same.alpha().is_identity());
}

TEST_CASE("akivis twist rejects non-endomorphisms and non-commuting maps") {
  const AkivisAlgebra k = make_akivis2d();
  LinearMap swap(2);
  swap.at(0, 1) = Rational(1);
  swap.at(1, 0) = Rational(1);
  CHECK_THROWS_AS(akivis_to_bihom(k, swap, swap), NotEndomorphism);

  LinearMap diag(2);
  diag.at(0, 0) = Rational(1);
  diag.at(1, 1) = Rational(2);
  CHECK_THROWS_AS(akivis_to_bihom(k, swap, diag), NotCommuting);
}

TEST_CASE("self-morphism twist by identities keeps the structure") {
  const BiHomAkivisAlgebra k = associated_akivis(make_ex1(1));
  const LinearMap id = LinearMap::identity(2);
  const BiHomAkivisAlgebra t = twist_bihom_akivis(k, id, id);
  CHECK(t == k);
}

TEST_CASE("self-morphism twist rejects maps that are not morphisms") {
  const BiHomAkivisAlgebra k = associated_akivis(make_ex1(1));
  LinearMap swap(2);
  swap.at(0, 1) = Rational(1);
  swap.at(1, 0) = Rational(1);
  CHECK_THROWS_AS(twist_bihom_akivis(k, swap, swap), NotMorphism);
}

TEST_CASE("jacobiator vanishes for Lie brackets and zero brackets") {
  const BiHomAlgebra cross = make_cross3();
  CHECK(bihom_jacobiator(cross.mu(), cross.alpha(), cross.beta()).is_zero());
  const MultilinearMap zero(3, 2);
  CHECK(bihom_jacobiator(zero, rot_z(), rot_z_inv()).is_zero());
}

TEST_CASE("bruck-kleinfeld vanishes on an associative algebra") {
  const BiHomAlgebra a(dual_numbers_mu(), LinearMap::identity(2), LinearMap::identity(2));
  CHECK(bruck_kleinfeld(a).is_zero());
}

TEST_CASE("bruck-kleinfeld with identity maps agrees with its direct expansion") {
  const BiHomAlgebra oct = make_octonions();
  const MultilinearMap f = bruck_kleinfeld(oct);
  // independent oracle: f(w,x,y,z) = as(wx, y, z) - as(x,y,z) w - x as(w,y,z)
  // with as evaluated straight from the product table
  const auto mu2 = [&](const Vec& x, const Vec& y) {
    const std::array<Vec, 2> args{x, y};
    return oct.mu().eval(args);
  };
  const auto as_direct = [&](const Vec& x, const Vec& y, const Vec& z) {
    return mu2(mu2(x, y), z) - mu2(x, mu2(y, z));
  };
  const Vec w = Vec::basis(8, 1), x = Vec::basis(8, 2), y = Vec::basis(8, 3),
            z = Vec::basis(8, 4);
  const Vec expected =
      as_direct(mu2(w, x), y, z) - mu2(as_direct(x, y, z), w) - mu2(x, as_direct(w, y, z));
  const std::array<Vec, 4> args{w, x, y, z};
  CHECK(f.eval(args) == expected);
  CHECK(!f.is_zero());
}

TEST_CASE("dimension cap is enforced") {
  CHECK_THROWS_AS(BiHomAlgebra(MultilinearMap(17, 2), LinearMap::identity(17),
                               LinearMap::identity(17)),
                  BadParameter);
}
