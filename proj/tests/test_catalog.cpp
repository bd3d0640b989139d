#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "bihom/catalog.hpp"
#include "bihom/identities.hpp"

using namespace bihom;

namespace {

Vec val2(const MultilinearMap& m, int i, int j) {
  const std::array<int, 2> t{i, j};
  const Vec* v = m.basis_image(t);
  return v ? *v : Vec(m.dim());
}

}  // namespace

TEST_CASE("lambda = 0 gives identity maps and the base product") {
  const BiHomAlgebra a = make_ex1(0);
  CHECK(a.alpha().is_identity());
  CHECK(a.beta().is_identity());
  CHECK(a.mu() == ex1_base_mu());
}

TEST_CASE("lambda = -1 is rejected") {
  CHECK_THROWS_AS(make_ex1(-1), BadParameter);
  CHECK_THROWS_AS(ex1_alpha(-1), BadParameter);
  CHECK_THROWS_AS(ex1_beta(-1), BadParameter);
}

TEST_CASE("beta_lambda is exactly the inverse of alpha_lambda") {
  for (const char* ls : {"1", "2", "-1/2", "5/3", "7"}) {
    const Rational lambda = Rational::parse(ls);
    CHECK(ex1_beta(lambda) == ex1_alpha(lambda).inverse());
  }
}

TEST_CASE("akivis2d is a valid Akivis algebra with skew completion") {
  const AkivisAlgebra k = make_akivis2d();  // construction runs both invariants
  CHECK(val2(k.bracket(), 0, 1) == Vec::basis(2, 0));
  CHECK(val2(k.bracket(), 1, 0) == -Vec::basis(2, 0));
  CHECK(check(k, "I1").passed());
}

TEST_CASE("r and s maps commute and are morphisms of akivis2d") {
  CHECK(make_r_map(0).is_identity());
  CHECK(make_r_map(1).commutes_with(make_s_map(2)));
  const AkivisAlgebra k = make_akivis2d();
  CHECK(check_morphism(make_r_map(1), k, k).passed());
  CHECK(check_morphism(make_s_map(Rational(-1, 2)), k, k).passed());
}

TEST_CASE("octonion table spot values") {
  const BiHomAlgebra o = make_octonions();
  CHECK(o.dim() == 8);
  // e0 is the unit
  for (int i = 0; i < 8; ++i) {
    CHECK(val2(o.mu(), 0, i) == Vec::basis(8, i));
    CHECK(val2(o.mu(), i, 0) == Vec::basis(8, i));
  }
  // imaginary units square to -1
  for (int i = 1; i < 8; ++i) CHECK(val2(o.mu(), i, i) == -Vec::basis(8, 0));
  // quaternion subalgebra: i j = k, and the doubling products i l = il
  CHECK(val2(o.mu(), 1, 2) == Vec::basis(8, 3));
  CHECK(val2(o.mu(), 2, 1) == -Vec::basis(8, 3));
  CHECK(val2(o.mu(), 1, 4) == Vec::basis(8, 5));
  CHECK(val2(o.mu(), 2, 4) == Vec::basis(8, 6));
  CHECK(val2(o.mu(), 3, 4) == Vec::basis(8, 7));
}

TEST_CASE("octonions are alternative but not associative") {
  const BiHomAlgebra o = make_octonions();
  CHECK(check(o, "I3").passed());
  CHECK(check(o, "I4").passed());
  CHECK(check(o, "I2").failed());
}

TEST_CASE("the involution is an automorphism of order two") {
  const LinearMap phi = octonion_involution();
  CHECK(phi.power(2).is_identity());
  for (int i = 0; i < 8; ++i) {
    const Vec img = phi.apply(Vec::basis(8, i));
    CHECK(img == (i < 4 ? Vec::basis(8, i) : -Vec::basis(8, i)));
  }
  const BiHomAlgebra o = make_octonions();
  CHECK(check_morphism(phi, o, o).passed());
}

TEST_CASE("cross product is a Lie bracket") {
  const BiHomAlgebra c = make_cross3();
  CHECK(check(c, "I6").passed());
  CHECK(check(c, "I7").passed());
}

TEST_CASE("the rotation is an automorphism of the cross product") {
  const LinearMap r = rot_z();
  CHECK(r.inverse() == rot_z_inv());
  // inverse equals transpose
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(rot_z_inv().at(i, j) == r.at(j, i));
  const BiHomAlgebra c = make_cross3();
  CHECK(check_morphism(r, c, c).passed());
}

TEST_CASE("twisting the cross product by the rotation pair is bihom-lie") {
  const BiHomAlgebra t = yau_twist(make_cross3().mu(), rot_z(), rot_z_inv());
  CHECK(t.regular());
  CHECK(t.multiplicative());
  CHECK(check(t, "I6").passed());
  CHECK(check(t, "I7").passed());
}

TEST_CASE("yau twist of the octonions by the involution is a regular multiplicative algebra") {
  const LinearMap phi = octonion_involution();
  const BiHomAlgebra t = yau_twist(make_octonions().mu(), phi, phi);
  CHECK(t.regular());
  CHECK(t.multiplicative());
}

TEST_CASE("catalog lookup validates names and parameters") {
  CHECK(find_catalog_entry("ex1") != nullptr);
  CHECK(find_catalog_entry("nope") == nullptr);
  CHECK_THROWS_AS(make_example("nope", {}), BadParameter);
  CHECK_THROWS_AS(make_example("ex1", {}), BadParameter);                      // missing lambda
  CHECK_THROWS_AS(make_example("ex1", {{"lambda", Rational(1)}, {"x", Rational(1)}}),
                  BadParameter);                                               // extra param
  CHECK_THROWS_AS(make_example("identity", {{"dim", Rational(1, 2)}}), BadParameter);
  const CatalogValue v = make_example("ex1", {{"lambda", Rational(1)}});
  CHECK(std::holds_alternative<BiHomAlgebra>(v));
  const CatalogValue m = make_example("rot-z", {});
  CHECK(std::holds_alternative<LinearMap>(m));
}
