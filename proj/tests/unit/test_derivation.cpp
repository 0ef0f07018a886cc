#include "check.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "xmlift/catalog.hpp"
#include "xmlift/derivation.hpp"

using namespace xmlift;
using namespace xmlift::testing;

namespace {

std::size_t search_space(const CrossedModule& xm) {
  double s = 1;
  for (std::size_t i = 0; i < xm.B()->order(); ++i) s *= static_cast<double>(xm.A()->order());
  return s > 1e12 ? std::size_t{1} << 40 : static_cast<std::size_t>(s);
}

// (Z4, Z2 x Z2, a -> (a mod 2, 0)) over π1: X -> Z2.
Lifting klein_lifting() {
  XModPtr base = z4_mod2();
  GroupPtr k = catalog::klein();
  GroupHom phi = make_hom(base->A(), k, {0, 2, 0, 2});
  GroupHom pi1 = make_hom(k, base->B(), {0, 0, 1, 1});
  return make_lifting(base, phi, pi1);
}

}  // namespace

TEST_CASE("derivations of the Z4 fixture") {
  XModPtr xm = z4_mod2();
  DerivationSemigroup s = enumerate_derivations(xm);
  REQUIRE(s.elements.size() == 2);
  CHECK(s.elements[0].values() == std::vector<Elem>{0, 0});
  CHECK(s.elements[1].values() == std::vector<Elem>{0, 2});
  CHECK(oracle::derivations_by_brute_force(*xm).size() == 2);
  CHECK(s.units == std::vector<std::size_t>{0, 1});
  CHECK(s.product == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}});
}

TEST_CASE("trivial B has only the zero derivation") {
  XModPtr xm = klein_to_trivial();
  CHECK(enumerate_derivations(xm).elements.size() == 1);
}

TEST_CASE("pruned and exhaustive search agree with the oracle") {
  for (auto& [name, xm] : catalog_xmods()) {
    CAPTURE(name);
    auto pruned = crossed_homomorphisms(xm->action());
    CHECK(pruned == oracle::derivations_by_brute_force(*xm));
    if (search_space(*xm) <= kExhaustiveSearchLimit)
      CHECK(pruned == crossed_homomorphisms(xm->action(), {DerivationSearch::Exhaustive}));
  }
  XModPtr a3 = a3_in_s3();
  CHECK(enumerate_derivations(a3).elements.size() ==
        oracle::derivations_by_brute_force(*a3).size());
  expect_error([] { crossed_homomorphisms(automorphism_xmod(catalog::quaternion())->action(),
                                          {DerivationSearch::Exhaustive}); },
               ErrorCode::SizeBound);
  expect_error([] { crossed_homomorphisms(z4_mod2()->action(), {DerivationSearch::Pruned, 2}); },
               ErrorCode::SizeBound);
}

TEST_CASE("make_derivation") {
  XModPtr xm = z4_mod2();
  Derivation d = make_derivation(xm, {0, 2});
  CHECK(d.theta() == std::vector<Elem>{0, 3, 2, 1});
  CHECK(d.sigma() == std::vector<Elem>{0, 1});
  AlgebraError e = expect_error([&] { make_derivation(xm, {0, 1}); }, ErrorCode::NotDerivation);
  CHECK(e.witness() == std::vector<std::size_t>{1, 1});
  expect_error([&] { make_derivation(xm, {0}); }, ErrorCode::MalformedTable);
  expect_error([&] { make_derivation(xm, {0, 4}); }, ErrorCode::MalformedTable);
}

TEST_CASE("whitehead_compose") {
  XModPtr xm = z4_mod2();
  Derivation zero = zero_derivation(xm);
  Derivation d = make_derivation(xm, {0, 2});
  CHECK(whitehead_compose(d, zero) == d);
  CHECK(whitehead_compose(zero, d) == d);
  CHECK(whitehead_compose(d, d) == zero);
  expect_error([&] { whitehead_compose(d, zero_derivation(a3_in_s3())); }, ErrorCode::BaseMismatch);
  for (auto& [name, xm2] : catalog_xmods()) {
    CAPTURE(name);
    DerivationSemigroup s = enumerate_derivations(xm2);
    const std::size_t n = s.elements.size();
    REQUIRE(s.index_of(zero_derivation(xm2)).has_value());
    std::size_t z = *s.index_of(zero_derivation(xm2));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(s.product[i][z] == i);
      CHECK(s.product[z][i] == i);
      for (std::size_t j = 0; j < n; ++j) {
        const Derivation& p = s.elements[s.product[i][j]];
        for (Elem a = 0; a < xm2->A()->order(); ++a)
          CHECK(p.theta()[a] == s.elements[i].theta()[s.elements[j].theta()[a]]);
        for (std::size_t k = 0; k < n; ++k)
          CHECK(s.product[s.product[i][j]][k] == s.product[i][s.product[j][k]]);
      }
    }
  }
}

TEST_CASE("both circle-product formulas agree on every catalog crossed module") {
  for (auto& [name, xm] : catalog_xmods()) {
    CAPTURE(name);
    const FiniteGroup& a = *xm->A();
    auto ds = enumerate_derivations(xm).elements;
    for (auto& d1 : ds)
      for (auto& d2 : ds)
        for (Elem b = 0; b < xm->B()->order(); ++b)
          CHECK(a.op(d1(d2.sigma()[b]), d2(b)) == a.op(d1.theta()[d2(b)], d1(b)));
  }
}

TEST_CASE("is_regular") {
  XModPtr xm = z4_mod2();
  DerivationSemigroup s = enumerate_derivations(xm);
  RegularityCertificate z = is_regular(zero_derivation(xm), &s);
  CHECK(z.regular);
  CHECK(z.theta_bijective);
  CHECK(z.sigma_bijective);
  CHECK(z.semigroup_unit == true);
  RegularityCertificate d = is_regular(make_derivation(xm, {0, 2}));
  CHECK(d.regular);
  CHECK_FALSE(d.semigroup_unit.has_value());
  expect_error([&] { is_regular(zero_derivation(xm), nullptr, true); },
               ErrorCode::RequiresEnumeration);
  std::size_t non_regular = 0;
  for (auto& [name, xm2] : catalog_xmods()) {
    CAPTURE(name);
    DerivationSemigroup s2 = enumerate_derivations(xm2);
    for (std::size_t i = 0; i < s2.elements.size(); ++i) {
      RegularityCertificate c = is_regular(s2.elements[i], &s2);
      CHECK(c.theta_bijective == c.sigma_bijective);
      CHECK(c.semigroup_unit == c.theta_bijective);
      CHECK(c.regular == s2.is_unit(i));
      non_regular += !c.regular;
    }
  }
  CHECK(non_regular > 0);
}

TEST_CASE("lift_derivation") {
  XModPtr xm = z4_mod2();
  Lifting l = lifting_from_subgroup(xm, trivial_subgroup(xm->A()));
  CHECK(lift_derivation(zero_derivation(xm), l) == zero_derivation(l.lifted()));
  Derivation d = make_derivation(xm, {0, 2});
  Derivation up = lift_derivation(d, l);
  CHECK(up.values() == std::vector<Elem>{0, 2, 0, 2});
  CHECK(up.theta() == d.theta());
  CHECK(is_regular(up).regular);
  expect_error([&] { lift_derivation(d, identity_lifting(a3_in_s3())); }, ErrorCode::BaseMismatch);
}

TEST_CASE("find_sections") {
  GroupPtr z4 = catalog::cyclic(4), z2 = catalog::cyclic(2), s3 = catalog::symmetric(3);
  auto ids = find_sections(identity_hom(s3));
  REQUIRE(ids.size() == 1);
  CHECK(ids[0] == identity_hom(s3));
  CHECK(find_sections(mod2()).empty());
  CHECK(find_sections(klein_lifting().omega()).size() == 2);
  GroupHom sign = make_hom(s3, z2, {0, 1, 1, 0, 0, 1});
  CHECK(find_sections(sign).size() == 3);
  expect_error([&] { find_sections(identity_hom(catalog::cyclic(70))); }, ErrorCode::SizeBound);
}

TEST_CASE("descend_derivation") {
  XModPtr xm = z4_mod2();
  Lifting idl = identity_lifting(xm);
  for (auto& d : enumerate_derivations(xm).elements)
    CHECK(descend_derivation(lift_derivation(d, idl), idl, identity_hom(xm->B())) == d);

  Lifting kl = klein_lifting();
  auto sections = find_sections(kl.omega());
  REQUIRE(sections.size() == 2);
  CHECK(descend_derivation(zero_derivation(kl.lifted()), kl, sections[0]) == zero_derivation(xm));
  DerivationSemigroup base = enumerate_derivations(xm);
  DerivationSemigroup lifted = enumerate_derivations(kl.lifted());
  CHECK(lifted.elements.size() == 4);
  for (auto& s : sections)
    for (auto& d : base.elements) CHECK(descend_derivation(lift_derivation(d, kl), kl, s) == d);
  DerivationLiftMap map = lift_derivation_semigroup(base, kl, lifted);
  CHECK(map.injective);
  CHECK(map.multiplicative);
  CHECK(map.preserves_units);

  GroupHom bad = zero_hom(xm->B(), kl.X());
  AlgebraError e = expect_error([&] { descend_derivation(zero_derivation(kl.lifted()), kl, bad); },
                                ErrorCode::NotASection);
  CHECK(e.witness() == std::vector<std::size_t>{1});
}

TEST_CASE("derivation_to_endomorphism_morphism") {
  XModPtr xm = z4_mod2();
  EndomorphismPair z = derivation_to_endomorphism_morphism(zero_derivation(xm));
  CHECK(z.morphism == identity_morphism(xm));
  CHECK(z.homotopy.values() == std::vector<Elem>{0, 0});
  EndomorphismPair p = derivation_to_endomorphism_morphism(make_derivation(xm, {0, 2}));
  CHECK(p.morphism.f1.images() == std::vector<Elem>{0, 3, 2, 1});
  CHECK(p.morphism.f2 == identity_hom(xm->B()));
}
