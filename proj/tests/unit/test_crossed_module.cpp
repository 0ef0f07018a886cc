#include <numeric>
#include <random>

#include "check.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "xmlift/catalog.hpp"
#include "xmlift/crossed_module.hpp"
#include "xmlift/lifting.hpp"

using namespace xmlift;
using namespace xmlift::testing;

namespace {

// Transports a crossed module along a permutation of A fixing 0.
XModPtr relabel_a(const XModPtr& xm, const std::vector<Elem>& perm) {
  const FiniteGroup& a = *xm->A();
  std::vector<Elem> back(perm.size());
  for (Elem i = 0; i < perm.size(); ++i) back[perm[i]] = i;
  std::vector<std::vector<Elem>> rows(a.order(), std::vector<Elem>(a.order()));
  for (Elem x = 0; x < a.order(); ++x)
    for (Elem y = 0; y < a.order(); ++y) rows[perm[x]][perm[y]] = perm[a.op(x, y)];
  GroupPtr a2 = make_group(rows);
  std::vector<Elem> boundary(a.order());
  for (Elem x = 0; x < a.order(); ++x) boundary[x] = xm->boundary()(back[x]);
  std::vector<Elem> table(xm->B()->order() * a.order());
  for (Elem b = 0; b < xm->B()->order(); ++b)
    for (Elem x = 0; x < a.order(); ++x) table[b * a.order() + x] = perm[xm->act(b, back[x])];
  return make_crossed_module(make_hom(a2, xm->B(), boundary), make_action(xm->B(), a2, table));
}

}  // namespace

TEST_CASE("make_crossed_module examples") {
  XModPtr z4 = z4_mod2();
  CHECK(z4->A()->order() == 4);
  XModPtr a3 = a3_in_s3();
  CHECK(a3->A()->order() == 3);
  GroupPtr z2 = catalog::cyclic(2), z4g = catalog::cyclic(4);
  GroupAction neg = make_action(z2, z4g, {0, 1, 2, 3, 0, 3, 2, 1});
  AlgebraError e =
      expect_error([&] { make_crossed_module(mod2(), neg); }, ErrorCode::CM2Violation);
  CHECK(e.witness() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("CM1 violation reports the first offending pair") {
  GroupPtr s3 = catalog::symmetric(3);
  std::vector<std::size_t> expected;
  for (Elem b = 0; b < 6 && expected.empty(); ++b)
    for (Elem a = 0; a < 6 && expected.empty(); ++a)
      if (a != s3->conj(b, a)) expected = {b, a};
  AlgebraError e =
      expect_error([&] { make_crossed_module(identity_hom(s3), trivial_action(s3, s3)); },
                   ErrorCode::CM1Violation);
  CHECK(e.witness() == expected);
  expect_error([&] { make_crossed_module(mod2(), trivial_action(z4_mod2()->A(), z4_mod2()->A())); },
               ErrorCode::TypeMismatch);
}

TEST_CASE("verify_structure holds on every catalog crossed module") {
  for (auto& [name, xm] : catalog_xmods()) {
    CAPTURE(name);
    StructureReport r = verify_structure(*xm);
    CHECK(r.image_normal);
    CHECK(r.kernel_central);
    CHECK(r.image_fixes_center);
    CHECK(r.all_true());
  }
}

TEST_CASE("classify") {
  CHECK(classify(*z4_mod2()) == TransitivityClass::Transitive);
  CHECK(classify(*a3_in_s3()) == TransitivityClass::SimplyTransitive);
  CHECK(classify(*zero_xmod(catalog::cyclic(4), catalog::cyclic(4))) ==
        TransitivityClass::TotallyIntransitive);
  CHECK(classify(*identity_xmod(catalog::symmetric(3))) == TransitivityClass::OneTransitive);
  CHECK(classify(*z4_doubling()) == TransitivityClass::None);
  CHECK(to_string(TransitivityClass::OneTransitive) == "OneTransitive");
  CHECK(to_string(TransitivityClass::None) == "None");
  // Trivial everything: bijective wins over zero.
  CHECK(classify(*identity_xmod(catalog::trivial())) == TransitivityClass::OneTransitive);
}

TEST_CASE("classify is stable under relabeling") {
  std::mt19937 rng(7);
  for (auto& [name, xm] : catalog_xmods()) {
    CAPTURE(name);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Elem> perm(xm->A()->order());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin() + 1, perm.end(), rng);
      CHECK(classify(*relabel_a(xm, perm)) == classify(*xm));
    }
  }
}

TEST_CASE("make_morphism") {
  for (auto& [name, xm] : catalog_xmods()) make_morphism(xm, xm, identity_hom(xm->A()), identity_hom(xm->B()));
  XModPtr base = z4_mod2();
  for (auto& l : enumerate_liftings(base))
    make_morphism(l.lifted(), base, identity_hom(base->A()), l.omega());
  XModPtr z = zero_xmod(catalog::cyclic(4), catalog::cyclic(2));
  XModPtr z2 = zero_xmod(catalog::cyclic(3), catalog::klein());
  make_morphism(z, z2, zero_hom(z->A(), z2->A()), zero_hom(z->B(), z2->B()));

  AlgebraError sq = expect_error(
      [&] { make_morphism(base, base, identity_hom(base->A()), zero_hom(base->B(), base->B())); },
      ErrorCode::SquareNotCommuting);
  CHECK(sq.witness() == std::vector<std::size_t>{1});

  // (Z4, Z2, 0, negation) -> (Z4, Z2, 0, trivial) via identities is not equivariant.
  GroupPtr z4g = catalog::cyclic(4), z2g = catalog::cyclic(2);
  XModPtr neg = make_crossed_module(zero_hom(z4g, z2g), make_action(z2g, z4g, {0, 1, 2, 3, 0, 3, 2, 1}));
  XModPtr triv = zero_xmod(z4g, z2g);
  AlgebraError eq = expect_error(
      [&] { make_morphism(neg, triv, identity_hom(z4g), identity_hom(z2g)); },
      ErrorCode::NotEquivariant);
  CHECK(eq.witness() == std::vector<std::size_t>{1, 1});
  expect_error([&] { make_morphism(neg, triv, identity_hom(z2g), identity_hom(z2g)); },
               ErrorCode::TypeMismatch);
}

TEST_CASE("morphism composition stays valid") {
  XModPtr base = z4_mod2();
  auto ls = enumerate_liftings(base);
  XModMorphism down = make_morphism(ls[0].lifted(), base, identity_hom(base->A()), ls[0].omega());
  XModMorphism id = identity_morphism(base);
  XModMorphism c = compose(id, down);
  CHECK(c == down);
  CHECK(compose(down, identity_morphism(ls[0].lifted())) == down);
}

TEST_CASE("inclusion_xmod") {
  XModPtr a3 = a3_in_s3();
  CHECK(classify(*a3) == TransitivityClass::SimplyTransitive);
  GroupPtr s3 = catalog::symmetric(3);
  XModPtr triv = inclusion_xmod(trivial_subgroup(s3));
  CHECK(triv->boundary().is_zero());
  GroupPtr z4 = catalog::cyclic(4);
  XModPtr half = inclusion_xmod(make_subgroup(z4, {0, 2}));
  CHECK(half->action().is_trivial());
  expect_error([&] { inclusion_xmod(generated_subgroup(s3, std::vector<Elem>{1})); },
               ErrorCode::NotNormal);
}

TEST_CASE("automorphism_xmod") {
  XModPtr z3 = automorphism_xmod(catalog::cyclic(3));
  CHECK(z3->B()->order() == 2);
  CHECK(z3->boundary().is_zero());
  XModPtr s3 = automorphism_xmod(catalog::symmetric(3));
  CHECK(s3->boundary().is_injective());
  XModPtr one = automorphism_xmod(catalog::trivial());
  CHECK(one->A()->order() == 1);
  CHECK(one->B()->order() == 1);
  expect_error([] { automorphism_xmod(catalog::cyclic(8), 4); }, ErrorCode::SizeBound);
}

TEST_CASE("action_to_theta") {
  XModPtr z4 = z4_mod2();
  CHECK(action_to_theta(*z4).theta.is_zero());
  XModPtr a3 = a3_in_s3();
  ActionHom th = action_to_theta(*a3);
  for (Elem g = 0; g < 6; ++g)
    for (Elem a = 0; a < 3; ++a) {
      Elem parent = a3->boundary()(a);
      Elem conj = a3->B()->conj(g, parent);
      CHECK(th.aut.automorphisms[th.theta(g)][a] == *make_subgroup(a3->B(), image(a3->boundary()).elements()).local_index(conj));
    }
  // θ(α(a)) is conjugation by a, for every catalog crossed module.
  for (auto& [name, xm] : catalog_xmods()) {
    CAPTURE(name);
    ActionHom t = action_to_theta(*xm);
    for (Elem a = 0; a < xm->A()->order(); ++a)
      for (Elem x = 0; x < xm->A()->order(); ++x)
        CHECK(t.aut.automorphisms[t.theta(xm->boundary()(a))][x] == xm->A()->conj(a, x));
  }
}
