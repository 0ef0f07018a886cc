#include "check.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "xmlift/catalog.hpp"
#include "xmlift/derivation.hpp"
#include "xmlift/homotopy.hpp"

using namespace xmlift;
using namespace xmlift::testing;

TEST_CASE("make_homotopy examples") {
  for (auto& [name, xm] : catalog_xmods()) {
    CAPTURE(name);
    XModMorphism id = identity_morphism(xm);
    Homotopy h = make_homotopy(std::vector<Elem>(xm->B()->order(), 0), id, id);
    CHECK(h.values().size() == xm->B()->order());
    for (auto& d : enumerate_derivations(xm).elements) {
      EndomorphismPair p = derivation_to_endomorphism_morphism(d);
      CHECK(p.homotopy.values() == d.values());
      CHECK(p.homotopy.to() == id);
    }
  }

  // (1, Z2, 0, triv) -> (Z4, Z2, mod2, triv) with g1 = 1 and g2 = 0.
  GroupPtr one = catalog::trivial(), z2 = catalog::cyclic(2);
  XModPtr src = zero_xmod(one, z2);
  XModPtr base = z4_mod2();
  XModMorphism m1 = make_morphism(src, base, zero_hom(one, base->A()), identity_hom(z2));
  XModMorphism m2 = make_morphism(src, base, zero_hom(one, base->A()), zero_hom(z2, z2));
  AlgebraError e = expect_error([&] { make_homotopy({0, 0}, m1, m2); }, ErrorCode::H3Violation);
  CHECK(e.witness() == std::vector<std::size_t>{1});
}

TEST_CASE("make_homotopy H1 and H2 witnesses") {
  XModPtr base = z4_mod2();
  XModMorphism id = identity_morphism(base);
  AlgebraError h1 = expect_error([&] { make_homotopy({0, 1}, id, id); }, ErrorCode::H1Violation);
  CHECK(h1.witness() == std::vector<std::size_t>{1, 1});

  GroupPtr z2 = catalog::cyclic(2), one = catalog::trivial();
  XModPtr src = zero_xmod(z2, one);
  XModMorphism f1 = make_morphism(src, base, catalog::cyclic_hom(z2, base->A(), 2), zero_hom(one, base->B()));
  XModMorphism f2 = make_morphism(src, base, zero_hom(z2, base->A()), zero_hom(one, base->B()));
  AlgebraError h2 = expect_error([&] { make_homotopy({0}, f1, f2); }, ErrorCode::H2Violation);
  CHECK(h2.witness() == std::vector<std::size_t>{1});

  expect_error([&] { make_homotopy({0}, f1, id); }, ErrorCode::TypeMismatch);
  expect_error([&] { make_homotopy({0, 0, 0}, id, id); }, ErrorCode::MalformedTable);
}

TEST_CASE("H1 must twist by the target morphism") {
  // With the twist g1(b1) instead of g2(b1), d: (θ_d, σ_d) ≃ (1_A, 1_B) can
  // fail when A is nonabelian. Search for such a derivation.
  std::size_t counterexamples = 0;
  for (auto& [name, xm] : catalog_xmods()) {
    const FiniteGroup& a = *xm->A();
    const FiniteGroup& b = *xm->B();
    for (auto& d : enumerate_derivations(xm).elements) {
      bool holds = true;
      for (Elem b1 = 0; b1 < b.order() && holds; ++b1)
        for (Elem b2 = 0; b2 < b.order() && holds; ++b2)
          holds = d(b.op(b1, b2)) == a.op(d(b1), xm->act(d.sigma()[b1], d(b2)));
      if (!holds) ++counterexamples;
      derivation_to_endomorphism_morphism(d);
    }
  }
  CHECK(counterexamples > 0);
}

TEST_CASE("homotopy_lift on the Z4 fixture") {
  XModPtr base = z4_mod2();
  XModPtr src = identity_xmod(catalog::cyclic(4));
  XModMorphism to = make_morphism(src, base, identity_hom(src->A()), mod2());
  Lifting l = lifting_from_subgroup(base, trivial_subgroup(base->A()));
  auto homotopies = homotopies_into(to);
  CHECK(homotopies.size() == 4);  // Hom(Z4, Z4)
  std::size_t distinct = 0;
  for (auto& h : homotopies) {
    XModMorphism up1 = lift_morphism(h.from(), l);
    XModMorphism up2 = lift_morphism(h.to(), l);
    Homotopy lifted = homotopy_lift(h, l, up1, up2);
    const FiniteGroup& x = *l.X();
    for (Elem b = 0; b < src->B()->order(); ++b)
      CHECK(l.phi()(lifted(b)) == x.sub(up1.f2(b), up2.f2(b)));
    distinct += !(h.from() == h.to());
  }
  CHECK(distinct == 3);

  XModMorphism id = identity_morphism(base);
  Homotopy zero = make_homotopy({0, 0}, id, id);
  Lifting idl = identity_lifting(base);
  XModMorphism upid = lift_morphism(id, idl);
  homotopy_lift(zero, idl, upid, upid);
  expect_error([&] { homotopy_lift(zero, l, upid, upid); }, ErrorCode::BaseMismatch);
}

TEST_CASE("homotopy_lift rejects endpoints that do not lie over the originals") {
  XModPtr base = z4_mod2();
  XModPtr src = identity_xmod(catalog::cyclic(4));
  XModMorphism to = make_morphism(src, base, identity_hom(src->A()), mod2());
  Lifting l = lifting_from_subgroup(base, trivial_subgroup(base->A()));
  auto homotopies = homotopies_into(to);
  const Homotopy* moving = nullptr;
  for (auto& h : homotopies)
    if (!(h.from() == h.to())) moving = &h;
  REQUIRE(moving != nullptr);
  XModMorphism up2 = lift_morphism(moving->to(), l);
  expect_error([&] { homotopy_lift(*moving, l, up2, up2); }, ErrorCode::TypeMismatch);
}
