#pragma once

// Crossed modules shared by the unit and acceptance suites.

#include <string>
#include <vector>

#include "xmlift/catalog.hpp"
#include "xmlift/crossed_module.hpp"
#include "xmlift/lifting.hpp"

namespace xmlift::testing {

inline GroupHom mod2() {
  return catalog::cyclic_hom(catalog::cyclic(4), catalog::cyclic(2), 1);
}

/// (Z_4, Z_2, mod 2, trivial)
inline XModPtr z4_mod2() {
  GroupHom h = mod2();
  return make_crossed_module(h, trivial_action(h.target(), h.source()));
}

/// (A_3, S_3, inclusion, conjugation)
inline XModPtr a3_in_s3() {
  GroupPtr s3 = catalog::symmetric(3);
  const Elem three_cycle = 3;  // (1 2 3) in lexicographic order
  return inclusion_xmod(generated_subgroup(s3, std::vector<Elem>{three_cycle}));
}

/// (Z_2 x Z_2, 1, zero, trivial)
inline XModPtr klein_to_trivial() {
  GroupPtr k = catalog::klein();
  GroupPtr one = catalog::trivial();
  return make_crossed_module(zero_hom(k, one), trivial_action(one, k));
}

/// (G, G, identity, conjugation)
inline XModPtr identity_xmod(const GroupPtr& g) {
  return make_crossed_module(identity_hom(g), conjugation_action(g));
}

/// (A, B, zero, trivial) for abelian A.
inline XModPtr zero_xmod(const GroupPtr& a, const GroupPtr& b) {
  return make_crossed_module(zero_hom(a, b), trivial_action(b, a));
}

/// (Z_4, Z_4, x -> 2x, trivial): neither onto, injective nor zero.
inline XModPtr z4_doubling() {
  GroupPtr z4 = catalog::cyclic(4);
  return make_crossed_module(catalog::cyclic_hom(z4, z4, 2), trivial_action(z4, z4));
}

struct NamedXMod {
  std::string name;
  XModPtr xm;
};

/// Every catalog crossed module used for exhaustive checks.
inline std::vector<NamedXMod> catalog_xmods() {
  std::vector<NamedXMod> out{
      {"(Z4,Z2,mod2,triv)", z4_mod2()},
      {"(A3,S3,inc,conj)", a3_in_s3()},
      {"Aut(Z3)", automorphism_xmod(catalog::cyclic(3))},
      {"Aut(S3)", automorphism_xmod(catalog::symmetric(3))},
      {"Aut(Z2xZ2)", automorphism_xmod(catalog::klein())},
      {"Aut(Z4)", automorphism_xmod(catalog::cyclic(4))},
      {"(Z2xZ2,1,0,triv)", klein_to_trivial()},
      {"(Z4,Z4,0,triv)", zero_xmod(catalog::cyclic(4), catalog::cyclic(4))},
      {"(Z4,Z4,2x,triv)", z4_doubling()},
      {"(Z4,Z4,id,triv)", identity_xmod(catalog::cyclic(4))},
      {"(S3,S3,id,conj)", identity_xmod(catalog::symmetric(3))},
      {"(Q8,Q8,id,conj)", identity_xmod(catalog::quaternion())},
      {"(Z(D4),D4,inc,conj)", inclusion_xmod(center(catalog::dihedral(4)))},
  };
  // Quotient liftings (A, A/ker α, p) are crossed modules in their own right.
  const std::size_t base_count = out.size();
  for (std::size_t i = 0; i < base_count; ++i) {
    const XModPtr& xm = out[i].xm;
    Lifting l = lifting_from_subgroup(xm, kernel(xm->boundary()));
    out.push_back({"(A,A/ker," + out[i].name + ")", l.lifted()});
  }
  return out;
}

}  // namespace xmlift::testing
