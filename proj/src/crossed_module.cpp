#include "xmlift/crossed_module.hpp"

namespace xmlift {

XModPtr make_crossed_module(GroupHom boundary, GroupAction action) {
  if (!same_group(action.actor(), boundary.target()) ||
      !same_group(action.space(), boundary.source())) {
    throw AlgebraError(ErrorCode::TypeMismatch,
                       "action must be of the boundary's codomain on its domain");
  }
  // Revalidate the action axioms; callers may hand in unchecked tables.
  action = make_action(boundary.target(), boundary.source(), action.table());

  const FiniteGroup& a_grp = *boundary.source();
  const FiniteGroup& b_grp = *boundary.target();
  for (Elem b = 0; b < b_grp.order(); ++b) {
    for (Elem a = 0; a < a_grp.order(); ++a) {
      if (boundary(action(b, a)) != b_grp.conj(b, boundary(a))) {
        throw AlgebraError(ErrorCode::CM1Violation, "α(b·a) != b+α(a)-b", {b, a});
      }
    }
  }
  for (Elem a = 0; a < a_grp.order(); ++a) {
    for (Elem a1 = 0; a1 < a_grp.order(); ++a1) {
      if (action(boundary(a), a1) != a_grp.conj(a, a1)) {
        throw AlgebraError(ErrorCode::CM2Violation, "α(a)·a1 != a+a1-a", {a, a1});
      }
    }
  }
  return XModPtr(new CrossedModule(std::move(boundary), std::move(action)));
}

bool same_xmod(const XModPtr& a, const XModPtr& b) {
  return a == b || (a && b && *a == *b);
}

StructureReport verify_structure(const CrossedModule& xm) {
  StructureReport report;
  const Subgroup im = image(xm.boundary());
  const Subgroup ker = kernel(xm.boundary());
  const Subgroup z = center(xm.A());
  report.image_normal = is_normal(im);
  report.kernel_central = ker.is_subset_of(z);
  report.image_fixes_center = true;
  for (Elem b : im.elements()) {
    for (Elem a : z.elements()) {
      if (xm.act(b, a) != a) report.image_fixes_center = false;
    }
  }
  if (!report.all_true()) {
    throw AlgebraError(ErrorCode::StructureDefect,
                       "validated crossed module fails a structural property");
  }
  return report;
}

std::string_view to_string(TransitivityClass tag) {
  switch (tag) {
    case TransitivityClass::OneTransitive: return "OneTransitive";
    case TransitivityClass::SimplyTransitive: return "SimplyTransitive";
    case TransitivityClass::Transitive: return "Transitive";
    case TransitivityClass::TotallyIntransitive: return "TotallyIntransitive";
    case TransitivityClass::None: return "None";
  }
  return "None";
}

TransitivityClass classify(const CrossedModule& xm) {
  const bool surjective = xm.boundary().is_surjective();
  const bool injective = xm.boundary().is_injective();
  if (surjective && injective) return TransitivityClass::OneTransitive;
  if (injective) return TransitivityClass::SimplyTransitive;
  if (surjective) return TransitivityClass::Transitive;
  if (xm.boundary().is_zero() && xm.A()->is_abelian()) {
    return TransitivityClass::TotallyIntransitive;
  }
  return TransitivityClass::None;
}

XModMorphism make_morphism(XModPtr source, XModPtr target, GroupHom f1, GroupHom f2) {
  if (!same_group(f1.source(), source->A()) || !same_group(f1.target(), target->A()) ||
      !same_group(f2.source(), source->B()) || !same_group(f2.target(), target->B())) {
    throw AlgebraError(ErrorCode::TypeMismatch, "morphism components have the wrong type");
  }
  const FiniteGroup& a_grp = *source->A();
  const FiniteGroup& b_grp = *source->B();
  for (Elem a = 0; a < a_grp.order(); ++a) {
    if (f2(source->boundary()(a)) != target->boundary()(f1(a))) {
      throw AlgebraError(ErrorCode::SquareNotCommuting, "f2∘α != α'∘f1", {a});
    }
  }
  for (Elem b = 0; b < b_grp.order(); ++b) {
    for (Elem a = 0; a < a_grp.order(); ++a) {
      if (f1(source->act(b, a)) != target->act(f2(b), f1(a))) {
        throw AlgebraError(ErrorCode::NotEquivariant, "f1(b·a) != f2(b)·f1(a)", {b, a});
      }
    }
  }
  return XModMorphism{std::move(source), std::move(target), std::move(f1), std::move(f2)};
}

XModMorphism identity_morphism(const XModPtr& xm) {
  return XModMorphism{xm, xm, identity_hom(xm->A()), identity_hom(xm->B())};
}

XModMorphism compose(const XModMorphism& outer, const XModMorphism& inner) {
  if (!same_xmod(inner.target, outer.source)) {
    throw AlgebraError(ErrorCode::TypeMismatch, "morphisms are not composable");
  }
  return make_morphism(inner.source, outer.target, compose(outer.f1, inner.f1),
                       compose(outer.f2, inner.f2));
}

bool operator==(const XModMorphism& a, const XModMorphism& b) {
  return same_xmod(a.source, b.source) && same_xmod(a.target, b.target) && a.f1 == b.f1 &&
         a.f2 == b.f2;
}

XModPtr inclusion_xmod(const Subgroup& normal) {
  if (!is_normal(normal)) {
    throw AlgebraError(ErrorCode::NotNormal, "inclusion crossed module needs a normal subgroup");
  }
  auto [n_grp, inclusion] = normal.as_group();
  const FiniteGroup& g = *normal.parent();
  std::vector<Elem> table;
  table.reserve(g.order() * n_grp->order());
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem a : normal.elements()) table.push_back(*normal.local_index(g.conj(x, a)));
  }
  return make_crossed_module(inclusion,
                             unchecked_action(normal.parent(), n_grp, std::move(table)));
}

XModPtr automorphism_xmod(const GroupPtr& g, std::size_t size_bound) {
  AutomorphismGroup aut = automorphism_group(g, size_bound);
  std::vector<Elem> iota(g->order());
  std::vector<Elem> conj(g->order());
  for (Elem x = 0; x < g->order(); ++x) {
    for (Elem a = 0; a < g->order(); ++a) conj[a] = g->conj(x, a);
    iota[x] = *aut.index_of(conj);
  }
  return make_crossed_module(make_hom(g, aut.group, std::move(iota)), aut.action);
}

ActionHom action_to_theta(const CrossedModule& xm, std::size_t size_bound) {
  AutomorphismGroup aut = automorphism_group(xm.A(), size_bound);
  const FiniteGroup& a_grp = *xm.A();
  std::vector<Elem> theta(xm.B()->order());
  std::vector<Elem> perm(a_grp.order());
  for (Elem b = 0; b < xm.B()->order(); ++b) {
    for (Elem a = 0; a < a_grp.order(); ++a) perm[a] = xm.act(b, a);
    auto idx = aut.index_of(perm);
    if (!idx) {
      throw AlgebraError(ErrorCode::StructureDefect, "action of b is not an automorphism", {b});
    }
    theta[b] = *idx;
  }
  GroupHom hom = make_hom(xm.B(), aut.group, std::move(theta));
  return ActionHom{std::move(aut), std::move(hom)};
}

}  // namespace xmlift
