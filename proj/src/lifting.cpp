#include "xmlift/lifting.hpp"

namespace xmlift {

Lifting make_lifting(XModPtr base, GroupHom phi, GroupHom omega) {
  if (!same_group(phi.source(), base->A()) || !same_group(omega.target(), base->B()) ||
      !same_group(phi.target(), omega.source())) {
    throw AlgebraError(ErrorCode::TypeMismatch, "lifting needs φ: A -> X and ω: X -> B");
  }
  const GroupHom& alpha = base->boundary();
  for (Elem a = 0; a < base->A()->order(); ++a) {
    if (omega(phi(a)) != alpha(a)) {
      throw AlgebraError(ErrorCode::TriangleViolation, "ω∘φ != α", {a});
    }
  }
  XModPtr lifted;
  try {
    lifted = make_crossed_module(phi, pull_back_action(base->action(), omega));
  } catch (const AlgebraError& e) {
    throw AlgebraError(ErrorCode::InducedCMViolation,
                       "(A, X, φ) is not a crossed module: " + std::string(e.what()),
                       e.witness());
  }
  for (Elem a = 0; a < base->A()->order(); ++a) {
    if (phi(a) == 0 && alpha(a) != 0) {
      throw AlgebraError(ErrorCode::KernelViolation, "ker φ ⊄ ker α", {a});
    }
  }
  Lifting l;
  l.base_ = std::move(base);
  l.phi_ = std::move(phi);
  l.omega_ = std::move(omega);
  l.lifted_ = std::move(lifted);
  return l;
}

Lifting identity_lifting(const XModPtr& base) {
  return make_lifting(base, base->boundary(), identity_hom(base->B()));
}

Lifting lifting_from_subgroup(const XModPtr& base, const Subgroup& c) {
  if (!same_group(c.parent(), base->A())) {
    throw AlgebraError(ErrorCode::TypeMismatch, "C must be a subgroup of A");
  }
  const Subgroup ker_alpha = kernel(base->boundary());
  for (Elem x : c.elements()) {
    if (!ker_alpha.contains(x)) {
      throw AlgebraError(ErrorCode::NotSubgroupOfKernel, "C ⊄ ker α", {x});
    }
  }
  // ker α is central, so C is normal in A.
  Quotient q = quotient(c);
  std::vector<Elem> omega(q.group->order());
  for (Elem coset = 0; coset < omega.size(); ++coset) {
    omega[coset] = base->boundary()(q.representatives[coset]);
  }
  Lifting l = make_lifting(base, q.projection, make_hom(q.group, base->B(), std::move(omega)));
  if (kernel(l.omega()).order() * c.order() != ker_alpha.order() ||
      kernel(l.phi()).elements() != c.elements()) {
    throw AlgebraError(ErrorCode::StructureDefect, "quotient lifting has the wrong kernels");
  }
  return l;
}

std::vector<Lifting> enumerate_liftings(const XModPtr& base, std::size_t size_bound) {
  const Subgroup ker_alpha = kernel(base->boundary());
  auto [ker_grp, inclusion] = ker_alpha.as_group();
  std::vector<Lifting> out;
  for (const Subgroup& s : subgroups(ker_grp, size_bound)) {
    std::vector<Elem> elems;
    for (Elem x : s.elements()) elems.push_back(inclusion(x));
    out.push_back(lifting_from_subgroup(base, unchecked_subgroup(base->A(), std::move(elems))));
  }
  return out;
}

Lifting as_lifting_of_automorphism_xmod(const XModPtr& xm, std::size_t size_bound) {
  XModPtr aut_xm = automorphism_xmod(xm->A(), size_bound);
  ActionHom theta = action_to_theta(*xm, size_bound);
  GroupHom omega = make_hom(xm->B(), aut_xm->B(), theta.theta.images());
  return make_lifting(aut_xm, xm->boundary(), std::move(omega));
}

LiftingMorphism make_lifting_morphism(Lifting source, Lifting target, GroupHom f) {
  if (!same_xmod(source.base(), target.base())) {
    throw AlgebraError(ErrorCode::BaseMismatch, "liftings have different bases");
  }
  if (!same_group(f.source(), source.X()) || !same_group(f.target(), target.X())) {
    throw AlgebraError(ErrorCode::TypeMismatch, "f must map X -> X'");
  }
  for (Elem a = 0; a < source.base()->A()->order(); ++a) {
    if (f(source.phi()(a)) != target.phi()(a)) {
      throw AlgebraError(ErrorCode::PhiViolation, "f∘φ != φ'", {a});
    }
  }
  for (Elem x = 0; x < source.X()->order(); ++x) {
    if (target.omega()(f(x)) != source.omega()(x)) {
      throw AlgebraError(ErrorCode::OmegaViolation, "ω'∘f != ω", {x});
    }
  }
  return LiftingMorphism{std::move(source), std::move(target), std::move(f)};
}

LiftingMorphism identity_lifting_morphism(const Lifting& l) {
  return LiftingMorphism{l, l, identity_hom(l.X())};
}

LiftingMorphism compose(const LiftingMorphism& outer, const LiftingMorphism& inner) {
  if (!(inner.target == outer.source)) {
    throw AlgebraError(ErrorCode::TypeMismatch, "lifting morphisms are not composable");
  }
  return make_lifting_morphism(inner.source, outer.target, compose(outer.f, inner.f));
}

bool operator==(const LiftingMorphism& a, const LiftingMorphism& b) {
  return a.source == b.source && a.target == b.target && a.f == b.f;
}

LiftingMorphism factor_through_phi(const Lifting& source, const Lifting& target) {
  if (!source.phi().is_surjective()) {
    throw AlgebraError(ErrorCode::NotTransitive, "φ of the source lifting is not onto");
  }
  const std::size_t unset = target.X()->order();
  std::vector<Elem> f(source.X()->order(), unset);
  for (Elem a = 0; a < source.base()->A()->order(); ++a) {
    const Elem x = source.phi()(a);
    const Elem y = target.phi()(a);
    if (f[x] == unset) f[x] = y;
    else if (f[x] != y) {
      throw AlgebraError(ErrorCode::WellDefinednessDefect, "φ'(a) depends on the preimage", {a});
    }
  }
  return make_lifting_morphism(source, target, make_hom(source.X(), target.X(), std::move(f)));
}

XModMorphism lift_morphism(const XModMorphism& m, const Lifting& l,
                           const MorphismLiftOptions& options) {
  if (!same_xmod(m.target, l.base())) {
    throw AlgebraError(ErrorCode::BaseMismatch, "lifting is not over the morphism's target");
  }
  const CrossedModule& src = *m.source;
  const GroupHom& alpha_src = src.boundary();
  if (!alpha_src.is_surjective()) {
    throw AlgebraError(ErrorCode::NotTransitive, "source crossed module is not transitive");
  }
  for (Elem a = 0; a < src.A()->order(); ++a) {
    if (alpha_src(a) == 0 && l.phi()(m.f1(a)) != 0) {
      throw AlgebraError(ErrorCode::KernelConditionFails, "f(ker α̃) ⊄ ker φ", {a});
    }
  }
  const std::size_t nb = src.B()->order();
  const std::size_t unset = l.X()->order();
  std::vector<Elem> g_tilde(nb, unset);
  // Iterating ã upwards fixes the minimal-index preimage first; later
  // preimages must agree.
  for (Elem a = 0; a < src.A()->order(); ++a) {
    const Elem b = alpha_src(a);
    const Elem value = l.phi()(m.f1(a));
    if (g_tilde[b] == unset) g_tilde[b] = value;
    else if (g_tilde[b] != value) {
      throw AlgebraError(ErrorCode::WellDefinednessDefect,
                         "φf(ã) differs between preimages of b̃", {b, a});
    }
  }
  GroupHom lifted_g = make_hom(src.B(), l.X(), std::move(g_tilde));
  for (Elem b = 0; b < nb; ++b) {
    if (l.omega()(lifted_g(b)) != m.f2(b)) {
      throw AlgebraError(ErrorCode::StructureDefect, "ω∘g̃ != g", {b});
    }
  }
  XModMorphism out = make_morphism(m.source, l.lifted(), m.f1, lifted_g);
  if (nb * l.X()->order() <= options.uniqueness_check_limit) {
    const auto all = all_morphism_lifts(m, l, options.size_bound);
    if (all.size() != 1 || !(all.front() == out.f2)) {
      throw AlgebraError(ErrorCode::StructureDefect, "lifted morphism is not unique",
                         {all.size()});
    }
  }
  return out;
}

std::vector<GroupHom> all_morphism_lifts(const XModMorphism& m, const Lifting& l,
                                         std::size_t size_bound) {
  std::vector<GroupHom> out;
  for (GroupHom& candidate : homomorphisms(m.source->B(), l.X(), size_bound)) {
    bool ok = true;
    for (Elem b = 0; b < candidate.source()->order() && ok; ++b) {
      ok = l.omega()(candidate(b)) == m.f2(b);
    }
    if (!ok) continue;
    try {
      make_morphism(m.source, l.lifted(), m.f1, candidate);
    } catch (const AlgebraError&) {
      continue;
    }
    out.push_back(std::move(candidate));
  }
  return out;
}

PullbackLifting pullback_lifting(const XModMorphism& m, const Lifting& l) {
  if (!same_xmod(m.target, l.base())) {
    throw AlgebraError(ErrorCode::BaseMismatch, "lifting is not over the morphism's target");
  }
  const CrossedModule& src = *m.source;
  Pullback pb = pullback_group(l.omega(), m.f2);
  std::vector<Elem> psi(src.A()->order());
  for (Elem a = 0; a < psi.size(); ++a) {
    psi[a] = *pb.index_of(l.phi()(m.f1(a)), src.boundary()(a));
  }
  Lifting lifted =
      make_lifting(m.source, make_hom(src.A(), pb.group, std::move(psi)), pb.second);
  XModMorphism projection = make_morphism(lifted.lifted(), l.lifted(), m.f1, pb.first);
  return PullbackLifting{std::move(pb), std::move(lifted), std::move(projection)};
}

LiftingMorphism pullback_functor(const XModMorphism& m, const LiftingMorphism& h) {
  if (!same_xmod(h.source.base(), m.target)) {
    throw AlgebraError(ErrorCode::BaseMismatch, "lifting morphism is not over m's target");
  }
  PullbackLifting from = pullback_lifting(m, h.source);
  PullbackLifting to = pullback_lifting(m, h.target);
  std::vector<Elem> map(from.pullback.pairs.size());
  for (Elem i = 0; i < map.size(); ++i) {
    auto [x, b] = from.pullback.pairs[i];
    map[i] = *to.pullback.index_of(h.f(x), b);
  }
  GroupHom f = make_hom(from.lifting.X(), to.lifting.X(), std::move(map));
  return make_lifting_morphism(std::move(from.lifting), std::move(to.lifting), std::move(f));
}

}  // namespace xmlift
