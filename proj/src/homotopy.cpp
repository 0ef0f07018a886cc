#include "xmlift/homotopy.hpp"

#include "xmlift/derivation.hpp"

namespace xmlift {

Homotopy make_homotopy(std::vector<Elem> d, XModMorphism from, XModMorphism to) {
  if (!same_xmod(from.source, to.source) || !same_xmod(from.target, to.target)) {
    throw AlgebraError(ErrorCode::TypeMismatch, "homotopy endpoints differ in type");
  }
  const CrossedModule& src = *from.source;
  const CrossedModule& tgt = *from.target;
  const FiniteGroup& a_grp = *tgt.A();
  const FiniteGroup& b_src = *src.B();
  if (d.size() != b_src.order()) {
    throw AlgebraError(ErrorCode::MalformedTable, "homotopy needs one value per element of B̃");
  }
  for (Elem b = 0; b < d.size(); ++b) {
    if (d[b] >= a_grp.order()) {
      throw AlgebraError(ErrorCode::MalformedTable, "homotopy value out of range", {b});
    }
  }
  for (Elem b1 = 0; b1 < b_src.order(); ++b1) {
    for (Elem b2 = 0; b2 < b_src.order(); ++b2) {
      if (d[b_src.op(b1, b2)] != a_grp.op(d[b1], tgt.act(to.f2(b1), d[b2]))) {
        throw AlgebraError(ErrorCode::H1Violation, "d(b1+b2) != d(b1) + g2(b1)·d(b2)",
                           {b1, b2});
      }
    }
  }
  for (Elem a = 0; a < src.A()->order(); ++a) {
    if (d[src.boundary()(a)] != a_grp.sub(from.f1(a), to.f1(a))) {
      throw AlgebraError(ErrorCode::H2Violation, "d(α̃(ã)) != f1(ã) - f2(ã)", {a});
    }
  }
  for (Elem b = 0; b < b_src.order(); ++b) {
    if (tgt.boundary()(d[b]) != tgt.B()->sub(from.f2(b), to.f2(b))) {
      throw AlgebraError(ErrorCode::H3Violation, "α(d(b̃)) != g1(b̃) - g2(b̃)", {b});
    }
  }
  Homotopy h;
  h.values_ = std::move(d);
  h.from_ = std::move(from);
  h.to_ = std::move(to);
  return h;
}

Homotopy homotopy_lift(const Homotopy& h, const Lifting& l, const XModMorphism& lifted_from,
                       const XModMorphism& lifted_to) {
  if (!same_xmod(h.from().target, l.base()) || !same_xmod(lifted_from.target, l.lifted()) ||
      !same_xmod(lifted_to.target, l.lifted())) {
    throw AlgebraError(ErrorCode::BaseMismatch, "lifted morphisms must land in (A, X, φ)");
  }
  const std::pair<const XModMorphism*, const XModMorphism*> pairs[] = {
      {&h.from(), &lifted_from}, {&h.to(), &lifted_to}};
  for (auto [down, up] : pairs) {
    if (!(down->f1 == up->f1)) {
      throw AlgebraError(ErrorCode::TypeMismatch, "lifted morphism changes f");
    }
    for (Elem b = 0; b < down->f2.source()->order(); ++b) {
      if (l.omega()(up->f2(b)) != down->f2(b)) {
        throw AlgebraError(ErrorCode::OmegaViolation, "ω∘g̃ != g", {b});
      }
    }
  }
  return make_homotopy(h.values(), lifted_from, lifted_to);
}

std::vector<Homotopy> homotopies_into(const XModMorphism& to, std::size_t size_bound) {
  const CrossedModule& src = *to.source;
  const CrossedModule& tgt = *to.target;
  const FiniteGroup& a_grp = *tgt.A();
  const FiniteGroup& b_grp = *tgt.B();
  const GroupAction twisted = pull_back_action(tgt.action(), to.f2);
  std::vector<Homotopy> out;
  for (auto& d : crossed_homomorphisms(twisted, {DerivationSearch::Pruned, size_bound})) {
    std::vector<Elem> f1(src.A()->order());
    for (Elem a = 0; a < f1.size(); ++a) f1[a] = a_grp.op(d[src.boundary()(a)], to.f1(a));
    std::vector<Elem> g1(src.B()->order());
    for (Elem b = 0; b < g1.size(); ++b) g1[b] = b_grp.op(tgt.boundary()(d[b]), to.f2(b));
    XModMorphism from = make_morphism(to.source, to.target, make_hom(src.A(), tgt.A(), f1),
                                      make_hom(src.B(), tgt.B(), g1));
    out.push_back(make_homotopy(std::move(d), std::move(from), to));
  }
  return out;
}

}  // namespace xmlift
