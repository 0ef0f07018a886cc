#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "xmlift/group.hpp"

namespace xmlift {

using Obj = std::size_t;
using Arrow = std::size_t;

/// A finite groupoid with arrows stored as flat indexed lists.
///
/// h∘g is defined iff source(h) == target(g). compose() returns nullopt
/// otherwise.
class FiniteGroupoid {
 public:
  std::size_t object_count() const noexcept { return identity_.size(); }
  std::size_t arrow_count() const noexcept { return source_.size(); }
  Obj source(Arrow g) const { return source_[g]; }
  Obj target(Arrow g) const { return target_[g]; }
  Arrow identity(Obj x) const { return identity_[x]; }
  Arrow inverse(Arrow g) const { return inverse_[g]; }
  std::optional<Arrow> compose(Arrow h, Arrow g) const;

  /// St x = arrows with source x, ascending.
  std::vector<Arrow> star(Obj x) const;

  bool operator==(const FiniteGroupoid& other) const;

 private:
  friend FiniteGroupoid make_groupoid(std::size_t, std::vector<Obj>, std::vector<Obj>,
                                      std::vector<std::vector<std::optional<Arrow>>>);

  std::vector<Obj> source_;
  std::vector<Obj> target_;
  std::vector<Arrow> identity_;
  std::vector<Arrow> inverse_;
  std::vector<std::optional<Arrow>> compose_;  // [h * arrows + g]
};

/// `composition[h][g]` must be set exactly when source(h) == target(g).
/// Identities and inverses are derived and checked. Errors: MalformedTable,
/// GroupoidAxiomViolation.
FiniteGroupoid make_groupoid(std::size_t objects, std::vector<Obj> source,
                             std::vector<Obj> target,
                             std::vector<std::vector<std::optional<Arrow>>> composition);

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

/// Groupoid with group structures on objects and arrows such that source,
/// target, identity and inverse are homomorphisms and
/// (h∘g) + (h'∘g') = (h+h')∘(g+g') wherever both sides are defined.
struct GroupGroupoid {
  FiniteGroupoid groupoid;
  GroupPtr objects;
  GroupPtr arrows;
};

using GroupGroupoidPtr = std::shared_ptr<const GroupGroupoid>;

/// The underlying groupoid, sharing ownership with `gg`.
GroupoidPtr underlying(const GroupGroupoidPtr& gg);

/// Errors: TypeMismatch, GroupGroupoidViolation, InterchangeViolation.
GroupGroupoidPtr make_group_groupoid(FiniteGroupoid groupoid, GroupPtr objects, GroupPtr arrows);

/// One object, arrows = G, composition = addition. Needs G abelian.
GroupGroupoidPtr one_object_group_groupoid(const GroupPtr& g);
/// Objects O, one arrow (a, b): a -> b for every pair; arrow index a*|O| + b.
GroupGroupoidPtr pair_group_groupoid(const GroupPtr& objects);
/// Objects O with identity arrows only.
GroupGroupoidPtr discrete_group_groupoid(const GroupPtr& objects);

struct GroupoidMorphism {
  GroupoidPtr source;
  GroupoidPtr target;
  std::vector<Obj> on_objects;
  std::vector<Arrow> on_arrows;
};

/// Functor check. Errors: NotAMorphism (arrow or object witness).
void validate_groupoid_morphism(const GroupoidMorphism& p);

struct CoveringReport {
  bool covering = false;
  std::optional<Obj> witness;  // first object whose star map is not bijective
  std::vector<std::size_t> source_star_sizes;
  std::vector<std::size_t> target_star_sizes;  // |St p(x)| for each source object x
};

/// True iff every St x -> St p(x) is a bijection. Errors: NotAMorphism.
CoveringReport is_covering_morphism(const GroupoidMorphism& p);

/// A morphism of group-groupoids: a functor whose object and arrow maps are
/// homomorphisms.
struct GroupGroupoidMorphism {
  GroupGroupoidPtr source;
  GroupGroupoidPtr target;
  GroupHom on_objects;
  GroupHom on_arrows;

  GroupoidMorphism functor() const;
};

/// Errors: TypeMismatch, NotAMorphism.
GroupGroupoidMorphism make_group_groupoid_morphism(GroupGroupoidPtr source,
                                                   GroupGroupoidPtr target,
                                                   GroupHom on_objects, GroupHom on_arrows);

/// One-object / pair / discrete functor induced by a homomorphism.
GroupGroupoidMorphism one_object_morphism(const GroupHom& h);
GroupGroupoidMorphism pair_morphism(const GroupHom& h);
GroupGroupoidMorphism discrete_morphism(const GroupHom& h);

/// Action of a group-groupoid G on a group X via ω: X -> Ob(G); g•x is
/// defined iff source(g) = ω(x).
class GGAction {
 public:
  const GroupGroupoidPtr& gg() const noexcept { return gg_; }
  const GroupPtr& space() const noexcept { return omega_.source(); }
  const GroupHom& omega() const noexcept { return omega_; }
  std::optional<Elem> act(Arrow g, Elem x) const;

 private:
  friend GGAction make_gg_action(GroupGroupoidPtr, GroupHom, std::vector<std::optional<Elem>>);

  GroupGroupoidPtr gg_;
  GroupHom omega_;
  std::vector<std::optional<Elem>> table_;  // [g * |X| + x]
};

/// Checks ω(g•x) = target(g), 1_{ω(x)}•x = x, (h∘g)•x = h•(g•x) and the
/// interchange law (g•x) + (g'•x') = (g+g')•(x+x'). Errors: TypeMismatch,
/// MalformedTable, ActionLawViolation, InterchangeViolation.
GGAction make_gg_action(GroupGroupoidPtr gg, GroupHom omega,
                        std::vector<std::optional<Elem>> table);

/// One-object G acting on X = G by g•x = g + x.
GGAction regular_gg_action(const GroupGroupoidPtr& one_object);
/// Pair groupoid on O acting on O × K via the first projection:
/// (a, b)•(a, k) = (b, k).
GGAction pair_gg_action(const GroupGroupoidPtr& pair, const GroupPtr& fibre);
/// Discrete groupoid on O acting trivially on X via ω.
GGAction discrete_gg_action(const GroupGroupoidPtr& discrete, const GroupHom& omega);

struct ActionGroupoid {
  GroupGroupoidPtr gg;
  /// Arrow i of G⋉X is the pair (g, x) with source(g) = ω(x).
  std::vector<std::pair<Arrow, Elem>> pairs;
  /// (g, x) -> g on arrows, x -> ω(x) on objects.
  GroupoidMorphism projection;
};

/// G⋉X: objects X, arrows (g, x) from x to g•x, composition
/// (g', s')∘(g, s) = (g'∘g, s) when s' = g•s, addition componentwise.
ActionGroupoid action_groupoid(const GGAction& action);

struct PullbackAction {
  Pullback pullback;  // X ×_{ω, f0} Ob(G̃)
  GGAction action;    // of G̃ via π2
};

/// g̃•(x, õ) = (f1(g̃)•x, target(g̃)). Errors: TypeMismatch.
PullbackAction pullback_action(const GroupGroupoidMorphism& f, const GGAction& action);

/// A morphism of actions h: (X, ω) -> (X', ω'): a homomorphism with
/// ω'∘h = ω and h(g•x) = g•h(x). Errors: TypeMismatch, NotAMorphism.
void validate_action_morphism(const GGAction& from, const GGAction& to, const GroupHom& h);

/// h × 1 between the pullback actions. Errors as validate_action_morphism.
GroupHom pullback_action_morphism(const GroupGroupoidMorphism& f, const GGAction& from,
                                  const GGAction& to, const GroupHom& h);

}  // namespace xmlift
