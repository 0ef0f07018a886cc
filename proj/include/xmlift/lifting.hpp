#pragma once

#include <optional>
#include <vector>

#include "xmlift/crossed_module.hpp"

namespace xmlift {

/// A lifting (φ, X, ω) of a base crossed module (A, B, α): ω∘φ = α and
/// (A, X, φ) is a crossed module under x·a := ω(x)·a.
///
/// The induced action is always derived from the base action through ω,
/// never supplied independently.
class Lifting {
 public:
  const XModPtr& base() const noexcept { return base_; }
  const GroupPtr& X() const noexcept { return phi_.target(); }
  const GroupHom& phi() const noexcept { return phi_; }
  const GroupHom& omega() const noexcept { return omega_; }
  /// (A, X, φ) with the induced action.
  const XModPtr& lifted() const noexcept { return lifted_; }

  bool operator==(const Lifting& other) const {
    return same_xmod(base_, other.base_) && phi_ == other.phi_ && omega_ == other.omega_;
  }

 private:
  friend Lifting make_lifting(XModPtr, GroupHom, GroupHom);

  XModPtr base_;
  GroupHom phi_;
  GroupHom omega_;
  XModPtr lifted_;
};

/// Errors: TypeMismatch, TriangleViolation (a), InducedCMViolation (wrapping
/// the CM1/CM2 witness), KernelViolation (a).
Lifting make_lifting(XModPtr base, GroupHom phi, GroupHom omega);

/// (α, B, 1_B).
Lifting identity_lifting(const XModPtr& base);

/// X = A/C, φ the projection, ω(a + C) = α(a). Guarantees ker φ = C and
/// |ker ω|·|C| = |ker α|. Errors: NotSubgroupOfKernel (c), TypeMismatch.
Lifting lifting_from_subgroup(const XModPtr& base, const Subgroup& c);

/// One quotient lifting per subgroup of ker α, in subgroups() order.
std::vector<Lifting> enumerate_liftings(const XModPtr& base,
                                        std::size_t size_bound = kDefaultSizeBound);

/// (A, B, α) viewed as a lifting of (A, Aut(A), ι) over θ: B -> Aut(A).
Lifting as_lifting_of_automorphism_xmod(const XModPtr& xm,
                                        std::size_t size_bound = kDefaultSizeBound);

struct LiftingMorphism {
  Lifting source;
  Lifting target;
  GroupHom f;  // X -> X'
};

/// Errors: BaseMismatch, TypeMismatch, PhiViolation (a), OmegaViolation (x).
LiftingMorphism make_lifting_morphism(Lifting source, Lifting target, GroupHom f);
LiftingMorphism identity_lifting_morphism(const Lifting& l);
LiftingMorphism compose(const LiftingMorphism& outer, const LiftingMorphism& inner);
bool operator==(const LiftingMorphism& a, const LiftingMorphism& b);

/// The unique morphism with f∘φ = φ' when φ is surjective, f(φ(a)) := φ'(a).
/// Errors: NotTransitive if φ is not onto, WellDefinednessDefect if two
/// preimages disagree, then the usual make_lifting_morphism checks.
LiftingMorphism factor_through_phi(const Lifting& source, const Lifting& target);

struct MorphismLiftOptions {
  /// Run the exhaustive uniqueness check when |B̃|·|X| is at most this.
  std::size_t uniqueness_check_limit = 4096;
  std::size_t size_bound = kDefaultSizeBound;
};

/// Lifts (f, g): (Ã, B̃, α̃) -> (A, B, α) through a lifting (φ, X, ω) of the
/// target to (f, g̃): (Ã, B̃, α̃) -> (A, X, φ) with ω∘g̃ = g, where
/// g̃(b̃) = φ(f(ã)) for any ã with α̃(ã) = b̃.
///
/// Errors: BaseMismatch, NotTransitive (α̃ not onto), KernelConditionFails (ã
/// in ker α̃ with f(ã) ∉ ker φ), WellDefinednessDefect.
XModMorphism lift_morphism(const XModMorphism& m, const Lifting& l,
                           const MorphismLiftOptions& options = {});

/// Every hom g̃: B̃ -> X with ω∘g̃ = g and (f, g̃) a crossed-module morphism
/// into (A, X, φ). Independent of lift_morphism's construction.
std::vector<GroupHom> all_morphism_lifts(const XModMorphism& m, const Lifting& l,
                                         std::size_t size_bound = kDefaultSizeBound);

struct PullbackLifting {
  Pullback pullback;        // X ×_{ω,g} B̃
  Lifting lifting;          // (ψ, X ×_{ω,g} B̃, π2) over (Ã, B̃, α̃)
  XModMorphism projection;  // (f, π1): (Ã, X ×_{ω,g} B̃, ψ) -> (A, X, φ)
};

/// ψ(ã) = (φ f(ã), α̃(ã)); the pullback acts on Ã by (x, b̃)·ã = b̃·ã.
/// Errors: BaseMismatch.
PullbackLifting pullback_lifting(const XModMorphism& m, const Lifting& l);

/// h × 1 between the pullback liftings of h.source and h.target along m.
LiftingMorphism pullback_functor(const XModMorphism& m, const LiftingMorphism& h);

}  // namespace xmlift
