#pragma once

#include <memory>
#include <string_view>

#include "xmlift/group.hpp"

namespace xmlift {

/// A crossed module (A, B, α) with B acting on A.
///
/// Invariants, checked exhaustively by make_crossed_module():
///   CM1  α(b·a) = b + α(a) - b
///   CM2  α(a)·a1 = a + a1 - a
class CrossedModule {
 public:
  const GroupPtr& A() const noexcept { return boundary_.source(); }
  const GroupPtr& B() const noexcept { return boundary_.target(); }
  const GroupHom& boundary() const noexcept { return boundary_; }
  const GroupAction& action() const noexcept { return action_; }
  Elem act(Elem b, Elem a) const { return action_(b, a); }

  bool operator==(const CrossedModule& other) const {
    return boundary_ == other.boundary_ && action_ == other.action_;
  }

 private:
  friend std::shared_ptr<const CrossedModule> make_crossed_module(GroupHom, GroupAction);
  CrossedModule(GroupHom boundary, GroupAction action)
      : boundary_(std::move(boundary)), action_(std::move(action)) {}

  GroupHom boundary_;
  GroupAction action_;
};

using XModPtr = std::shared_ptr<const CrossedModule>;

/// Errors: TypeMismatch, ActionAxiomViolation, CM1Violation (b, a),
/// CM2Violation (a, a1). The action is expected to be a validated
/// GroupAction; its axioms are re-checked here.
XModPtr make_crossed_module(GroupHom boundary, GroupAction action);

bool same_xmod(const XModPtr& a, const XModPtr& b);

struct StructureReport {
  bool image_normal = false;      // α(A) ⊴ B
  bool kernel_central = false;    // ker α ⊆ Z(A)
  bool image_fixes_center = false;  // α(A) acts trivially on Z(A)

  bool all_true() const { return image_normal && kernel_central && image_fixes_center; }
};

/// Throws StructureDefect if any property fails; for a validated crossed
/// module that cannot happen.
StructureReport verify_structure(const CrossedModule& xm);

enum class TransitivityClass { OneTransitive, SimplyTransitive, Transitive, TotallyIntransitive, None };

std::string_view to_string(TransitivityClass tag);

/// Most specific class: bijective, injective, surjective, zero with abelian A.
TransitivityClass classify(const CrossedModule& xm);

struct XModMorphism {
  XModPtr source;
  XModPtr target;
  GroupHom f1;  // A -> A'
  GroupHom f2;  // B -> B'
};

/// Errors: TypeMismatch, SquareNotCommuting (a), NotEquivariant (b, a).
XModMorphism make_morphism(XModPtr source, XModPtr target, GroupHom f1, GroupHom f2);
XModMorphism identity_morphism(const XModPtr& xm);
/// Componentwise outer ∘ inner, revalidated.
XModMorphism compose(const XModMorphism& outer, const XModMorphism& inner);
bool operator==(const XModMorphism& a, const XModMorphism& b);

/// (N, G, inclusion) with conjugation. Errors: NotNormal.
XModPtr inclusion_xmod(const Subgroup& normal);

/// (G, Aut(G), ι) where ι(g) is conjugation by g.
XModPtr automorphism_xmod(const GroupPtr& g, std::size_t size_bound = kDefaultSizeBound);

struct ActionHom {
  AutomorphismGroup aut;  // Aut(A), same table as automorphism_xmod(A)
  GroupHom theta;         // B -> Aut(A), θ(b)(a) = b·a
};

ActionHom action_to_theta(const CrossedModule& xm, std::size_t size_bound = kDefaultSizeBound);

}  // namespace xmlift
