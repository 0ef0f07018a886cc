#pragma once

#include <vector>

#include "xmlift/crossed_module.hpp"
#include "xmlift/lifting.hpp"

namespace xmlift {

/// A homotopy d: (f1, g1) ≃ (f2, g2) between crossed-module morphisms
/// (Ã, B̃, α̃) -> (A, B, α), given as a map d: B̃ -> A with
///   H1  d(b1 + b2) = d(b1) + g2(b1)·d(b2)
///   H2  d(α̃(ã)) = f1(ã) - f2(ã)
///   H3  α(d(b̃)) = g1(b̃) - g2(b̃)
///
/// H1 twists by the target morphism's g2. With that convention every
/// derivation d satisfies d: (θ_d, σ_d) ≃ (1_A, 1_B); twisting by g1 agrees
/// only when A is abelian enough for the values of d to commute.
class Homotopy {
 public:
  Elem operator()(Elem b) const { return values_[b]; }
  const std::vector<Elem>& values() const noexcept { return values_; }
  const XModMorphism& from() const noexcept { return from_; }
  const XModMorphism& to() const noexcept { return to_; }

 private:
  friend Homotopy make_homotopy(std::vector<Elem>, XModMorphism, XModMorphism);

  std::vector<Elem> values_;
  XModMorphism from_;
  XModMorphism to_;
};

/// Errors: TypeMismatch, MalformedTable, H1Violation (b1, b2),
/// H2Violation (ã), H3Violation (b̃).
Homotopy make_homotopy(std::vector<Elem> d, XModMorphism from, XModMorphism to);

/// Re-validates the same d between lifted morphisms (f1, g̃1), (f2, g̃2) into
/// the lifted crossed module (A, X, φ). Errors: BaseMismatch, OmegaViolation
/// if ω∘g̃i != gi, plus any H1-H3 violation.
Homotopy homotopy_lift(const Homotopy& h, const Lifting& l, const XModMorphism& lifted_from,
                       const XModMorphism& lifted_to);

/// Every homotopy ending at `to`: for each g2-twisted derivation d the
/// starting morphism is f1 = dα̃ + f2, g1 = αd + g2.
std::vector<Homotopy> homotopies_into(const XModMorphism& to,
                                      std::size_t size_bound = kDefaultSizeBound);

}  // namespace xmlift
