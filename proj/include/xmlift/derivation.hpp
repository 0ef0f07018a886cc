#pragma once

#include <optional>
#include <vector>

#include "xmlift/homotopy.hpp"
#include "xmlift/lifting.hpp"

namespace xmlift {

enum class DerivationSearch {
  // Backtracking in element order; every assignment is propagated through
  // d(b + b1) = d(b) + b·d(b1) and conflicts prune the branch.
  Pruned,
  // All |A|^|B| maps, filtered by the derivation identity.
  Exhaustive,
};

inline constexpr std::size_t kExhaustiveSearchLimit = 1'000'000;

struct DerivationOptions {
  DerivationSearch search = DerivationSearch::Pruned;
  std::size_t size_bound = kDefaultSizeBound;
};

/// All maps d: actor -> space with d(b + b1) = d(b) + b·d(b1), sorted
/// lexicographically. Errors: SizeBound.
std::vector<std::vector<Elem>> crossed_homomorphisms(const GroupAction& action,
                                                     const DerivationOptions& options = {});

/// A derivation d: B -> A of (A, B, α) with its endomorphisms
/// θ_d(a) = d(α(a)) + a and σ_d(b) = α(d(b)) + b.
class Derivation {
 public:
  const XModPtr& xm() const noexcept { return xm_; }
  Elem operator()(Elem b) const { return values_[b]; }
  const std::vector<Elem>& values() const noexcept { return values_; }
  const std::vector<Elem>& theta() const noexcept { return theta_; }
  const std::vector<Elem>& sigma() const noexcept { return sigma_; }

  bool operator==(const Derivation& other) const {
    return same_xmod(xm_, other.xm_) && values_ == other.values_;
  }

 private:
  friend Derivation make_derivation(XModPtr, std::vector<Elem>);

  XModPtr xm_;
  std::vector<Elem> values_;
  std::vector<Elem> theta_;
  std::vector<Elem> sigma_;
};

/// Errors: MalformedTable, NotDerivation (b, b1). Throws StructureDefect if
/// θ_d, σ_d fail to be endomorphisms or θ_d∘d != d∘σ_d.
Derivation make_derivation(XModPtr xm, std::vector<Elem> values);
Derivation zero_derivation(const XModPtr& xm);

/// d(b) = d1(σ_{d2}(b)) + d2(b). The alternative form θ_{d1}(d2(b)) + d1(b)
/// is evaluated as well; any disagreement raises FormulaMismatch (b).
/// Errors: BaseMismatch.
Derivation whitehead_compose(const Derivation& d1, const Derivation& d2);

struct DerivationSemigroup {
  XModPtr xm;
  std::vector<Derivation> elements;          // lexicographic by value table
  std::vector<std::vector<std::size_t>> product;  // product[i][j] = i∘j
  std::vector<std::size_t> units;            // the Whitehead group, ascending
  std::vector<std::optional<std::size_t>> inverse;

  std::optional<std::size_t> index_of(const Derivation& d) const;
  bool is_unit(std::size_t i) const { return inverse[i].has_value(); }
};

DerivationSemigroup enumerate_derivations(const XModPtr& xm,
                                          const DerivationOptions& options = {});

struct RegularityCertificate {
  bool theta_bijective = false;
  bool sigma_bijective = false;
  std::optional<bool> semigroup_unit;  // set when a semigroup was supplied
  bool regular = false;
};

/// Regular iff θ_d is bijective. σ_d bijectivity and, when `semigroup` is
/// given, invertibility in it must agree; otherwise StructureDefect.
/// Errors: RequiresEnumeration if `require_unit_check` without a semigroup.
RegularityCertificate is_regular(const Derivation& d,
                                 const DerivationSemigroup* semigroup = nullptr,
                                 bool require_unit_check = false);

/// d̃ = d∘ω as a derivation of (A, X, φ); checks θ_d = θ_d̃ and
/// σ_d∘ω = ω∘σ_d̃, and that regular d lifts to regular d̃.
/// Errors: BaseMismatch.
Derivation lift_derivation(const Derivation& d, const Lifting& l);

/// All homs s: B -> X with ω∘s = 1_B. Errors: SizeBound.
std::vector<GroupHom> find_sections(const GroupHom& omega,
                                    std::size_t size_bound = kDefaultSizeBound);

/// d = d̃∘s as a derivation of the base. Errors: BaseMismatch, NotASection (b).
Derivation descend_derivation(const Derivation& lifted, const Lifting& l,
                              const GroupHom& section);

/// The map d -> d∘ω from Der(B, A) into Der(X, A), given by indices.
struct DerivationLiftMap {
  std::vector<std::size_t> image;
  bool injective = false;
  bool multiplicative = false;   // lift(d1∘d2) = lift(d1)∘lift(d2)
  bool preserves_units = false;  // units land in units
};

DerivationLiftMap lift_derivation_semigroup(const DerivationSemigroup& base,
                                            const Lifting& l,
                                            const DerivationSemigroup& lifted);

struct EndomorphismPair {
  XModMorphism morphism;  // (θ_d, σ_d)
  Homotopy homotopy;      // d: (θ_d, σ_d) ≃ (1_A, 1_B)
};

EndomorphismPair derivation_to_endomorphism_morphism(const Derivation& d);

}  // namespace xmlift
