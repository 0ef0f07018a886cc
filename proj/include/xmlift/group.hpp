#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xmlift/error.hpp"

namespace xmlift {

// Elements of a finite group are indices 0..order-1; 0 is always the identity.
using Elem = std::size_t;

inline constexpr std::size_t kDefaultSizeBound = 64;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group stored as a validated Cayley table.
///
/// Construction goes through make_group(), which checks closure, identity,
/// inverses and associativity exhaustively and relabels the identity to
/// index 0. Instances are immutable and shared through GroupPtr.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return order_; }
  Elem op(Elem a, Elem b) const { return table_[a * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  static constexpr Elem identity() noexcept { return 0; }

  /// a - b, i.e. a + (-b).
  Elem sub(Elem a, Elem b) const { return op(a, inv(b)); }
  /// g + a - g.
  Elem conj(Elem g, Elem a) const { return op(op(g, a), inv(g)); }

  bool is_abelian() const;
  std::size_t element_order(Elem a) const;

  /// Greedy minimal-index generating set.
  const std::vector<Elem>& generators() const noexcept { return generators_; }

  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Element label, falling back to the decimal index.
  std::string name(Elem a) const;

  std::vector<std::vector<Elem>> rows() const;

  /// Table identity; names are ignored.
  bool operator==(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  friend GroupPtr make_group(const std::vector<std::vector<Elem>>& rows,
                             std::vector<std::string> names);

  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<Elem> generators_;
  std::vector<std::string> names_;
};

/// Validates a raw Cayley table. The identity is moved to index 0 by
/// swapping its label with element 0.
///
/// Errors: MalformedTable, NoIdentity, NoInverse, NotAssociative. The witness
/// names the first violating element or triple in lexicographic order.
GroupPtr make_group(const std::vector<std::vector<Elem>>& rows,
                    std::vector<std::string> names = {});

bool same_group(const GroupPtr& a, const GroupPtr& b);

class GroupHom {
 public:
  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  Elem operator()(Elem x) const { return map_[x]; }
  const std::vector<Elem>& images() const noexcept { return map_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_zero() const;

  /// Same source, target and image table.
  bool operator==(const GroupHom& other) const;

 private:
  friend GroupHom make_hom(GroupPtr, GroupPtr, std::vector<Elem>);
  friend GroupHom unchecked_hom(GroupPtr, GroupPtr, std::vector<Elem>);

  GroupPtr source_;
  GroupPtr target_;
  std::vector<Elem> map_;
};

/// Errors: MalformedTable (wrong length / out of range), NotHomomorphism with
/// the first pair (x, y) where map(x+y) != map(x)+map(y).
GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<Elem> images);

// Only for maps already known to be homomorphisms by construction.
GroupHom unchecked_hom(GroupPtr source, GroupPtr target, std::vector<Elem> images);

GroupHom identity_hom(const GroupPtr& g);
GroupHom zero_hom(const GroupPtr& source, const GroupPtr& target);
/// outer ∘ inner. TypeMismatch unless inner.target == outer.source.
GroupHom compose(const GroupHom& outer, const GroupHom& inner);

class Subgroup {
 public:
  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Elem a) const;
  bool is_subset_of(const Subgroup& other) const;

  /// The subgroup as a group in its own right (elements relabeled in sorted
  /// order, so the identity stays at 0) together with its inclusion.
  std::pair<GroupPtr, GroupHom> as_group() const;
  /// Index of a parent element inside as_group(); nullopt if absent.
  std::optional<Elem> local_index(Elem a) const;

  bool operator==(const Subgroup& other) const {
    return same_group(parent_, other.parent_) && elements_ == other.elements_;
  }

 private:
  friend Subgroup make_subgroup(GroupPtr, std::vector<Elem>);
  friend Subgroup unchecked_subgroup(GroupPtr, std::vector<Elem>);

  GroupPtr parent_;
  std::vector<Elem> elements_;
};

/// NotASubgroup unless the set contains the identity and is closed.
Subgroup make_subgroup(GroupPtr parent, std::vector<Elem> elements);
Subgroup unchecked_subgroup(GroupPtr parent, std::vector<Elem> sorted_elements);
Subgroup generated_subgroup(const GroupPtr& g, std::span<const Elem> generators);
Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);

Subgroup kernel(const GroupHom& h);
Subgroup image(const GroupHom& h);
Subgroup center(const GroupPtr& g);
/// NotASubgroup if s does not live in g.
bool is_normal(const Subgroup& s, const GroupPtr& g);
bool is_normal(const Subgroup& s);

struct Quotient {
  GroupPtr group;
  GroupHom projection;
  /// Minimal element of each coset, indexed by quotient element.
  std::vector<Elem> representatives;
};

/// Coset group G/N; cosets are ordered by their minimal representative.
/// Errors: NotNormal.
Quotient quotient(const Subgroup& normal);

struct Pullback {
  GroupPtr group;
  GroupHom first;
  GroupHom second;
  std::vector<std::pair<Elem, Elem>> pairs;

  /// Index of (x, y) in the pullback group; nullopt if p(x) != q(y).
  std::optional<Elem> index_of(Elem x, Elem y) const;
};

/// {(x, y) : p(x) = q(y)} in lexicographic order. Errors: CodomainMismatch.
Pullback pullback_group(const GroupHom& p, const GroupHom& q);

struct DirectProduct {
  GroupPtr group;
  GroupHom first;
  GroupHom second;
  Elem index_of(Elem x, Elem y) const { return x * right_order + y; }
  std::size_t right_order = 0;
};

DirectProduct direct_product(const GroupPtr& left, const GroupPtr& right);

/// All subgroups, ordered by order and then lexicographically by element
/// set. Errors: SizeBound.
std::vector<Subgroup> subgroups(const GroupPtr& g, std::size_t size_bound = kDefaultSizeBound);

/// Action of `actor` on `space` by automorphisms.
class GroupAction {
 public:
  const GroupPtr& actor() const noexcept { return actor_; }
  const GroupPtr& space() const noexcept { return space_; }
  Elem operator()(Elem b, Elem a) const { return table_[b * space_->order() + a]; }
  const std::vector<Elem>& table() const noexcept { return table_; }
  bool is_trivial() const;

  bool operator==(const GroupAction& other) const;

 private:
  friend GroupAction make_action(GroupPtr, GroupPtr, std::vector<Elem>);
  friend GroupAction unchecked_action(GroupPtr, GroupPtr, std::vector<Elem>);

  GroupPtr actor_;
  GroupPtr space_;
  std::vector<Elem> table_;
};

/// `table` is row-major: table[b * |space| + a] = b·a.
/// Errors: MalformedTable, ActionAxiomViolation with witness (b, a) for the
/// identity law, (b, a, a') for additivity or (b, b', a) for compatibility.
GroupAction make_action(GroupPtr actor, GroupPtr space, std::vector<Elem> table);
GroupAction unchecked_action(GroupPtr actor, GroupPtr space, std::vector<Elem> table);
GroupAction trivial_action(const GroupPtr& actor, const GroupPtr& space);
GroupAction conjugation_action(const GroupPtr& g);
/// x·a := h(x)·a for h: X -> actor.
GroupAction pull_back_action(const GroupAction& action, const GroupHom& h);

/// All homomorphisms source -> target, lexicographic by image table.
/// Errors: SizeBound when either order exceeds the bound.
std::vector<GroupHom> homomorphisms(const GroupPtr& source, const GroupPtr& target,
                                    std::size_t size_bound = kDefaultSizeBound);

struct AutomorphismGroup {
  GroupPtr group;
  /// automorphisms[i] is the permutation table of element i of `group`.
  std::vector<std::vector<Elem>> automorphisms;
  /// Natural action of Aut(G) on G.
  GroupAction action;

  std::optional<Elem> index_of(const std::vector<Elem>& table) const;
};

/// Aut(G) with composition (s∘t)(g) = s(t(g)); element 0 is the identity map.
/// Errors: SizeBound.
AutomorphismGroup automorphism_group(const GroupPtr& g,
                                     std::size_t size_bound = kDefaultSizeBound);

}  // namespace xmlift
