#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xmlift/derivation.hpp"
#include "xmlift/groupoid.hpp"
#include "xmlift/homotopy.hpp"
#include "xmlift/lifting.hpp"

namespace xmlift {

enum class FixtureErrorKind { Syntax, Unresolved, Validation };

std::string_view to_string(FixtureErrorKind kind);

/// Parse or resolution failure at a declaration. Validation errors keep the
/// underlying AlgebraError code.
class FixtureError : public std::runtime_error {
 public:
  FixtureError(FixtureErrorKind kind, std::size_t line, std::string name, const std::string& message,
               std::optional<ErrorCode> code = std::nullopt);
  FixtureErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& name() const noexcept { return name_; }
  const std::optional<ErrorCode>& code() const noexcept { return code_; }

 private:
  FixtureErrorKind kind_;
  std::size_t line_;
  std::string name_;
  std::optional<ErrorCode> code_;
};

enum class DeclKind {
  Group, Subgroup, Hom, Action, XMod, Lifting, Morphism, Derivation, Homotopy,
  GroupGroupoid, GGAction, GGMorphism,
};

std::string_view to_string(DeclKind kind);
std::optional<DeclKind> decl_kind_from_string(std::string_view s);

struct Declaration {
  std::string name;
  DeclKind kind;
  std::size_t line;
};

/// A resolved fixture: every declaration validated, in source order.
struct FixtureDocument {
  std::vector<Declaration> declarations;
  std::map<std::string, GroupPtr> groups;
  std::map<std::string, Subgroup> subgroups;
  std::map<std::string, GroupHom> homs;
  std::map<std::string, GroupAction> actions;
  std::map<std::string, XModPtr> xmods;
  std::map<std::string, Lifting> liftings;
  std::map<std::string, XModMorphism> morphisms;
  std::map<std::string, Derivation> derivations;
  std::map<std::string, Homotopy> homotopies;
  std::map<std::string, GroupGroupoidPtr> group_groupoids;
  std::map<std::string, GGAction> gg_actions;
  std::map<std::string, GroupGroupoidMorphism> gg_morphisms;

  const Declaration* find(std::string_view name) const;
  std::vector<const Declaration*> of_kind(DeclKind kind) const;
  /// A crossed-module name, or a lifting name standing for (A, X, φ).
  XModPtr xmod_or_lifted(const std::string& name) const;
};

/// Parses the line-oriented declaration language documented in
/// docs/fixture-format.md. References must name earlier declarations.
FixtureDocument parse_fixture(std::string_view text, std::size_t size_bound = kDefaultSizeBound);

}  // namespace xmlift
