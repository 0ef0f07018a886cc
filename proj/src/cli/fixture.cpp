#include "xmlift/fixture.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "xmlift/catalog.hpp"

namespace xmlift {

namespace {

constexpr std::pair<DeclKind, std::string_view> kKinds[] = {
    {DeclKind::Group, "group"},
    {DeclKind::Subgroup, "subgroup"},
    {DeclKind::Hom, "hom"},
    {DeclKind::Action, "action"},
    {DeclKind::XMod, "xmod"},
    {DeclKind::Lifting, "lifting"},
    {DeclKind::Morphism, "morphism"},
    {DeclKind::Derivation, "derivation"},
    {DeclKind::Homotopy, "homotopy"},
    {DeclKind::GroupGroupoid, "groupgroupoid"},
    {DeclKind::GGAction, "ggaction"},
    {DeclKind::GGMorphism, "ggmorphism"},
};

constexpr std::size_t kMaxCatalogOrder = 1024;

bool is_identifier(std::string_view s) {
  if (s.empty() || (s[0] >= '0' && s[0] <= '9')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Whitespace tokens, with ';' and ':' always standing alone.
std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\r') {
      flush();
    } else if (c == ';' || c == ':') {
      flush();
      out.emplace_back(1, c);
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

class Parser {
 public:
  Parser(FixtureDocument& doc, std::size_t size_bound) : doc_(doc), bound_(size_bound) {}

  void declaration(std::size_t line, std::string name, DeclKind kind, std::vector<std::string> tokens) {
    line_ = line;
    name_ = std::move(name);
    tokens_ = std::move(tokens);
    pos_ = 0;
    if (doc_.find(name_)) syntax("duplicate declaration '" + name_ + "'");
    try {
      switch (kind) {
        case DeclKind::Group: doc_.groups.emplace(name_, group()); break;
        case DeclKind::Subgroup: doc_.subgroups.emplace(name_, subgroup()); break;
        case DeclKind::Hom: doc_.homs.emplace(name_, hom()); break;
        case DeclKind::Action: doc_.actions.emplace(name_, action()); break;
        case DeclKind::XMod: doc_.xmods.emplace(name_, xmod()); break;
        case DeclKind::Lifting: doc_.liftings.emplace(name_, lifting()); break;
        case DeclKind::Morphism: doc_.morphisms.emplace(name_, morphism()); break;
        case DeclKind::Derivation: doc_.derivations.emplace(name_, derivation()); break;
        case DeclKind::Homotopy: doc_.homotopies.emplace(name_, homotopy()); break;
        case DeclKind::GroupGroupoid: doc_.group_groupoids.emplace(name_, group_groupoid()); break;
        case DeclKind::GGAction: doc_.gg_actions.emplace(name_, gg_action()); break;
        case DeclKind::GGMorphism: doc_.gg_morphisms.emplace(name_, gg_morphism()); break;
      }
    } catch (const AlgebraError& e) {
      throw FixtureError(FixtureErrorKind::Validation, line_, name_, e.what(), e.code());
    }
    doc_.declarations.push_back({name_, kind, line_});
  }

 private:
  [[noreturn]] void syntax(const std::string& message) const {
    throw FixtureError(FixtureErrorKind::Syntax, line_, name_, message);
  }

  bool at_end() const { return pos_ >= tokens_.size(); }
  const std::string& peek() const {
    static const std::string empty;
    return at_end() ? empty : tokens_[pos_];
  }
  std::string next(std::string_view what) {
    if (at_end()) syntax("expected " + std::string(what) + " at end of declaration");
    return tokens_[pos_++];
  }
  void expect(std::string_view token) {
    std::string got = next("'" + std::string(token) + "'");
    if (got != token) syntax("expected '" + std::string(token) + "', got '" + got + "'");
  }
  bool accept(std::string_view token) {
    if (peek() != token) return false;
    ++pos_;
    return true;
  }
  void finish() {
    if (!at_end()) syntax("unexpected trailing token '" + peek() + "'");
  }
  static std::optional<std::size_t> as_number(std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
  }
  // Constructor arguments beyond this would allocate unreasonable tables.
  std::size_t order_argument() {
    std::size_t n = number();
    if (n > kMaxCatalogOrder)
      throw AlgebraError(ErrorCode::SizeBound, "catalog group argument too large", {n});
    return n;
  }
  std::size_t number() {
    std::string t = next("a number");
    auto v = as_number(t);
    if (!v) syntax("expected a number, got '" + t + "'");
    return *v;
  }
  // Numbers until the end of the declaration or a ';'.
  std::vector<std::size_t> numbers() {
    std::vector<std::size_t> out;
    while (!at_end() && peek() != ";") out.push_back(number());
    return out;
  }
  std::vector<std::vector<std::size_t>> rows(std::string_view stop = "") {
    std::vector<std::vector<std::size_t>> out;
    do {
      std::vector<std::size_t> row;
      while (!at_end() && peek() != ";" && peek() != stop) row.push_back(number());
      out.push_back(std::move(row));
    } while (accept(";"));
    return out;
  }

  template <typename Map>
  const typename Map::mapped_type& lookup(const Map& map, std::string_view what) {
    std::string ref = next(std::string(what) + " name");
    if (!is_identifier(ref)) syntax("expected " + std::string(what) + " name, got '" + ref + "'");
    auto it = map.find(ref);
    if (it == map.end()) {
      std::string message = doc_.find(ref) ? "'" + ref + "' is not a " + std::string(what)
                                           : "undeclared " + std::string(what) + " '" + ref + "'";
      throw FixtureError(FixtureErrorKind::Unresolved, line_, name_, message);
    }
    return it->second;
  }
  XModPtr xmod_ref() {
    std::string ref = next("crossed module name");
    if (auto it = doc_.xmods.find(ref); it != doc_.xmods.end()) return it->second;
    if (auto it = doc_.liftings.find(ref); it != doc_.liftings.end()) return it->second.lifted();
    std::string message = doc_.find(ref) ? "'" + ref + "' is not a crossed module or lifting"
                                         : "undeclared crossed module '" + ref + "'";
    throw FixtureError(FixtureErrorKind::Unresolved, line_, name_, message);
  }

  GroupPtr group() {
    std::string head = next("group constructor");
    GroupPtr g;
    if (head == "cyclic") g = catalog::cyclic(order_argument());
    else if (head == "klein") g = catalog::klein();
    else if (head == "symmetric") g = catalog::symmetric(order_argument());
    else if (head == "dihedral") g = catalog::dihedral(order_argument());
    else if (head == "quaternion") g = catalog::quaternion();
    else if (head == "trivial") g = catalog::trivial();
    else if (head == "table") {
      auto table = rows("names");
      std::vector<std::string> names;
      if (accept("names")) {
        while (!at_end()) {
          std::string n = next("element name");
          if (n.find(',') != std::string::npos) syntax("element names may not contain ','");
          names.push_back(std::move(n));
        }
        if (names.size() != table.size()) syntax("need one name per element");
      }
      g = make_group(table, std::move(names));
    } else {
      syntax("unknown group constructor '" + head + "'");
    }
    finish();
    return g;
  }

  Subgroup subgroup() {
    GroupPtr g = lookup(doc_.groups, "group");
    expect(":");
    auto elems = numbers();
    finish();
    for (auto e : elems)
      if (e >= g->order()) throw AlgebraError(ErrorCode::MalformedTable, "element out of range", {e});
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return make_subgroup(g, std::move(elems));
  }

  GroupHom hom() {
    GroupPtr s = lookup(doc_.groups, "group");
    expect("->");
    GroupPtr t = lookup(doc_.groups, "group");
    expect(":");
    GroupHom h = [&] {
      if (accept("zero")) return zero_hom(s, t);
      if (accept("identity")) {
        if (!same_group(s, t)) throw AlgebraError(ErrorCode::TypeMismatch, "identity needs equal groups");
        return identity_hom(s);
      }
      return make_hom(s, t, numbers());
    }();
    finish();
    return h;
  }

  GroupAction action() {
    GroupPtr actor = lookup(doc_.groups, "group");
    expect("on");
    GroupPtr space = lookup(doc_.groups, "group");
    expect(":");
    GroupAction a = [&] {
      if (accept("trivial")) return trivial_action(actor, space);
      if (accept("conjugation")) {
        if (!same_group(actor, space))
          throw AlgebraError(ErrorCode::TypeMismatch, "conjugation needs actor = space");
        return conjugation_action(actor);
      }
      std::vector<Elem> flat;
      auto table = rows();
      if (table.size() != actor->order())
        throw AlgebraError(ErrorCode::MalformedTable, "need one row per actor element");
      for (auto& row : table) {
        if (row.size() != space->order())
          throw AlgebraError(ErrorCode::MalformedTable, "need one entry per space element");
        flat.insert(flat.end(), row.begin(), row.end());
      }
      return make_action(actor, space, std::move(flat));
    }();
    finish();
    return a;
  }

  XModPtr xmod() {
    std::string head = next("crossed module constructor");
    XModPtr xm;
    if (head == "boundary") {
      GroupHom h = lookup(doc_.homs, "hom");
      expect("action");
      GroupAction a = lookup(doc_.actions, "action");
      xm = make_crossed_module(h, a);
    } else if (head == "inclusion") {
      xm = inclusion_xmod(lookup(doc_.subgroups, "subgroup"));
    } else if (head == "automorphism") {
      xm = automorphism_xmod(lookup(doc_.groups, "group"), bound_);
    } else {
      syntax("unknown crossed module constructor '" + head + "'");
    }
    finish();
    return xm;
  }

  Lifting lifting() {
    XModPtr base = xmod_ref();
    expect(":");
    Lifting l = [&] {
      if (accept("identity")) return identity_lifting(base);
      if (accept("subgroup")) {
        auto elems = numbers();
        for (auto e : elems)
          if (e >= base->A()->order())
            throw AlgebraError(ErrorCode::MalformedTable, "element out of range", {e});
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        return lifting_from_subgroup(base, make_subgroup(base->A(), std::move(elems)));
      }
      GroupHom phi = lookup(doc_.homs, "hom");
      GroupHom omega = lookup(doc_.homs, "hom");
      return make_lifting(base, phi, omega);
    }();
    finish();
    return l;
  }

  XModMorphism morphism() {
    if (accept("identity")) {
      XModPtr xm = xmod_ref();
      finish();
      return identity_morphism(xm);
    }
    XModPtr s = xmod_ref();
    expect("->");
    XModPtr t = xmod_ref();
    expect(":");
    GroupHom f1 = lookup(doc_.homs, "hom");
    GroupHom f2 = lookup(doc_.homs, "hom");
    finish();
    return make_morphism(s, t, f1, f2);
  }

  Derivation derivation() {
    XModPtr xm = xmod_ref();
    expect(":");
    auto values = numbers();
    finish();
    return make_derivation(xm, std::move(values));
  }

  Homotopy homotopy() {
    XModMorphism from = lookup(doc_.morphisms, "morphism");
    expect("->");
    XModMorphism to = lookup(doc_.morphisms, "morphism");
    expect(":");
    auto values = numbers();
    finish();
    return make_homotopy(std::move(values), from, to);
  }

  GroupGroupoidPtr group_groupoid() {
    std::string head = next("group-groupoid constructor");
    GroupPtr g = lookup(doc_.groups, "group");
    finish();
    if (head == "onepoint") return one_object_group_groupoid(g);
    if (head == "pair") return pair_group_groupoid(g);
    if (head == "discrete") return discrete_group_groupoid(g);
    syntax("unknown group-groupoid constructor '" + head + "'");
  }

  GGAction gg_action() {
    std::string head = next("action constructor");
    GroupGroupoidPtr gg = lookup(doc_.group_groupoids, "groupgroupoid");
    GGAction a = [&] {
      if (head == "regular") return regular_gg_action(gg);
      if (head == "pair") return pair_gg_action(gg, lookup(doc_.groups, "group"));
      if (head == "discrete") return discrete_gg_action(gg, lookup(doc_.homs, "hom"));
      syntax("unknown group-groupoid action constructor '" + head + "'");
    }();
    finish();
    return a;
  }

  GroupGroupoidMorphism gg_morphism() {
    std::string head = next("morphism constructor");
    GroupHom h = lookup(doc_.homs, "hom");
    finish();
    if (head == "onepoint") return one_object_morphism(h);
    if (head == "pair") return pair_morphism(h);
    if (head == "discrete") return discrete_morphism(h);
    syntax("unknown group-groupoid morphism constructor '" + head + "'");
  }

  FixtureDocument& doc_;
  std::size_t bound_;
  std::size_t line_ = 0;
  std::string name_;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view to_string(FixtureErrorKind kind) {
  switch (kind) {
    case FixtureErrorKind::Syntax: return "SyntaxError";
    case FixtureErrorKind::Unresolved: return "UnresolvedReference";
    case FixtureErrorKind::Validation: return "ValidationError";
  }
  return "FixtureError";
}

FixtureError::FixtureError(FixtureErrorKind kind, std::size_t line, std::string name,
                           const std::string& message, std::optional<ErrorCode> code)
    : std::runtime_error("line " + std::to_string(line) + (name.empty() ? "" : " (" + name + ")") +
                         ": " + std::string(to_string(kind)) +
                         (code ? "(" + std::string(to_string(*code)) + ")" : "") + ": " + message),
      kind_(kind),
      line_(line),
      name_(std::move(name)),
      code_(code) {}

std::string_view to_string(DeclKind kind) {
  for (auto [k, s] : kKinds)
    if (k == kind) return s;
  return "unknown";
}

std::optional<DeclKind> decl_kind_from_string(std::string_view s) {
  for (auto [k, name] : kKinds)
    if (name == s) return k;
  return std::nullopt;
}

const Declaration* FixtureDocument::find(std::string_view name) const {
  for (const auto& d : declarations)
    if (d.name == name) return &d;
  return nullptr;
}

std::vector<const Declaration*> FixtureDocument::of_kind(DeclKind kind) const {
  std::vector<const Declaration*> out;
  for (const auto& d : declarations)
    if (d.kind == kind) out.push_back(&d);
  return out;
}

XModPtr FixtureDocument::xmod_or_lifted(const std::string& name) const {
  if (auto it = xmods.find(name); it != xmods.end()) return it->second;
  if (auto it = liftings.find(name); it != liftings.end()) return it->second.lifted();
  return nullptr;
}

FixtureDocument parse_fixture(std::string_view text, std::size_t size_bound) {
  FixtureDocument doc;
  Parser parser(doc, size_bound);
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& message) {
      throw FixtureError(FixtureErrorKind::Syntax, line_no, "", message);
    };
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) fail("expected 'name : kind = payload'");
    std::size_t eq = line.find('=', colon);
    if (eq == std::string_view::npos) fail("expected '=' after the kind");
    std::string_view name = trim(line.substr(0, colon));
    std::string_view kind = trim(line.substr(colon + 1, eq - colon - 1));
    if (!is_identifier(name)) fail("invalid declaration name '" + std::string(name) + "'");
    auto k = decl_kind_from_string(kind);
    if (!k) {
      throw FixtureError(FixtureErrorKind::Syntax, line_no, std::string(name),
                         "unknown declaration kind '" + std::string(kind) + "'");
    }
    parser.declaration(line_no, std::string(name), *k, tokenize(line.substr(eq + 1)));
    if (end == text.size()) break;
  }
  return doc;
}

}  // namespace xmlift
