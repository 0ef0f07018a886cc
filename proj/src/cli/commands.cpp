#include "xmlift/commands.hpp"

#include <functional>
#include <utility>

#include "xmlift/catalog.hpp"

namespace xmlift {

namespace {

std::vector<std::string> labels_for(const GroupPtr& g, const std::vector<Elem>& items) {
  if (!g->has_names()) return {};
  std::vector<std::string> out;
  for (Elem e : items) out.push_back(g->name(e));
  return out;
}

void element_list(Report& r, std::string key, const GroupPtr& g, std::vector<Elem> items) {
  auto labels = labels_for(g, items);
  r.list(std::move(key), std::move(items), std::move(labels));
}

std::vector<Elem> all_elements(const GroupPtr& g) {
  std::vector<Elem> out(g->order());
  for (Elem e = 0; e < out.size(); ++e) out[e] = e;
  return out;
}

class Context {
 public:
  Context(const FixtureDocument& doc, const CommandOptions& options) : doc_(doc), options_(options) {}

  std::string name_of(const std::string& role, DeclKind kind, DeclKind alt) const {
    if (auto it = options_.operands.find(role); it != options_.operands.end()) {
      const Declaration* d = doc_.find(it->second);
      if (!d) throw UsageError("no declaration named '" + it->second + "'");
      if (d->kind != kind && d->kind != alt)
        throw UsageError("--" + role + " '" + it->second + "' is a " + std::string(to_string(d->kind)) +
                         ", not a " + std::string(to_string(kind)));
      return it->second;
    }
    auto candidates = doc_.of_kind(kind);
    if (candidates.size() != 1)
      throw UsageError("specify --" + role + ": the fixture declares " +
                       std::to_string(candidates.size()) + " " + std::string(to_string(kind)) +
                       " declarations");
    return candidates.front()->name;
  }
  std::string name_of(const std::string& role, DeclKind kind) const { return name_of(role, kind, kind); }

  std::pair<std::string, XModPtr> xmod() const {
    std::string n = name_of("xmod", DeclKind::XMod, DeclKind::Lifting);
    return {n, doc_.xmod_or_lifted(n)};
  }
  std::pair<std::string, Lifting> lifting() const {
    std::string n = name_of("lifting", DeclKind::Lifting);
    return {n, doc_.liftings.at(n)};
  }
  std::pair<std::string, XModMorphism> morphism() const {
    std::string n = name_of("morphism", DeclKind::Morphism);
    return {n, doc_.morphisms.at(n)};
  }
  std::pair<std::string, Homotopy> homotopy() const {
    std::string n = name_of("homotopy", DeclKind::Homotopy);
    return {n, doc_.homotopies.at(n)};
  }
  std::pair<std::string, Derivation> derivation(const std::string& role = "derivation") const {
    std::string n = name_of(role, DeclKind::Derivation);
    return {n, doc_.derivations.at(n)};
  }
  std::pair<std::string, GGAction> gg_action() const {
    std::string n = name_of("ggaction", DeclKind::GGAction);
    return {n, doc_.gg_actions.at(n)};
  }
  std::pair<std::string, GroupGroupoidMorphism> gg_morphism() const {
    std::string n = name_of("ggmorphism", DeclKind::GGMorphism);
    return {n, doc_.gg_morphisms.at(n)};
  }
  bool has(const std::string& role) const { return options_.operands.count(role) != 0; }

  const FixtureDocument& doc() const { return doc_; }
  const CommandOptions& options() const { return options_; }

 private:
  const FixtureDocument& doc_;
  const CommandOptions& options_;
};

Report check(const Context& ctx) {
  const FixtureDocument& doc = ctx.doc();
  Report r;
  r.count("declarations", doc.declarations.size());
  for (const auto& d : doc.declarations) {
    const std::string p = "decl." + d.name;
    r.scalar(p + ".kind", std::string(to_string(d.kind)));
    r.count(p + ".line", d.line);
    switch (d.kind) {
      case DeclKind::Group: {
        const GroupPtr& g = doc.groups.at(d.name);
        r.count(p + ".order", g->order());
        r.flag(p + ".abelian", g->is_abelian());
        break;
      }
      case DeclKind::Subgroup:
        r.count(p + ".order", doc.subgroups.at(d.name).order());
        r.flag(p + ".normal", is_normal(doc.subgroups.at(d.name)));
        break;
      case DeclKind::Hom: {
        const GroupHom& h = doc.homs.at(d.name);
        element_list(r, p + ".kernel", h.source(), kernel(h).elements());
        element_list(r, p + ".image", h.target(), image(h).elements());
        break;
      }
      case DeclKind::Action:
        r.flag(p + ".trivial", doc.actions.at(d.name).is_trivial());
        break;
      case DeclKind::XMod: {
        const CrossedModule& xm = *doc.xmods.at(d.name);
        r.flag(p + ".structure", verify_structure(xm).all_true());
        r.scalar(p + ".class", std::string(to_string(classify(xm))));
        break;
      }
      case DeclKind::Lifting: {
        const Lifting& l = doc.liftings.at(d.name);
        r.count(p + ".X.order", l.X()->order());
        element_list(r, p + ".ker_phi", l.base()->A(), kernel(l.phi()).elements());
        break;
      }
      case DeclKind::Morphism:
        r.flag(p + ".valid", true);
        break;
      case DeclKind::Derivation:
        r.flag(p + ".regular", is_regular(doc.derivations.at(d.name)).regular);
        break;
      case DeclKind::Homotopy:
        r.flag(p + ".valid", true);
        break;
      case DeclKind::GroupGroupoid: {
        const auto& gg = doc.group_groupoids.at(d.name);
        r.count(p + ".objects", gg->groupoid.object_count());
        r.count(p + ".arrows", gg->groupoid.arrow_count());
        break;
      }
      case DeclKind::GGAction:
        r.count(p + ".space.order", doc.gg_actions.at(d.name).space()->order());
        break;
      case DeclKind::GGMorphism:
        r.flag(p + ".covering", is_covering_morphism(doc.gg_morphisms.at(d.name).functor()).covering);
        break;
    }
  }
  r.scalar("status", "ok");
  return r;
}

Report classify_cmd(const Context& ctx) {
  auto [name, xm] = ctx.xmod();
  Report r;
  r.scalar("xmod", name);
  r.count("A.order", xm->A()->order());
  r.count("B.order", xm->B()->order());
  r.flag("A.abelian", xm->A()->is_abelian());
  r.flag("boundary.injective", xm->boundary().is_injective());
  r.flag("boundary.surjective", xm->boundary().is_surjective());
  r.flag("boundary.zero", xm->boundary().is_zero());
  r.scalar("class", std::string(to_string(classify(*xm))));
  return r;
}

Report liftings_cmd(const Context& ctx) {
  auto [name, xm] = ctx.xmod();
  const std::size_t bound = ctx.options().size_bound;
  Report r;
  r.scalar("xmod", name);
  Subgroup k = kernel(xm->boundary());
  element_list(r, "kernel", xm->A(), k.elements());
  auto ls = enumerate_liftings(xm, bound);
  r.count("count", ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const std::string p = "lifting." + std::to_string(i);
    element_list(r, p + ".C", xm->A(), kernel(ls[i].phi()).elements());
    r.count(p + ".X.order", ls[i].X()->order());
    r.count(p + ".ker_omega.order", kernel(ls[i].omega()).order());
    r.list(p + ".phi", ls[i].phi().images());
    element_list(r, p + ".omega", xm->B(), ls[i].omega().images());
  }
  return r;
}

Report lift_morphism_cmd(const Context& ctx) {
  auto [mname, m] = ctx.morphism();
  auto [lname, l] = ctx.lifting();
  Report r;
  r.scalar("morphism", mname);
  r.scalar("lifting", lname);
  MorphismLiftOptions opts;
  opts.size_bound = ctx.options().size_bound;
  XModMorphism up = lift_morphism(m, l, opts);
  r.flag("kernel_condition", true);
  element_list(r, "g_tilde", l.X(), up.f2.images());
  r.count("lifts_found", all_morphism_lifts(m, l, ctx.options().size_bound).size());
  return r;
}

Report pullback_cmd(const Context& ctx) {
  auto [mname, m] = ctx.morphism();
  auto [lname, l] = ctx.lifting();
  PullbackLifting p = pullback_lifting(m, l);
  Report r;
  r.scalar("morphism", mname);
  r.scalar("lifting", lname);
  r.count("pullback.order", p.pullback.group->order());
  std::vector<std::vector<std::size_t>> pairs;
  for (auto [x, b] : p.pullback.pairs) pairs.push_back({x, b});
  r.table("pullback.pairs", std::move(pairs));
  r.list("psi", p.lifting.phi().images());
  r.list("pi2", p.lifting.omega().images());
  r.list("projection.pi1", p.projection.f2.images());
  r.scalar("class", std::string(to_string(classify(*p.lifting.lifted()))));
  return r;
}

Report homotopy_check_cmd(const Context& ctx) {
  auto [name, h] = ctx.homotopy();
  Report r;
  r.scalar("homotopy", name);
  element_list(r, "d", h.from().target->A(), h.values());
  r.list("from.f1", h.from().f1.images());
  r.list("from.f2", h.from().f2.images());
  r.list("to.f1", h.to().f1.images());
  r.list("to.f2", h.to().f2.images());
  r.scalar("H1", "ok");
  r.scalar("H2", "ok");
  r.scalar("H3", "ok");
  return r;
}

Report homotopy_lift_cmd(const Context& ctx) {
  auto [hname, h] = ctx.homotopy();
  auto [lname, l] = ctx.lifting();
  MorphismLiftOptions opts;
  opts.size_bound = ctx.options().size_bound;
  XModMorphism up1 = lift_morphism(h.from(), l, opts);
  XModMorphism up2 = lift_morphism(h.to(), l, opts);
  Homotopy lifted = homotopy_lift(h, l, up1, up2);
  Report r;
  r.scalar("homotopy", hname);
  r.scalar("lifting", lname);
  element_list(r, "g1_tilde", l.X(), up1.f2.images());
  element_list(r, "g2_tilde", l.X(), up2.f2.images());
  std::vector<Elem> phi_d;
  for (Elem v : lifted.values()) phi_d.push_back(l.phi()(v));
  element_list(r, "phi_d", l.X(), phi_d);
  r.scalar("upstairs", "valid");
  return r;
}

Report derivations_cmd(const Context& ctx) {
  auto [name, xm] = ctx.xmod();
  DerivationSemigroup s = enumerate_derivations(xm, {DerivationSearch::Pruned, ctx.options().size_bound});
  Report r;
  r.scalar("xmod", name);
  r.count("count", s.elements.size());
  std::vector<std::vector<std::size_t>> values;
  for (const auto& d : s.elements) values.push_back(d.values());
  r.table("derivations", std::move(values));
  r.count("unit_count", s.units.size());
  r.list("units", s.units);
  std::vector<std::size_t> inverses;
  for (auto u : s.units) inverses.push_back(*s.inverse[u]);
  r.list("unit_inverses", std::move(inverses));
  r.table("product", s.product);
  for (std::size_t i = 0; i < s.elements.size(); ++i) is_regular(s.elements[i], &s);
  r.scalar("regularity", "theta, sigma and unit checks agree");
  return r;
}

Report whitehead_cmd(const Context& ctx) {
  auto [n1, d1] = ctx.derivation();
  auto [n2, d2] = ctx.has("other") ? ctx.derivation("other") : std::make_pair(n1, d1);
  Derivation d = whitehead_compose(d1, d2);
  const GroupPtr& a = d.xm()->A();
  Report r;
  r.scalar("d1", n1);
  r.scalar("d2", n2);
  element_list(r, "product", a, d.values());
  element_list(r, "theta", a, d.theta());
  element_list(r, "sigma", d.xm()->B(), d.sigma());
  r.flag("regular", is_regular(d).regular);
  return r;
}

Report lift_derivation_cmd(const Context& ctx) {
  auto [dname, d] = ctx.derivation();
  auto [lname, l] = ctx.lifting();
  Derivation up = lift_derivation(d, l);
  const GroupPtr& a = d.xm()->A();
  Report r;
  r.scalar("derivation", dname);
  r.scalar("lifting", lname);
  element_list(r, "d", a, d.values());
  element_list(r, "lifted", a, up.values());
  element_list(r, "theta", a, d.theta());
  element_list(r, "lifted.theta", a, up.theta());
  element_list(r, "sigma", d.xm()->B(), d.sigma());
  element_list(r, "lifted.sigma", l.X(), up.sigma());
  r.flag("regular", is_regular(d).regular);
  r.flag("lifted.regular", is_regular(up).regular);
  return r;
}

GroupHom omega_operand(const Context& ctx, std::string& label) {
  if (ctx.has("hom")) {
    label = ctx.name_of("hom", DeclKind::Hom);
    return ctx.doc().homs.at(label);
  }
  auto [lname, l] = ctx.lifting();
  label = lname;
  return l.omega();
}

Report sections_cmd(const Context& ctx) {
  std::string label;
  GroupHom omega = omega_operand(ctx, label);
  auto ss = find_sections(omega, ctx.options().size_bound);
  Report r;
  r.scalar("omega", label);
  r.count("count", ss.size());
  std::vector<std::vector<std::size_t>> rows;
  for (const auto& s : ss) rows.push_back(s.images());
  r.table("sections", std::move(rows));
  return r;
}

Report descend_cmd(const Context& ctx) {
  auto [dname, d] = ctx.derivation();
  auto [lname, l] = ctx.lifting();
  auto ss = find_sections(l.omega(), ctx.options().size_bound);
  if (ctx.options().section >= ss.size()) {
    throw AlgebraError(ErrorCode::NotASection, "requested section " +
                                                   std::to_string(ctx.options().section) + " of " +
                                                   std::to_string(ss.size()));
  }
  const GroupHom& s = ss[ctx.options().section];
  Derivation down = descend_derivation(d, l, s);
  Report r;
  r.scalar("derivation", dname);
  r.scalar("lifting", lname);
  r.count("section_index", ctx.options().section);
  element_list(r, "section", l.X(), s.images());
  element_list(r, "descended", down.xm()->A(), down.values());
  DerivationSemigroup base = enumerate_derivations(l.base(), {DerivationSearch::Pruned, ctx.options().size_bound});
  DerivationSemigroup lifted = enumerate_derivations(l.lifted(), {DerivationSearch::Pruned, ctx.options().size_bound});
  r.flag("lift_injective", lift_derivation_semigroup(base, l, lifted).injective);
  return r;
}

void star_sizes(Report& r, const std::string& prefix, const CoveringReport& c) {
  r.flag(prefix + "covering", c.covering);
  r.scalar(prefix + "witness", c.witness ? std::to_string(*c.witness) : "none");
  r.list(prefix + "source_star_sizes", c.source_star_sizes);
  r.list(prefix + "target_star_sizes", c.target_star_sizes);
}

Report action_groupoid_cmd(const Context& ctx) {
  auto [name, act] = ctx.gg_action();
  ActionGroupoid ag = action_groupoid(act);
  const FiniteGroupoid& gd = ag.gg->groupoid;
  Report r;
  r.scalar("ggaction", name);
  r.count("objects", gd.object_count());
  r.count("arrows", gd.arrow_count());
  std::vector<std::vector<std::size_t>> pairs;
  std::vector<std::size_t> src, tgt;
  for (Arrow i = 0; i < gd.arrow_count(); ++i) {
    pairs.push_back({ag.pairs[i].first, ag.pairs[i].second});
    src.push_back(gd.source(i));
    tgt.push_back(gd.target(i));
  }
  r.table("pairs", std::move(pairs));
  r.list("source", std::move(src));
  r.list("target", std::move(tgt));
  star_sizes(r, "projection.", is_covering_morphism(ag.projection));
  return r;
}

Report covering_check_cmd(const Context& ctx) {
  auto [name, f] = ctx.gg_morphism();
  Report r;
  r.scalar("ggmorphism", name);
  star_sizes(r, "", is_covering_morphism(f.functor()));
  return r;
}

Report pullback_action_cmd(const Context& ctx) {
  auto [fname, f] = ctx.gg_morphism();
  auto [aname, act] = ctx.gg_action();
  PullbackAction p = pullback_action(f, act);
  Report r;
  r.scalar("ggmorphism", fname);
  r.scalar("ggaction", aname);
  r.count("pullback.order", p.pullback.group->order());
  std::vector<std::vector<std::size_t>> pairs;
  for (auto [x, o] : p.pullback.pairs) pairs.push_back({x, o});
  r.table("pullback.pairs", std::move(pairs));
  r.list("omega", p.action.omega().images());
  std::vector<std::vector<std::size_t>> table;
  const FiniteGroupoid& gd = f.source->groupoid;
  for (Arrow g = 0; g < gd.arrow_count(); ++g)
    for (Elem y = 0; y < p.pullback.pairs.size(); ++y)
      if (auto gy = p.action.act(g, y)) table.push_back({g, y, *gy});
  r.table("action", std::move(table));
  r.flag("covering", is_covering_morphism(action_groupoid(p.action).projection).covering);
  return r;
}

using Handler = Report (*)(const Context&);

const std::vector<std::pair<std::string_view, Handler>>& handlers() {
  static const std::vector<std::pair<std::string_view, Handler>> table = {
      {"check", check},
      {"classify", classify_cmd},
      {"liftings", liftings_cmd},
      {"lift-morphism", lift_morphism_cmd},
      {"pullback", pullback_cmd},
      {"homotopy-check", homotopy_check_cmd},
      {"homotopy-lift", homotopy_lift_cmd},
      {"derivations", derivations_cmd},
      {"whitehead", whitehead_cmd},
      {"lift-derivation", lift_derivation_cmd},
      {"sections", sections_cmd},
      {"descend", descend_cmd},
      {"action-groupoid", action_groupoid_cmd},
      {"covering-check", covering_check_cmd},
      {"pullback-action", pullback_action_cmd},
  };
  return table;
}

}  // namespace

const std::vector<std::string_view>& command_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (auto& [n, h] : handlers()) out.push_back(n);
    return out;
  }();
  return names;
}

Report run_command(std::string_view command, const FixtureDocument& doc, const CommandOptions& options) {
  for (auto& [n, h] : handlers()) {
    if (n == command) {
      Context ctx(doc, options);
      return h(ctx);
    }
  }
  throw UsageError("unknown command '" + std::string(command) + "'");
}

Report catalog_report() {
  struct Entry {
    std::string keyword;
    GroupPtr group;
  };
  const std::vector<Entry> entries = {
      {"trivial", catalog::trivial()},       {"cyclic.2", catalog::cyclic(2)},
      {"cyclic.3", catalog::cyclic(3)},      {"cyclic.4", catalog::cyclic(4)},
      {"klein", catalog::klein()},           {"symmetric.3", catalog::symmetric(3)},
      {"dihedral.4", catalog::dihedral(4)},  {"quaternion", catalog::quaternion()},
  };
  Report r;
  r.scalar("syntax", "cyclic N | klein | symmetric N | dihedral N | quaternion | trivial");
  for (const auto& e : entries) {
    r.count(e.keyword + ".order", e.group->order());
    r.flag(e.keyword + ".abelian", e.group->is_abelian());
    element_list(r, e.keyword + ".elements", e.group, all_elements(e.group));
  }
  return r;
}

int exit_code_for(const FixtureError& e) {
  switch (e.kind()) {
    case FixtureErrorKind::Syntax: return kExitSyntax;
    case FixtureErrorKind::Unresolved: return kExitUnresolved;
    case FixtureErrorKind::Validation:
      return e.code() == ErrorCode::SizeBound ? kExitSizeBound : kExitValidation;
  }
  return kExitValidation;
}

int exit_code_for(const AlgebraError& e) {
  switch (e.code()) {
    case ErrorCode::SizeBound: return kExitSizeBound;
    case ErrorCode::StructureDefect:
    case ErrorCode::WellDefinednessDefect:
    case ErrorCode::FormulaMismatch: return kExitDefect;
    default: return kExitPrecondition;
  }
}

}  // namespace xmlift
