#include "xmlift/groupoid.hpp"

#include <algorithm>

namespace xmlift {

namespace {

[[noreturn]] void groupoid_error(const std::string& message, std::vector<std::size_t> witness) {
  throw AlgebraError(ErrorCode::GroupoidAxiomViolation, message, std::move(witness));
}

GroupHom hom_or(ErrorCode code, const std::string& what, const GroupPtr& source,
                const GroupPtr& target, std::vector<Elem> images) {
  try {
    return make_hom(source, target, std::move(images));
  } catch (const AlgebraError& e) {
    throw AlgebraError(code, what + ": " + e.what(), e.witness());
  }
}

}  // namespace

std::optional<Arrow> FiniteGroupoid::compose(Arrow h, Arrow g) const {
  return compose_[h * arrow_count() + g];
}

std::vector<Arrow> FiniteGroupoid::star(Obj x) const {
  std::vector<Arrow> out;
  for (Arrow g = 0; g < arrow_count(); ++g) {
    if (source_[g] == x) out.push_back(g);
  }
  return out;
}

bool FiniteGroupoid::operator==(const FiniteGroupoid& other) const {
  return source_ == other.source_ && target_ == other.target_ && compose_ == other.compose_;
}

FiniteGroupoid make_groupoid(std::size_t objects, std::vector<Obj> source, std::vector<Obj> target,
                             std::vector<std::vector<std::optional<Arrow>>> composition) {
  const std::size_t m = source.size();
  if (target.size() != m || composition.size() != m) {
    throw AlgebraError(ErrorCode::MalformedTable, "groupoid tables have inconsistent sizes");
  }
  for (Arrow g = 0; g < m; ++g) {
    if (source[g] >= objects || target[g] >= objects || composition[g].size() != m) {
      throw AlgebraError(ErrorCode::MalformedTable, "arrow " + std::to_string(g) + " malformed",
                         {g});
    }
  }
  FiniteGroupoid gd;
  gd.source_ = std::move(source);
  gd.target_ = std::move(target);
  gd.compose_.resize(m * m);
  for (Arrow h = 0; h < m; ++h) {
    for (Arrow g = 0; g < m; ++g) {
      const auto& c = composition[h][g];
      const bool composable = gd.source_[h] == gd.target_[g];
      if (composable != c.has_value()) {
        groupoid_error("h∘g must be defined exactly when source(h) = target(g)", {h, g});
      }
      if (c) {
        if (*c >= m) throw AlgebraError(ErrorCode::MalformedTable, "composite out of range", {h, g});
        if (gd.source_[*c] != gd.source_[g] || gd.target_[*c] != gd.target_[h]) {
          groupoid_error("h∘g has the wrong source or target", {h, g});
        }
      }
      gd.compose_[h * m + g] = c;
    }
  }
  for (Arrow k = 0; k < m; ++k) {
    for (Arrow h = 0; h < m; ++h) {
      for (Arrow g = 0; g < m; ++g) {
        auto hg = gd.compose(h, g);
        auto kh = gd.compose(k, h);
        if (!hg || !kh) continue;
        if (gd.compose(k, *hg) != gd.compose(*kh, g)) {
          groupoid_error("composition is not associative", {k, h, g});
        }
      }
    }
  }
  gd.identity_.assign(objects, m);
  for (Obj x = 0; x < objects; ++x) {
    for (Arrow e = 0; e < m && gd.identity_[x] == m; ++e) {
      if (gd.source_[e] != x || gd.target_[e] != x) continue;
      bool unit = true;
      for (Arrow g = 0; g < m && unit; ++g) {
        if (gd.target_[g] == x && gd.compose(e, g) != g) unit = false;
        if (gd.source_[g] == x && gd.compose(g, e) != g) unit = false;
      }
      if (unit) gd.identity_[x] = e;
    }
    if (gd.identity_[x] == m) groupoid_error("object has no identity arrow", {x});
  }
  gd.inverse_.assign(m, m);
  for (Arrow g = 0; g < m; ++g) {
    for (Arrow h = 0; h < m && gd.inverse_[g] == m; ++h) {
      if (gd.compose(h, g) == gd.identity_[gd.source_[g]] &&
          gd.compose(g, h) == gd.identity_[gd.target_[g]]) {
        gd.inverse_[g] = h;
      }
    }
    if (gd.inverse_[g] == m) groupoid_error("arrow has no inverse", {g});
  }
  return gd;
}

GroupoidPtr underlying(const GroupGroupoidPtr& gg) { return GroupoidPtr(gg, &gg->groupoid); }

GroupGroupoidPtr make_group_groupoid(FiniteGroupoid groupoid, GroupPtr objects, GroupPtr arrows) {
  if (objects->order() != groupoid.object_count() || arrows->order() != groupoid.arrow_count()) {
    throw AlgebraError(ErrorCode::TypeMismatch, "group orders do not match the groupoid");
  }
  const std::size_t m = groupoid.arrow_count();
  std::vector<Elem> src(m), tgt(m), inv(m), ids(groupoid.object_count());
  for (Arrow g = 0; g < m; ++g) {
    src[g] = groupoid.source(g);
    tgt[g] = groupoid.target(g);
    inv[g] = groupoid.inverse(g);
  }
  for (Obj x = 0; x < ids.size(); ++x) ids[x] = groupoid.identity(x);
  const ErrorCode code = ErrorCode::GroupGroupoidViolation;
  hom_or(code, "source map", arrows, objects, std::move(src));
  hom_or(code, "target map", arrows, objects, std::move(tgt));
  hom_or(code, "identity map", objects, arrows, std::move(ids));
  hom_or(code, "inverse map", arrows, arrows, std::move(inv));

  std::vector<std::pair<Arrow, Arrow>> composable;
  for (Arrow h = 0; h < m; ++h) {
    for (Arrow g = 0; g < m; ++g) {
      if (groupoid.compose(h, g)) composable.emplace_back(h, g);
    }
  }
  for (auto [h, g] : composable) {
    for (auto [h2, g2] : composable) {
      const Arrow lhs = arrows->op(*groupoid.compose(h, g), *groupoid.compose(h2, g2));
      auto rhs = groupoid.compose(arrows->op(h, h2), arrows->op(g, g2));
      if (!rhs || *rhs != lhs) {
        throw AlgebraError(ErrorCode::InterchangeViolation,
                           "(h∘g)+(h'∘g') != (h+h')∘(g+g')", {h, g, h2, g2});
      }
    }
  }
  return std::make_shared<const GroupGroupoid>(
      GroupGroupoid{std::move(groupoid), std::move(objects), std::move(arrows)});
}

GroupGroupoidPtr one_object_group_groupoid(const GroupPtr& g) {
  const std::size_t m = g->order();
  std::vector<std::vector<std::optional<Arrow>>> comp(m, std::vector<std::optional<Arrow>>(m));
  for (Arrow h = 0; h < m; ++h) {
    for (Arrow k = 0; k < m; ++k) comp[h][k] = g->op(h, k);
  }
  auto gd = make_groupoid(1, std::vector<Obj>(m, 0), std::vector<Obj>(m, 0), std::move(comp));
  return make_group_groupoid(std::move(gd), make_group({{0}}), g);
}

GroupGroupoidPtr pair_group_groupoid(const GroupPtr& objects) {
  const std::size_t n = objects->order();
  const std::size_t m = n * n;
  std::vector<Obj> src(m), tgt(m);
  for (Arrow g = 0; g < m; ++g) {
    src[g] = g / n;
    tgt[g] = g % n;
  }
  std::vector<std::vector<std::optional<Arrow>>> comp(m, std::vector<std::optional<Arrow>>(m));
  for (Arrow h = 0; h < m; ++h) {
    for (Arrow g = 0; g < m; ++g) {
      if (src[h] == tgt[g]) comp[h][g] = src[g] * n + tgt[h];  // (b,c)∘(a,b) = (a,c)
    }
  }
  auto gd = make_groupoid(n, std::move(src), std::move(tgt), std::move(comp));
  return make_group_groupoid(std::move(gd), objects, direct_product(objects, objects).group);
}

GroupGroupoidPtr discrete_group_groupoid(const GroupPtr& objects) {
  const std::size_t n = objects->order();
  std::vector<Obj> ids(n);
  for (Obj x = 0; x < n; ++x) ids[x] = x;
  std::vector<std::vector<std::optional<Arrow>>> comp(n, std::vector<std::optional<Arrow>>(n));
  for (Arrow x = 0; x < n; ++x) comp[x][x] = x;
  auto gd = make_groupoid(n, ids, ids, std::move(comp));
  return make_group_groupoid(std::move(gd), objects, objects);
}

void validate_groupoid_morphism(const GroupoidMorphism& p) {
  const FiniteGroupoid& s = *p.source;
  const FiniteGroupoid& t = *p.target;
  if (p.on_objects.size() != s.object_count() || p.on_arrows.size() != s.arrow_count()) {
    throw AlgebraError(ErrorCode::NotAMorphism, "morphism tables have the wrong size");
  }
  for (Obj x = 0; x < s.object_count(); ++x) {
    if (p.on_objects[x] >= t.object_count()) {
      throw AlgebraError(ErrorCode::NotAMorphism, "object image out of range", {x});
    }
    if (p.on_arrows[s.identity(x)] != t.identity(p.on_objects[x])) {
      throw AlgebraError(ErrorCode::NotAMorphism, "identity not preserved", {x});
    }
  }
  for (Arrow g = 0; g < s.arrow_count(); ++g) {
    const Arrow pg = p.on_arrows[g];
    if (pg >= t.arrow_count()) {
      throw AlgebraError(ErrorCode::NotAMorphism, "arrow image out of range", {g});
    }
    if (t.source(pg) != p.on_objects[s.source(g)] || t.target(pg) != p.on_objects[s.target(g)]) {
      throw AlgebraError(ErrorCode::NotAMorphism, "source/target not preserved", {g});
    }
  }
  for (Arrow h = 0; h < s.arrow_count(); ++h) {
    for (Arrow g = 0; g < s.arrow_count(); ++g) {
      auto hg = s.compose(h, g);
      if (!hg) continue;
      if (p.on_arrows[*hg] != t.compose(p.on_arrows[h], p.on_arrows[g])) {
        throw AlgebraError(ErrorCode::NotAMorphism, "composition not preserved", {h, g});
      }
    }
  }
}

CoveringReport is_covering_morphism(const GroupoidMorphism& p) {
  validate_groupoid_morphism(p);
  CoveringReport report;
  report.covering = true;
  for (Obj x = 0; x < p.source->object_count(); ++x) {
    const auto up = p.source->star(x);
    const auto down = p.target->star(p.on_objects[x]);
    report.source_star_sizes.push_back(up.size());
    report.target_star_sizes.push_back(down.size());
    std::vector<Arrow> images;
    for (Arrow g : up) images.push_back(p.on_arrows[g]);
    std::sort(images.begin(), images.end());
    const bool bijective = images == down;  // images lie in the star; equal sets
    if (!bijective && report.covering) {
      report.covering = false;
      report.witness = x;
    }
  }
  return report;
}

GroupoidMorphism GroupGroupoidMorphism::functor() const {
  return GroupoidMorphism{underlying(source), underlying(target), on_objects.images(),
                          on_arrows.images()};
}

GroupGroupoidMorphism make_group_groupoid_morphism(GroupGroupoidPtr source, GroupGroupoidPtr target,
                                                   GroupHom on_objects, GroupHom on_arrows) {
  if (!same_group(on_objects.source(), source->objects) ||
      !same_group(on_objects.target(), target->objects) ||
      !same_group(on_arrows.source(), source->arrows) ||
      !same_group(on_arrows.target(), target->arrows)) {
    throw AlgebraError(ErrorCode::TypeMismatch, "group-groupoid morphism has the wrong type");
  }
  GroupGroupoidMorphism f{std::move(source), std::move(target), std::move(on_objects),
                          std::move(on_arrows)};
  validate_groupoid_morphism(f.functor());
  return f;
}

GroupGroupoidMorphism one_object_morphism(const GroupHom& h) {
  auto s = one_object_group_groupoid(h.source());
  auto t = one_object_group_groupoid(h.target());
  return make_group_groupoid_morphism(s, t, zero_hom(s->objects, t->objects), h);
}

GroupGroupoidMorphism pair_morphism(const GroupHom& h) {
  auto s = pair_group_groupoid(h.source());
  auto t = pair_group_groupoid(h.target());
  const std::size_t n = h.source()->order(), k = h.target()->order();
  std::vector<Elem> arrows(n * n);
  for (Arrow g = 0; g < arrows.size(); ++g) arrows[g] = h(g / n) * k + h(g % n);
  return make_group_groupoid_morphism(s, t, h, make_hom(s->arrows, t->arrows, std::move(arrows)));
}

GroupGroupoidMorphism discrete_morphism(const GroupHom& h) {
  auto s = discrete_group_groupoid(h.source());
  auto t = discrete_group_groupoid(h.target());
  return make_group_groupoid_morphism(s, t, h, make_hom(s->arrows, t->arrows, h.images()));
}

std::optional<Elem> GGAction::act(Arrow g, Elem x) const {
  return table_[g * space()->order() + x];
}

GGAction make_gg_action(GroupGroupoidPtr gg, GroupHom omega,
                        std::vector<std::optional<Elem>> table) {
  if (!same_group(omega.target(), gg->objects)) {
    throw AlgebraError(ErrorCode::TypeMismatch, "ω must land in the object group");
  }
  const FiniteGroupoid& gd = gg->groupoid;
  const FiniteGroup& x_grp = *omega.source();
  const std::size_t nx = x_grp.order();
  if (table.size() != gd.arrow_count() * nx) {
    throw AlgebraError(ErrorCode::MalformedTable, "action table has the wrong size");
  }
  auto at = [&](Arrow g, Elem x) { return table[g * nx + x]; };
  for (Arrow g = 0; g < gd.arrow_count(); ++g) {
    for (Elem x = 0; x < nx; ++x) {
      const bool defined = gd.source(g) == omega(x);
      if (defined != at(g, x).has_value() || (defined && *at(g, x) >= nx)) {
        throw AlgebraError(ErrorCode::MalformedTable,
                           "g•x must be defined exactly when source(g) = ω(x)", {g, x});
      }
      if (defined && omega(*at(g, x)) != gd.target(g)) {
        throw AlgebraError(ErrorCode::ActionLawViolation, "ω(g•x) != target(g)", {g, x});
      }
    }
  }
  for (Elem x = 0; x < nx; ++x) {
    if (at(gd.identity(omega(x)), x) != x) {
      throw AlgebraError(ErrorCode::ActionLawViolation, "1_{ω(x)}•x != x", {x});
    }
  }
  for (Arrow h = 0; h < gd.arrow_count(); ++h) {
    for (Arrow g = 0; g < gd.arrow_count(); ++g) {
      auto hg = gd.compose(h, g);
      if (!hg) continue;
      for (Elem x = 0; x < nx; ++x) {
        auto gx = at(g, x);
        if (!gx) continue;
        if (at(*hg, x) != at(h, *gx)) {
          throw AlgebraError(ErrorCode::ActionLawViolation, "(h∘g)•x != h•(g•x)", {h, g, x});
        }
      }
    }
  }
  std::vector<std::pair<Arrow, Elem>> defined;
  for (Arrow g = 0; g < gd.arrow_count(); ++g) {
    for (Elem x = 0; x < nx; ++x) {
      if (at(g, x)) defined.emplace_back(g, x);
    }
  }
  const FiniteGroup& arrows = *gg->arrows;
  for (auto [g, x] : defined) {
    for (auto [g2, x2] : defined) {
      auto rhs = at(arrows.op(g, g2), x_grp.op(x, x2));
      if (!rhs || *rhs != x_grp.op(*at(g, x), *at(g2, x2))) {
        throw AlgebraError(ErrorCode::InterchangeViolation,
                           "(g•x)+(g'•x') != (g+g')•(x+x')", {g, x, g2, x2});
      }
    }
  }
  GGAction action;
  action.gg_ = std::move(gg);
  action.omega_ = std::move(omega);
  action.table_ = std::move(table);
  return action;
}

GGAction regular_gg_action(const GroupGroupoidPtr& one_object) {
  const GroupPtr& g = one_object->arrows;
  const std::size_t n = g->order();
  std::vector<std::optional<Elem>> table(n * n);
  for (Arrow a = 0; a < n; ++a) {
    for (Elem x = 0; x < n; ++x) table[a * n + x] = g->op(a, x);
  }
  return make_gg_action(one_object, zero_hom(g, one_object->objects), std::move(table));
}

GGAction pair_gg_action(const GroupGroupoidPtr& pair, const GroupPtr& fibre) {
  const GroupPtr& o = pair->objects;
  const std::size_t n = o->order(), k = fibre->order();
  DirectProduct prod = direct_product(o, fibre);
  std::vector<std::optional<Elem>> table(n * n * n * k);
  for (Arrow g = 0; g < n * n; ++g) {
    const Obj from = g / n, to = g % n;
    for (Elem f = 0; f < k; ++f) table[g * n * k + from * k + f] = to * k + f;
  }
  return make_gg_action(pair, prod.first, std::move(table));
}

GGAction discrete_gg_action(const GroupGroupoidPtr& discrete, const GroupHom& omega) {
  const std::size_t n = discrete->groupoid.arrow_count(), nx = omega.source()->order();
  std::vector<std::optional<Elem>> table(n * nx);
  for (Elem x = 0; x < nx; ++x) table[omega(x) * nx + x] = x;
  return make_gg_action(discrete, omega, std::move(table));
}

ActionGroupoid action_groupoid(const GGAction& action) {
  const FiniteGroupoid& gd = action.gg()->groupoid;
  const FiniteGroup& x_grp = *action.space();
  const FiniteGroup& arrows = *action.gg()->arrows;
  std::vector<std::pair<Arrow, Elem>> pairs;
  for (Arrow g = 0; g < gd.arrow_count(); ++g) {
    for (Elem x = 0; x < x_grp.order(); ++x) {
      if (gd.source(g) == action.omega()(x)) pairs.emplace_back(g, x);
    }
  }
  const std::size_t m = pairs.size();
  auto index_of = [&](Arrow g, Elem x) {
    return static_cast<Arrow>(
        std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(g, x)) - pairs.begin());
  };
  std::vector<Obj> src(m), tgt(m);
  for (Arrow i = 0; i < m; ++i) {
    src[i] = pairs[i].second;
    tgt[i] = *action.act(pairs[i].first, pairs[i].second);
  }
  std::vector<std::vector<std::optional<Arrow>>> comp(m, std::vector<std::optional<Arrow>>(m));
  for (Arrow h = 0; h < m; ++h) {
    for (Arrow g = 0; g < m; ++g) {
      if (src[h] != tgt[g]) continue;
      auto composite = gd.compose(pairs[h].first, pairs[g].first);
      comp[h][g] = index_of(*composite, pairs[g].second);
    }
  }
  std::vector<std::vector<Elem>> rows(m, std::vector<Elem>(m));
  for (Arrow i = 0; i < m; ++i) {
    for (Arrow j = 0; j < m; ++j) {
      rows[i][j] = index_of(arrows.op(pairs[i].first, pairs[j].first),
                            x_grp.op(pairs[i].second, pairs[j].second));
    }
  }
  auto groupoid = make_groupoid(x_grp.order(), src, tgt, std::move(comp));
  ActionGroupoid out;
  out.gg = make_group_groupoid(std::move(groupoid), action.space(), make_group(rows));
  out.pairs = std::move(pairs);
  out.projection.source = underlying(out.gg);
  out.projection.target = underlying(action.gg());
  out.projection.on_objects = action.omega().images();
  for (auto [g, x] : out.pairs) out.projection.on_arrows.push_back(g);
  validate_groupoid_morphism(out.projection);
  return out;
}

PullbackAction pullback_action(const GroupGroupoidMorphism& f, const GGAction& action) {
  if (f.target != action.gg() &&
      !(f.target->groupoid == action.gg()->groupoid &&
        same_group(f.target->objects, action.gg()->objects) &&
        same_group(f.target->arrows, action.gg()->arrows))) {
    throw AlgebraError(ErrorCode::TypeMismatch, "morphism does not land in the acting groupoid");
  }
  Pullback pb = pullback_group(action.omega(), f.on_objects);
  const FiniteGroupoid& gd = f.source->groupoid;
  const std::size_t ny = pb.pairs.size();
  std::vector<std::optional<Elem>> table(gd.arrow_count() * ny);
  for (Arrow g = 0; g < gd.arrow_count(); ++g) {
    for (Elem y = 0; y < ny; ++y) {
      auto [x, o] = pb.pairs[y];
      if (gd.source(g) != o) continue;
      table[g * ny + y] = *pb.index_of(*action.act(f.on_arrows(g), x), gd.target(g));
    }
  }
  GGAction pulled = make_gg_action(f.source, pb.second, std::move(table));
  return PullbackAction{std::move(pb), std::move(pulled)};
}

void validate_action_morphism(const GGAction& from, const GGAction& to, const GroupHom& h) {
  if (from.gg() != to.gg() && !(from.gg()->groupoid == to.gg()->groupoid)) {
    throw AlgebraError(ErrorCode::TypeMismatch, "actions of different group-groupoids");
  }
  if (!same_group(h.source(), from.space()) || !same_group(h.target(), to.space())) {
    throw AlgebraError(ErrorCode::TypeMismatch, "h must map X -> X'");
  }
  for (Elem x = 0; x < from.space()->order(); ++x) {
    if (to.omega()(h(x)) != from.omega()(x)) {
      throw AlgebraError(ErrorCode::NotAMorphism, "ω'∘h != ω", {x});
    }
    for (Arrow g = 0; g < from.gg()->groupoid.arrow_count(); ++g) {
      auto gx = from.act(g, x);
      if (!gx) continue;
      if (to.act(g, h(x)) != h(*gx)) {
        throw AlgebraError(ErrorCode::NotAMorphism, "h(g•x) != g•h(x)", {g, x});
      }
    }
  }
}

GroupHom pullback_action_morphism(const GroupGroupoidMorphism& f, const GGAction& from,
                                  const GGAction& to, const GroupHom& h) {
  validate_action_morphism(from, to, h);
  PullbackAction p = pullback_action(f, from);
  PullbackAction q = pullback_action(f, to);
  std::vector<Elem> map(p.pullback.pairs.size());
  for (Elem y = 0; y < map.size(); ++y) {
    auto [x, o] = p.pullback.pairs[y];
    map[y] = *q.pullback.index_of(h(x), o);
  }
  GroupHom lifted = make_hom(p.action.space(), q.action.space(), std::move(map));
  validate_action_morphism(p.action, q.action, lifted);
  return lifted;
}

}  // namespace xmlift
