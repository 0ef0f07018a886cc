#include "xmlift/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace xmlift {

namespace {

std::string pair_text(Elem a, Elem b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

void check_bound(std::size_t n, std::size_t bound, const char* what) {
  if (n > bound) {
    throw AlgebraError(ErrorCode::SizeBound,
                       std::string(what) + ": order " + std::to_string(n) +
                           " exceeds size bound " + std::to_string(bound),
                       {n, bound});
  }
}

// Closure of `start` under right multiplication by `gens`.
std::vector<Elem> closure(const FiniteGroup& g, std::vector<bool>& member,
                          std::span<const Elem> gens) {
  std::vector<Elem> queue;
  for (Elem e = 0; e < g.order(); ++e) {
    if (member[e]) queue.push_back(e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Elem s : gens) {
      Elem next = g.op(queue[head], s);
      if (!member[next]) {
        member[next] = true;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = a + 1; b < order_; ++b) {
      if (op(a, b) != op(b, a)) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != identity(); x = op(x, a)) ++k;
  return k;
}

std::string FiniteGroup::name(Elem a) const {
  return names_.empty() ? std::to_string(a) : names_[a];
}

std::vector<std::vector<Elem>> FiniteGroup::rows() const {
  std::vector<std::vector<Elem>> out(order_);
  for (Elem a = 0; a < order_; ++a) {
    out[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * order_),
                  table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * order_));
  }
  return out;
}

GroupPtr make_group(const std::vector<std::vector<Elem>>& rows,
                    std::vector<std::string> names) {
  const std::size_t n = rows.size();
  if (n == 0) throw AlgebraError(ErrorCode::MalformedTable, "empty table");
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw AlgebraError(ErrorCode::MalformedTable,
                         "row " + std::to_string(r) + " has " +
                             std::to_string(rows[r].size()) + " entries, expected " +
                             std::to_string(n),
                         {r});
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (rows[r][c] >= n) {
        throw AlgebraError(ErrorCode::MalformedTable,
                           "entry " + pair_text(r, c) + " out of range", {r, c});
      }
    }
  }
  if (!names.empty() && names.size() != n) {
    throw AlgebraError(ErrorCode::MalformedTable,
                       "expected " + std::to_string(n) + " element names");
  }

  std::optional<Elem> e;
  for (Elem cand = 0; cand < n && !e; ++cand) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = rows[cand][a] == a && rows[a][cand] == a;
    if (ok) e = cand;
  }
  if (!e) throw AlgebraError(ErrorCode::NoIdentity, "no two-sided identity");

  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b) found = rows[a][b] == *e && rows[b][a] == *e;
    if (!found) {
      throw AlgebraError(ErrorCode::NoInverse,
                         "element " + std::to_string(a) + " has no two-sided inverse", {a});
    }
  }

  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (rows[rows[a][b]][c] != rows[a][rows[b][c]]) {
          throw AlgebraError(ErrorCode::NotAssociative,
                             "(a+b)+c != a+(b+c) at (" + std::to_string(a) + ", " +
                                 std::to_string(b) + ", " + std::to_string(c) + ")",
                             {a, b, c});
        }
      }
    }
  }

  // Swap labels 0 and e so that the identity is element 0.
  auto relabel = [e = *e](Elem x) -> Elem {
    if (x == e) return 0;
    if (x == 0) return e;
    return x;
  };
  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->order_ = n;
  group->table_.resize(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      group->table_[relabel(a) * n + relabel(b)] = relabel(rows[a][b]);
    }
  }
  if (!names.empty() && *e != 0) std::swap(names[0], names[*e]);
  group->names_ = std::move(names);

  group->inverse_.resize(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (group->op(a, b) == 0) {
        group->inverse_[a] = b;
        break;
      }
    }
  }

  std::vector<bool> span(n, false);
  span[0] = true;
  for (Elem a = 1; a < n; ++a) {
    if (span[a]) continue;
    group->generators_.push_back(a);
    closure(*group, span, group->generators_);
  }
  return group;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && *a == *b);
}

// --- homomorphisms ---------------------------------------------------------

bool GroupHom::is_injective() const {
  std::vector<bool> seen(target_->order(), false);
  for (Elem y : map_) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

bool GroupHom::is_surjective() const {
  std::vector<bool> seen(target_->order(), false);
  for (Elem y : map_) seen[y] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

bool GroupHom::is_zero() const {
  return std::all_of(map_.begin(), map_.end(), [](Elem y) { return y == 0; });
}

bool GroupHom::operator==(const GroupHom& other) const {
  return same_group(source_, other.source_) && same_group(target_, other.target_) &&
         map_ == other.map_;
}

GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<Elem> images) {
  const std::size_t n = source->order();
  if (images.size() != n) {
    throw AlgebraError(ErrorCode::MalformedTable,
                       "homomorphism needs " + std::to_string(n) + " images, got " +
                           std::to_string(images.size()));
  }
  for (Elem x = 0; x < n; ++x) {
    if (images[x] >= target->order()) {
      throw AlgebraError(ErrorCode::MalformedTable,
                         "image of " + std::to_string(x) + " out of range", {x});
    }
  }
  if (images[0] != 0) {
    throw AlgebraError(ErrorCode::NotHomomorphism, "identity not mapped to identity", {0, 0});
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (images[source->op(x, y)] != target->op(images[x], images[y])) {
        throw AlgebraError(ErrorCode::NotHomomorphism,
                           "map(x+y) != map(x)+map(y) at " + pair_text(x, y), {x, y});
      }
    }
  }
  return unchecked_hom(std::move(source), std::move(target), std::move(images));
}

GroupHom unchecked_hom(GroupPtr source, GroupPtr target, std::vector<Elem> images) {
  GroupHom h;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.map_ = std::move(images);
  return h;
}

GroupHom identity_hom(const GroupPtr& g) {
  std::vector<Elem> map(g->order());
  for (Elem x = 0; x < g->order(); ++x) map[x] = x;
  return unchecked_hom(g, g, std::move(map));
}

GroupHom zero_hom(const GroupPtr& source, const GroupPtr& target) {
  return unchecked_hom(source, target, std::vector<Elem>(source->order(), 0));
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!same_group(inner.target(), outer.source())) {
    throw AlgebraError(ErrorCode::TypeMismatch, "cannot compose: codomain/domain differ");
  }
  std::vector<Elem> map(inner.source()->order());
  for (Elem x = 0; x < map.size(); ++x) map[x] = outer(inner(x));
  return unchecked_hom(inner.source(), outer.target(), std::move(map));
}

// --- subgroups -------------------------------------------------------------

bool Subgroup::contains(Elem a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

std::optional<Elem> Subgroup::local_index(Elem a) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), a);
  if (it == elements_.end() || *it != a) return std::nullopt;
  return static_cast<Elem>(it - elements_.begin());
}

std::pair<GroupPtr, GroupHom> Subgroup::as_group() const {
  const std::size_t k = elements_.size();
  std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(k));
  for (Elem i = 0; i < k; ++i) {
    for (Elem j = 0; j < k; ++j) {
      rows[i][j] = *local_index(parent_->op(elements_[i], elements_[j]));
    }
  }
  std::vector<std::string> names;
  if (parent_->has_names()) {
    for (Elem a : elements_) names.push_back(parent_->name(a));
  }
  GroupPtr g = make_group(rows, std::move(names));
  return {g, unchecked_hom(g, parent_, elements_)};
}

Subgroup make_subgroup(GroupPtr parent, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Elem a : elements) {
    if (a >= parent->order()) {
      throw AlgebraError(ErrorCode::NotASubgroup,
                         "element " + std::to_string(a) + " not in group", {a});
    }
  }
  if (elements.empty() || elements.front() != 0) {
    throw AlgebraError(ErrorCode::NotASubgroup, "identity missing");
  }
  auto in = [&](Elem x) { return std::binary_search(elements.begin(), elements.end(), x); };
  for (Elem a : elements) {
    if (!in(parent->inv(a))) {
      throw AlgebraError(ErrorCode::NotASubgroup,
                         "not closed under inverse at " + std::to_string(a), {a});
    }
    for (Elem b : elements) {
      if (!in(parent->op(a, b))) {
        throw AlgebraError(ErrorCode::NotASubgroup,
                           "not closed under op at " + pair_text(a, b), {a, b});
      }
    }
  }
  return unchecked_subgroup(std::move(parent), std::move(elements));
}

Subgroup unchecked_subgroup(GroupPtr parent, std::vector<Elem> sorted_elements) {
  Subgroup s;
  s.parent_ = std::move(parent);
  s.elements_ = std::move(sorted_elements);
  return s;
}

Subgroup generated_subgroup(const GroupPtr& g, std::span<const Elem> generators) {
  std::vector<bool> member(g->order(), false);
  member[0] = true;
  return unchecked_subgroup(g, closure(*g, member, generators));
}

Subgroup whole_group(const GroupPtr& g) {
  std::vector<Elem> all(g->order());
  for (Elem a = 0; a < all.size(); ++a) all[a] = a;
  return unchecked_subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return unchecked_subgroup(g, {0}); }

Subgroup kernel(const GroupHom& h) {
  std::vector<Elem> ker;
  for (Elem x = 0; x < h.source()->order(); ++x) {
    if (h(x) == 0) ker.push_back(x);
  }
  return unchecked_subgroup(h.source(), std::move(ker));
}

Subgroup image(const GroupHom& h) {
  std::vector<Elem> im(h.images());
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return unchecked_subgroup(h.target(), std::move(im));
}

Subgroup center(const GroupPtr& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g->order(); ++a) {
    bool central = true;
    for (Elem b = 0; b < g->order() && central; ++b) central = g->op(a, b) == g->op(b, a);
    if (central) z.push_back(a);
  }
  return unchecked_subgroup(g, std::move(z));
}

bool is_normal(const Subgroup& s, const GroupPtr& g) {
  if (!same_group(s.parent(), g)) {
    throw AlgebraError(ErrorCode::NotASubgroup, "subgroup lives in a different group");
  }
  return is_normal(s);
}

bool is_normal(const Subgroup& s) {
  const FiniteGroup& g = *s.parent();
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem a : s.elements()) {
      if (!s.contains(g.conj(x, a))) return false;
    }
  }
  return true;
}

Quotient quotient(const Subgroup& normal) {
  if (!is_normal(normal)) {
    throw AlgebraError(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  }
  const GroupPtr& g = normal.parent();
  const std::size_t n = g->order();
  std::vector<Elem> coset_of(n, n);
  std::vector<Elem> reps;
  for (Elem a = 0; a < n; ++a) {
    if (coset_of[a] != n) continue;
    const Elem idx = reps.size();
    reps.push_back(a);
    for (Elem k : normal.elements()) coset_of[g->op(a, k)] = idx;
  }
  const std::size_t m = reps.size();
  std::vector<std::vector<Elem>> rows(m, std::vector<Elem>(m));
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) rows[i][j] = coset_of[g->op(reps[i], reps[j])];
  }
  std::vector<std::string> names;
  if (g->has_names()) {
    for (Elem r : reps) names.push_back(g->name(r) + "N");
  }
  GroupPtr q = make_group(rows, std::move(names));
  return Quotient{q, unchecked_hom(g, q, std::move(coset_of)), std::move(reps)};
}

std::optional<Elem> Pullback::index_of(Elem x, Elem y) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(x, y));
  if (it == pairs.end() || *it != std::make_pair(x, y)) return std::nullopt;
  return static_cast<Elem>(it - pairs.begin());
}

Pullback pullback_group(const GroupHom& p, const GroupHom& q) {
  if (!same_group(p.target(), q.target())) {
    throw AlgebraError(ErrorCode::CodomainMismatch, "pullback maps have different codomains");
  }
  const FiniteGroup& x = *p.source();
  const FiniteGroup& y = *q.source();
  Pullback pb;
  for (Elem a = 0; a < x.order(); ++a) {
    for (Elem b = 0; b < y.order(); ++b) {
      if (p(a) == q(b)) pb.pairs.emplace_back(a, b);
    }
  }
  const std::size_t m = pb.pairs.size();
  std::vector<std::vector<Elem>> rows(m, std::vector<Elem>(m));
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) {
      rows[i][j] = *pb.index_of(x.op(pb.pairs[i].first, pb.pairs[j].first),
                                y.op(pb.pairs[i].second, pb.pairs[j].second));
    }
  }
  std::vector<std::string> names;
  if (x.has_names() || y.has_names()) {
    for (auto [a, b] : pb.pairs) names.push_back("(" + x.name(a) + "," + y.name(b) + ")");
  }
  pb.group = make_group(rows, std::move(names));
  std::vector<Elem> first(m), second(m);
  for (Elem i = 0; i < m; ++i) {
    first[i] = pb.pairs[i].first;
    second[i] = pb.pairs[i].second;
  }
  pb.first = unchecked_hom(pb.group, p.source(), std::move(first));
  pb.second = unchecked_hom(pb.group, q.source(), std::move(second));
  return pb;
}

DirectProduct direct_product(const GroupPtr& left, const GroupPtr& right) {
  const std::size_t n = left->order(), k = right->order();
  std::vector<std::vector<Elem>> rows(n * k, std::vector<Elem>(n * k));
  for (Elem i = 0; i < n * k; ++i) {
    for (Elem j = 0; j < n * k; ++j) {
      rows[i][j] = left->op(i / k, j / k) * k + right->op(i % k, j % k);
    }
  }
  std::vector<std::string> names;
  if (left->has_names() || right->has_names()) {
    for (Elem i = 0; i < n * k; ++i) {
      names.push_back("(" + left->name(i / k) + "," + right->name(i % k) + ")");
    }
  }
  DirectProduct dp;
  dp.group = make_group(rows, std::move(names));
  dp.right_order = k;
  std::vector<Elem> first(n * k), second(n * k);
  for (Elem i = 0; i < n * k; ++i) {
    first[i] = i / k;
    second[i] = i % k;
  }
  dp.first = unchecked_hom(dp.group, left, std::move(first));
  dp.second = unchecked_hom(dp.group, right, std::move(second));
  return dp;
}

std::vector<Subgroup> subgroups(const GroupPtr& g, std::size_t size_bound) {
  check_bound(g->order(), size_bound, "subgroups");
  // Every subgroup arises from the trivial one by adjoining elements one at a
  // time, so a breadth-first closure over "S + <x>" reaches all of them.
  std::set<std::vector<Elem>> seen;
  std::deque<std::vector<Elem>> frontier;
  seen.insert({0});
  frontier.push_back({0});
  while (!frontier.empty()) {
    std::vector<Elem> current = std::move(frontier.front());
    frontier.pop_front();
    std::vector<bool> member(g->order(), false);
    for (Elem a : current) member[a] = true;
    for (Elem x = 1; x < g->order(); ++x) {
      if (member[x]) continue;
      std::vector<bool> grown = member;
      grown[x] = true;
      // closure() multiplies on the right by the listed generators; using all
      // of `current` plus x as generators yields <current, x>.
      std::vector<Elem> gens = current;
      gens.push_back(x);
      std::vector<Elem> next = closure(*g, grown, gens);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<std::vector<Elem>> sets(seen.begin(), seen.end());
  std::stable_sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(unchecked_subgroup(g, std::move(s)));
  return out;
}

// --- actions ---------------------------------------------------------------

bool GroupAction::is_trivial() const {
  const std::size_t n = space_->order();
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] != i % n) return false;
  }
  return true;
}

bool GroupAction::operator==(const GroupAction& other) const {
  return same_group(actor_, other.actor_) && same_group(space_, other.space_) &&
         table_ == other.table_;
}

GroupAction make_action(GroupPtr actor, GroupPtr space, std::vector<Elem> table) {
  const std::size_t nb = actor->order(), na = space->order();
  if (table.size() != nb * na) {
    throw AlgebraError(ErrorCode::MalformedTable, "action table has wrong size");
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= na) {
      throw AlgebraError(ErrorCode::MalformedTable, "action entry out of range",
                         {i / na, i % na});
    }
  }
  auto act = [&](Elem b, Elem a) { return table[b * na + a]; };
  for (Elem a = 0; a < na; ++a) {
    if (act(0, a) != a) {
      throw AlgebraError(ErrorCode::ActionAxiomViolation, "0·a != a", {0, a});
    }
  }
  for (Elem b = 0; b < nb; ++b) {
    for (Elem a = 0; a < na; ++a) {
      for (Elem a2 = 0; a2 < na; ++a2) {
        if (act(b, space->op(a, a2)) != space->op(act(b, a), act(b, a2))) {
          throw AlgebraError(ErrorCode::ActionAxiomViolation,
                             "b·(a+a') != b·a + b·a'", {b, a, a2});
        }
      }
    }
  }
  for (Elem b = 0; b < nb; ++b) {
    for (Elem b2 = 0; b2 < nb; ++b2) {
      for (Elem a = 0; a < na; ++a) {
        if (act(actor->op(b, b2), a) != act(b, act(b2, a))) {
          throw AlgebraError(ErrorCode::ActionAxiomViolation,
                             "(b+b')·a != b·(b'·a)", {b, b2, a});
        }
      }
    }
  }
  return unchecked_action(std::move(actor), std::move(space), std::move(table));
}

GroupAction unchecked_action(GroupPtr actor, GroupPtr space, std::vector<Elem> table) {
  GroupAction action;
  action.actor_ = std::move(actor);
  action.space_ = std::move(space);
  action.table_ = std::move(table);
  return action;
}

GroupAction trivial_action(const GroupPtr& actor, const GroupPtr& space) {
  std::vector<Elem> table(actor->order() * space->order());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i % space->order();
  return unchecked_action(actor, space, std::move(table));
}

GroupAction conjugation_action(const GroupPtr& g) {
  const std::size_t n = g->order();
  std::vector<Elem> table(n * n);
  for (Elem b = 0; b < n; ++b) {
    for (Elem a = 0; a < n; ++a) table[b * n + a] = g->conj(b, a);
  }
  return unchecked_action(g, g, std::move(table));
}

GroupAction pull_back_action(const GroupAction& action, const GroupHom& h) {
  if (!same_group(h.target(), action.actor())) {
    throw AlgebraError(ErrorCode::TypeMismatch, "hom does not land in the acting group");
  }
  const std::size_t nx = h.source()->order(), na = action.space()->order();
  std::vector<Elem> table(nx * na);
  for (Elem x = 0; x < nx; ++x) {
    for (Elem a = 0; a < na; ++a) table[x * na + a] = action(h(x), a);
  }
  return unchecked_action(h.source(), action.space(), std::move(table));
}

// --- homomorphism and automorphism search ---------------------------------

namespace {

// Depth-first search over images of the source's generators. A partial
// assignment is extended over the subgroup generated so far; conflicts prune.
class HomSearch {
 public:
  HomSearch(const FiniteGroup& source, const FiniteGroup& target, bool bijective_only)
      : src_(source), tgt_(target), bijective_(bijective_only), gens_(source.generators()) {
    images_.resize(gens_.size());
  }

  std::vector<std::vector<Elem>> run() {
    recurse(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // Propagates along the Cayley graph of generators [0, upto).
  bool extend(std::size_t upto, std::vector<Elem>& map) const {
    const std::size_t unset = tgt_.order();
    map.assign(src_.order(), unset);
    map[0] = 0;
    std::vector<Elem> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Elem g = queue[head];
      for (std::size_t i = 0; i < upto; ++i) {
        const Elem next = src_.op(g, gens_[i]);
        const Elem value = tgt_.op(map[g], images_[i]);
        if (map[next] == unset) {
          map[next] = value;
          queue.push_back(next);
        } else if (map[next] != value) {
          return false;
        }
      }
    }
    return true;
  }

  void recurse(std::size_t depth) {
    std::vector<Elem> map;
    if (depth == gens_.size()) {
      if (!extend(depth, map)) return;
      if (bijective_) {
        std::vector<bool> hit(tgt_.order(), false);
        for (Elem y : map) {
          if (hit[y]) return;
          hit[y] = true;
        }
      }
      found_.push_back(std::move(map));
      return;
    }
    const std::size_t gen_order = src_.element_order(gens_[depth]);
    for (Elem t = 0; t < tgt_.order(); ++t) {
      const std::size_t t_order = tgt_.element_order(t);
      if (bijective_ ? t_order != gen_order : gen_order % t_order != 0) continue;
      images_[depth] = t;
      if (!extend(depth + 1, map)) continue;
      recurse(depth + 1);
    }
  }

  const FiniteGroup& src_;
  const FiniteGroup& tgt_;
  bool bijective_;
  const std::vector<Elem>& gens_;
  std::vector<Elem> images_;
  std::vector<std::vector<Elem>> found_;
};

}  // namespace

std::vector<GroupHom> homomorphisms(const GroupPtr& source, const GroupPtr& target,
                                    std::size_t size_bound) {
  check_bound(source->order(), size_bound, "homomorphisms");
  check_bound(target->order(), size_bound, "homomorphisms");
  std::vector<GroupHom> out;
  for (auto& map : HomSearch(*source, *target, false).run()) {
    out.push_back(unchecked_hom(source, target, std::move(map)));
  }
  return out;
}

std::optional<Elem> AutomorphismGroup::index_of(const std::vector<Elem>& table) const {
  auto it = std::lower_bound(automorphisms.begin(), automorphisms.end(), table);
  if (it == automorphisms.end() || *it != table) return std::nullopt;
  return static_cast<Elem>(it - automorphisms.begin());
}

AutomorphismGroup automorphism_group(const GroupPtr& g, std::size_t size_bound) {
  check_bound(g->order(), size_bound, "automorphism_group");
  AutomorphismGroup aut;
  // Sorted lexicographically, so the identity permutation comes first.
  aut.automorphisms = HomSearch(*g, *g, true).run();
  const std::size_t m = aut.automorphisms.size();
  std::vector<std::vector<Elem>> rows(m, std::vector<Elem>(m));
  std::vector<Elem> composed(g->order());
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) {
      for (Elem x = 0; x < g->order(); ++x) {
        composed[x] = aut.automorphisms[i][aut.automorphisms[j][x]];
      }
      rows[i][j] = *aut.index_of(composed);
    }
  }
  aut.group = make_group(rows);
  std::vector<Elem> table;
  table.reserve(m * g->order());
  for (const auto& perm : aut.automorphisms) table.insert(table.end(), perm.begin(), perm.end());
  aut.action = unchecked_action(aut.group, g, std::move(table));
  return aut;
}

}  // namespace xmlift
