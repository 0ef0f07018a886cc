#include "xmlift/derivation.hpp"

#include <algorithm>

namespace xmlift {

namespace {

class PrunedSearch {
 public:
  explicit PrunedSearch(const GroupAction& action)
      : action_(action), b_(*action.actor()), a_(*action.space()), unset_(a_.order()) {}

  std::vector<std::vector<Elem>> run() {
    std::vector<Elem> d(b_.order(), unset_);
    if (assign(d, 0, 0)) recurse(d);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // Sets d(b) = value and closes under the derivation identity. Returns
  // false on a contradiction.
  bool assign(std::vector<Elem>& d, Elem b, Elem value) const {
    if (d[b] != unset_) return d[b] == value;
    d[b] = value;
    std::vector<Elem> queue{b};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Elem x = queue[head];
      for (Elem y = 0; y < b_.order(); ++y) {
        if (d[y] == unset_) continue;
        // x+y and y+x, each forced by the identity
        const std::pair<Elem, Elem> orders[] = {{x, y}, {y, x}};
        for (auto [first, second] : orders) {
          const Elem sum = b_.op(first, second);
          const Elem forced = a_.op(d[first], action_(first, d[second]));
          if (d[sum] == unset_) {
            d[sum] = forced;
            queue.push_back(sum);
          } else if (d[sum] != forced) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void recurse(const std::vector<Elem>& d) {
    auto next = std::find(d.begin(), d.end(), unset_);
    if (next == d.end()) {
      found_.push_back(d);
      return;
    }
    const Elem b = static_cast<Elem>(next - d.begin());
    for (Elem value = 0; value < a_.order(); ++value) {
      std::vector<Elem> trial = d;
      if (assign(trial, b, value)) recurse(trial);
    }
  }

  const GroupAction& action_;
  const FiniteGroup& b_;
  const FiniteGroup& a_;
  const Elem unset_;
  std::vector<std::vector<Elem>> found_;
};

std::vector<std::vector<Elem>> exhaustive_search(const GroupAction& action) {
  const FiniteGroup& b_grp = *action.actor();
  const FiniteGroup& a_grp = *action.space();
  std::size_t total = 1;
  for (std::size_t i = 0; i < b_grp.order(); ++i) {
    total *= a_grp.order();
    if (total > kExhaustiveSearchLimit) {
      throw AlgebraError(ErrorCode::SizeBound, "|A|^|B| exceeds the exhaustive search limit");
    }
  }
  std::vector<std::vector<Elem>> found;
  std::vector<Elem> d(b_grp.order(), 0);
  for (std::size_t code = 0; code < total; ++code) {
    // Last coordinate varies fastest, so the output is already lexicographic.
    std::size_t rest = code;
    for (std::size_t i = b_grp.order(); i-- > 0;) {
      d[i] = rest % a_grp.order();
      rest /= a_grp.order();
    }
    bool ok = true;
    for (Elem x = 0; x < b_grp.order() && ok; ++x) {
      for (Elem y = 0; y < b_grp.order() && ok; ++y) {
        ok = d[b_grp.op(x, y)] == a_grp.op(d[x], action(x, d[y]));
      }
    }
    if (ok) found.push_back(d);
  }
  return found;
}

bool is_bijection(const std::vector<Elem>& map) {
  std::vector<bool> hit(map.size(), false);
  for (Elem y : map) {
    if (y >= map.size() || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

}  // namespace

std::vector<std::vector<Elem>> crossed_homomorphisms(const GroupAction& action,
                                                     const DerivationOptions& options) {
  if (action.actor()->order() > options.size_bound ||
      action.space()->order() > options.size_bound) {
    throw AlgebraError(ErrorCode::SizeBound, "derivation search exceeds size bound",
                       {action.actor()->order(), action.space()->order()});
  }
  if (options.search == DerivationSearch::Exhaustive) return exhaustive_search(action);
  return PrunedSearch(action).run();
}

Derivation make_derivation(XModPtr xm, std::vector<Elem> values) {
  const FiniteGroup& a_grp = *xm->A();
  const FiniteGroup& b_grp = *xm->B();
  if (values.size() != b_grp.order()) {
    throw AlgebraError(ErrorCode::MalformedTable, "derivation needs one value per element of B");
  }
  for (Elem b = 0; b < values.size(); ++b) {
    if (values[b] >= a_grp.order()) {
      throw AlgebraError(ErrorCode::MalformedTable, "derivation value out of range", {b});
    }
  }
  for (Elem b = 0; b < b_grp.order(); ++b) {
    for (Elem b1 = 0; b1 < b_grp.order(); ++b1) {
      if (values[b_grp.op(b, b1)] != a_grp.op(values[b], xm->act(b, values[b1]))) {
        throw AlgebraError(ErrorCode::NotDerivation, "d(b+b1) != d(b) + b·d(b1)", {b, b1});
      }
    }
  }
  const GroupHom& alpha = xm->boundary();
  std::vector<Elem> theta(a_grp.order()), sigma(b_grp.order());
  for (Elem a = 0; a < theta.size(); ++a) theta[a] = a_grp.op(values[alpha(a)], a);
  for (Elem b = 0; b < sigma.size(); ++b) sigma[b] = b_grp.op(alpha(values[b]), b);
  try {
    make_hom(xm->A(), xm->A(), theta);
    make_hom(xm->B(), xm->B(), sigma);
  } catch (const AlgebraError& e) {
    throw AlgebraError(ErrorCode::StructureDefect,
                       std::string("θ_d or σ_d is not an endomorphism: ") + e.what());
  }
  for (Elem b = 0; b < b_grp.order(); ++b) {
    if (theta[values[b]] != values[sigma[b]]) {
      throw AlgebraError(ErrorCode::StructureDefect, "θ_d(d(b)) != d(σ_d(b))", {b});
    }
  }
  Derivation d;
  d.xm_ = std::move(xm);
  d.values_ = std::move(values);
  d.theta_ = std::move(theta);
  d.sigma_ = std::move(sigma);
  return d;
}

Derivation zero_derivation(const XModPtr& xm) {
  return make_derivation(xm, std::vector<Elem>(xm->B()->order(), 0));
}

Derivation whitehead_compose(const Derivation& d1, const Derivation& d2) {
  if (!same_xmod(d1.xm(), d2.xm())) {
    throw AlgebraError(ErrorCode::BaseMismatch, "derivations of different crossed modules");
  }
  const FiniteGroup& a_grp = *d1.xm()->A();
  const std::size_t nb = d1.values().size();
  std::vector<Elem> values(nb);
  for (Elem b = 0; b < nb; ++b) {
    values[b] = a_grp.op(d1(d2.sigma()[b]), d2(b));
    const Elem alternative = a_grp.op(d1.theta()[d2(b)], d1(b));
    if (alternative != values[b]) {
      throw AlgebraError(ErrorCode::FormulaMismatch,
                         "d1σ_{d2}(b) + d2(b) != θ_{d1}d2(b) + d1(b)", {b});
    }
  }
  Derivation d = make_derivation(d1.xm(), std::move(values));
  for (Elem a = 0; a < d.theta().size(); ++a) {
    if (d.theta()[a] != d1.theta()[d2.theta()[a]]) {
      throw AlgebraError(ErrorCode::StructureDefect, "θ_{d1∘d2} != θ_{d1}θ_{d2}", {a});
    }
  }
  for (Elem b = 0; b < nb; ++b) {
    if (d.sigma()[b] != d1.sigma()[d2.sigma()[b]]) {
      throw AlgebraError(ErrorCode::StructureDefect, "σ_{d1∘d2} != σ_{d1}σ_{d2}", {b});
    }
  }
  return d;
}

std::optional<std::size_t> DerivationSemigroup::index_of(const Derivation& d) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), d.values(),
                             [](const Derivation& e, const std::vector<Elem>& v) {
                               return e.values() < v;
                             });
  if (it == elements.end() || it->values() != d.values()) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

DerivationSemigroup enumerate_derivations(const XModPtr& xm, const DerivationOptions& options) {
  DerivationSemigroup sg;
  sg.xm = xm;
  for (auto& values : crossed_homomorphisms(xm->action(), options)) {
    sg.elements.push_back(make_derivation(xm, std::move(values)));
  }
  const std::size_t n = sg.elements.size();
  sg.product.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto k = sg.index_of(whitehead_compose(sg.elements[i], sg.elements[j]));
      if (!k) throw AlgebraError(ErrorCode::StructureDefect, "Der(B, A) not closed", {i, j});
      sg.product[i][j] = *k;
    }
  }
  // The zero derivation is lexicographically smallest, hence index 0.
  sg.inverse.assign(n, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sg.product[i][j] == 0 && sg.product[j][i] == 0) {
        sg.inverse[i] = j;
        sg.units.push_back(i);
        break;
      }
    }
  }
  return sg;
}

RegularityCertificate is_regular(const Derivation& d, const DerivationSemigroup* semigroup,
                                 bool require_unit_check) {
  if (require_unit_check && semigroup == nullptr) {
    throw AlgebraError(ErrorCode::RequiresEnumeration,
                       "unit check needs the enumerated derivation semigroup");
  }
  RegularityCertificate cert;
  cert.theta_bijective = is_bijection(d.theta());
  cert.sigma_bijective = is_bijection(d.sigma());
  cert.regular = cert.theta_bijective;
  if (semigroup != nullptr) {
    auto idx = semigroup->index_of(d);
    if (!idx || !same_xmod(semigroup->xm, d.xm())) {
      throw AlgebraError(ErrorCode::BaseMismatch, "derivation is not in the semigroup");
    }
    cert.semigroup_unit = semigroup->is_unit(*idx);
  }
  if (cert.sigma_bijective != cert.theta_bijective ||
      (cert.semigroup_unit && *cert.semigroup_unit != cert.theta_bijective)) {
    throw AlgebraError(ErrorCode::StructureDefect, "regularity criteria disagree");
  }
  return cert;
}

Derivation lift_derivation(const Derivation& d, const Lifting& l) {
  if (!same_xmod(d.xm(), l.base())) {
    throw AlgebraError(ErrorCode::BaseMismatch, "derivation is not of the lifting's base");
  }
  const GroupHom& omega = l.omega();
  std::vector<Elem> values(l.X()->order());
  for (Elem x = 0; x < values.size(); ++x) values[x] = d(omega(x));
  Derivation lifted = make_derivation(l.lifted(), std::move(values));
  if (lifted.theta() != d.theta()) {
    throw AlgebraError(ErrorCode::StructureDefect, "θ_d != θ_d̃");
  }
  for (Elem x = 0; x < l.X()->order(); ++x) {
    if (d.sigma()[omega(x)] != omega(lifted.sigma()[x])) {
      throw AlgebraError(ErrorCode::StructureDefect, "σ_d∘ω != ω∘σ_d̃", {x});
    }
  }
  if (is_bijection(d.theta()) && !is_regular(lifted).regular) {
    throw AlgebraError(ErrorCode::StructureDefect, "regular derivation lifted to a non-regular one");
  }
  return lifted;
}

std::vector<GroupHom> find_sections(const GroupHom& omega, std::size_t size_bound) {
  std::vector<GroupHom> out;
  for (GroupHom& s : homomorphisms(omega.target(), omega.source(), size_bound)) {
    bool section = true;
    for (Elem b = 0; b < s.source()->order() && section; ++b) section = omega(s(b)) == b;
    if (section) out.push_back(std::move(s));
  }
  return out;
}

Derivation descend_derivation(const Derivation& lifted, const Lifting& l,
                              const GroupHom& section) {
  if (!same_xmod(lifted.xm(), l.lifted())) {
    throw AlgebraError(ErrorCode::BaseMismatch, "derivation is not of the lifted crossed module");
  }
  if (!same_group(section.source(), l.base()->B()) || !same_group(section.target(), l.X())) {
    throw AlgebraError(ErrorCode::TypeMismatch, "section must map B -> X");
  }
  for (Elem b = 0; b < section.source()->order(); ++b) {
    if (l.omega()(section(b)) != b) {
      throw AlgebraError(ErrorCode::NotASection, "ω∘s != 1_B", {b});
    }
  }
  std::vector<Elem> values(section.source()->order());
  for (Elem b = 0; b < values.size(); ++b) values[b] = lifted(section(b));
  return make_derivation(l.base(), std::move(values));
}

DerivationLiftMap lift_derivation_semigroup(const DerivationSemigroup& base, const Lifting& l,
                                            const DerivationSemigroup& lifted) {
  if (!same_xmod(base.xm, l.base()) || !same_xmod(lifted.xm, l.lifted())) {
    throw AlgebraError(ErrorCode::BaseMismatch, "semigroups do not match the lifting");
  }
  DerivationLiftMap map;
  for (const Derivation& d : base.elements) {
    auto idx = lifted.index_of(lift_derivation(d, l));
    if (!idx) throw AlgebraError(ErrorCode::StructureDefect, "lifted derivation not enumerated");
    map.image.push_back(*idx);
  }
  std::vector<std::size_t> sorted = map.image;
  std::sort(sorted.begin(), sorted.end());
  map.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  map.multiplicative = true;
  for (std::size_t i = 0; i < map.image.size(); ++i) {
    for (std::size_t j = 0; j < map.image.size(); ++j) {
      if (map.image[base.product[i][j]] != lifted.product[map.image[i]][map.image[j]]) {
        map.multiplicative = false;
      }
    }
  }
  map.preserves_units = std::all_of(base.units.begin(), base.units.end(), [&](std::size_t u) {
    return lifted.is_unit(map.image[u]);
  });
  return map;
}

EndomorphismPair derivation_to_endomorphism_morphism(const Derivation& d) {
  const XModPtr& xm = d.xm();
  XModMorphism endo = make_morphism(xm, xm, make_hom(xm->A(), xm->A(), d.theta()),
                                    make_hom(xm->B(), xm->B(), d.sigma()));
  Homotopy h = make_homotopy(d.values(), endo, identity_morphism(xm));
  return EndomorphismPair{std::move(endo), std::move(h)};
}

}  // namespace xmlift
