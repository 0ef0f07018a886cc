#include "xmlift/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

namespace xmlift::catalog {

GroupPtr trivial() { return make_group({{0}}); }

GroupPtr cyclic(std::size_t n) {
  if (n == 0) throw AlgebraError(ErrorCode::MalformedTable, "Z_0 is not finite");
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  }
  return make_group(rows);
}

GroupPtr klein() { return direct_product(cyclic(2), cyclic(2)).group; }

namespace {

std::string cycle_name(const std::vector<std::size_t>& perm) {
  std::string out;
  std::vector<bool> done(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == start) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      if (!first) out += ' ';
      out += std::to_string(i + 1);
      first = false;
      i = perm[i];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace

GroupPtr symmetric(std::size_t n) {
  if (n == 0 || n > 5) {
    throw AlgebraError(ErrorCode::SizeBound, "symmetric group degree must be 1..5");
  }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::size_t m = perms.size();
  std::vector<std::vector<Elem>> rows(m, std::vector<Elem>(m));
  std::vector<std::size_t> composed(n);
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < m; ++b) {
      for (std::size_t i = 0; i < n; ++i) composed[i] = perms[a][perms[b][i]];
      rows[a][b] = static_cast<Elem>(
          std::lower_bound(perms.begin(), perms.end(), composed) - perms.begin());
    }
  }
  std::vector<std::string> names;
  for (const auto& q : perms) names.push_back(cycle_name(q));
  return make_group(rows, std::move(names));
}

GroupPtr dihedral(std::size_t n) {
  if (n < 1) throw AlgebraError(ErrorCode::MalformedTable, "D_n needs n >= 1");
  const std::size_t m = 2 * n;
  std::vector<std::vector<Elem>> rows(m, std::vector<Elem>(m));
  for (Elem x = 0; x < m; ++x) {
    for (Elem y = 0; y < m; ++y) {
      const std::size_t a = x % n, b = y % n;
      const bool sx = x >= n, sy = y >= n;
      if (!sx && !sy) rows[x][y] = (a + b) % n;
      else if (!sx && sy) rows[x][y] = n + (b + n - a) % n;  // r^a s r^b = s r^(b-a)
      else if (sx && !sy) rows[x][y] = n + (a + b) % n;
      else rows[x][y] = (b + n - a) % n;  // s r^a s r^b = r^(b-a)
    }
  }
  std::vector<std::string> names;
  for (Elem x = 0; x < m; ++x) {
    const std::size_t k = x % n;
    std::string r = k == 0 ? "" : (k == 1 ? "r" : "r" + std::to_string(k));
    if (x < n) names.push_back(k == 0 ? "e" : r);
    else names.push_back("s" + r);
  }
  return make_group(rows, std::move(names));
}

GroupPtr quaternion() {
  // unit products: result unit and whether the sign flips; units 1, i, j, k
  constexpr std::array<std::array<std::pair<int, bool>, 4>, 4> units{{
      {{{0, false}, {1, false}, {2, false}, {3, false}}},
      {{{1, false}, {0, true}, {3, false}, {2, true}}},
      {{{2, false}, {3, true}, {0, true}, {1, false}}},
      {{{3, false}, {2, false}, {1, true}, {0, true}}},
  }};
  std::vector<std::vector<Elem>> rows(8, std::vector<Elem>(8));
  for (Elem x = 0; x < 8; ++x) {
    for (Elem y = 0; y < 8; ++y) {
      auto [u, flip] = units[x / 2][y / 2];
      const bool negative = ((x % 2) ^ (y % 2) ^ (flip ? 1 : 0)) != 0;
      rows[x][y] = static_cast<Elem>(2 * u + (negative ? 1 : 0));
    }
  }
  return make_group(rows, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

GroupHom cyclic_hom(const GroupPtr& source, const GroupPtr& target, Elem image_of_one) {
  std::vector<Elem> images(source->order());
  Elem acc = 0;
  for (Elem k = 0; k < source->order(); ++k) {
    images[k] = acc;
    acc = target->op(acc, image_of_one);
  }
  return make_hom(source, target, std::move(images));
}

}  // namespace xmlift::catalog
