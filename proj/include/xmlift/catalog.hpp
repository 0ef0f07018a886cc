#pragma once

#include <cstddef>

#include "xmlift/group.hpp"

// Small named groups used by fixtures and tests.
namespace xmlift::catalog {

GroupPtr trivial();
/// Z_n, element k is the residue k.
GroupPtr cyclic(std::size_t n);
/// Z_2 x Z_2 with element index 2*i + j for the pair (i, j).
GroupPtr klein();
/// S_n for n <= 5 on permutations in lexicographic one-line order;
/// (p∘q)(i) = p(q(i)). Names use 1-based cycle notation.
GroupPtr symmetric(std::size_t n);
/// D_n of order 2n: index k is r^k, index n+k is s r^k.
GroupPtr dihedral(std::size_t n);
/// Q_8 in the order 1, -1, i, -i, j, -j, k, -k.
GroupPtr quaternion();

/// Z_n -> target sending the residue 1 to `image_of_one`. Validated with make_hom.
GroupHom cyclic_hom(const GroupPtr& source, const GroupPtr& target, Elem image_of_one);

}  // namespace xmlift::catalog
