#pragma once

#include <utility>
#include <vector>

#include "apery/semigroup.hpp"

namespace apery {

/// Clearing data of the j-th non-extremal generator: the smallest positive
/// integer c with c * a_{d+j} = sum l_i * ray_i over the integers, together
/// with the l_i and their sum e = c * degree(a_{d+j}).
struct SingularExponent {
    int j = 0;  // 1-based index among the non-extremal generators
    Int c;
    std::vector<Int> l;
    Int e;
};

SingularExponent singular_exponent(const Semigroup& S, int j);

struct AperyElement {
    LatticeVector value;
    int order = 0;
    LatticeVector rem;
    std::vector<Int> floors;
};

/// Apery set of S with respect to the extremal rays: elements w of S with
/// w - ray_i outside S for every i. Sorted lexicographically by value.
struct AperyData {
    std::vector<AperyElement> elements;
    int max_order = 0;
};

AperyData apery_set(const Semigroup& S);

/// Write v = sum n_i * ray_i + rem with n_i = floor of the i-th cone
/// coordinate; rem is the unique representative of v modulo the ray lattice
/// inside the half-open parallelepiped of the rays.
std::pair<std::vector<Int>, LatticeVector> rem_decompose(const Semigroup& S,
                                                         const LatticeVector& v);

/// All integer points of the half-open parallelepiped spanned by the
/// extremal rays (cone coordinates in [0,1)). Sorted lexicographically.
std::vector<LatticeVector> fundamental_domain_points(const Semigroup& S);

/// Membership in the group of differences of S.
bool group_contains(const Semigroup& S, const LatticeVector& v);

/// Does the group of differences equal all of Z^d?
bool group_is_full(const Semigroup& S);

}  // namespace apery
