#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "apery/apery_set.hpp"
#include "apery/semigroup.hpp"

namespace apery {

/// Does the ideal generated by the extremal-ray monomials reduce the maximal
/// ideal? Holds exactly when every non-extremal generator has degree >= 1.
bool has_monomial_reduction(const Semigroup& S);

/// Dimension-2 reformulation: every non-extremal generator lies on or above
/// the line through the two extremal rays. Must agree with
/// has_monomial_reduction on every input.
bool dim2_line_test(const Semigroup& S);

/// Dimension-2 necessary condition: every non-extremal generator dominates
/// the componentwise minima of the two extremal rays. Weaker than
/// has_monomial_reduction.
bool necessary_coordinate_test(const Semigroup& S);

/// All distinct values obtainable as a sum of exactly k generators.
std::set<LatticeVector> sums_of_exactly(const Semigroup& S, int k);

/// Single level of the reduction test; see reduction_number.
bool reduction_level_test(const Semigroup& S, int n);

/// Least n with m^{n+1} = I m^n for the extremal-monomial ideal I.
/// Throws NoMonomialReductionError when I is not a reduction.
int reduction_number(const Semigroup& S);
int reduction_number(const Semigroup& S, const AperyData& ap);

/// |Ap(S,E)| = 1 + codim, i.e. the ring has minimal multiplicity. Only
/// meaningful for Cohen-Macaulay rings; NotCohenMacaulayError otherwise.
bool is_minimal_multiplicity(const Semigroup& S);

/// Generators of an alternative reduction ideal: binomials pairing the first
/// extremal ray against each of the others, plus one monomial per chosen
/// non-extremal generator.
struct IdealDescription {
    std::vector<std::pair<LatticeVector, LatticeVector>> binomials;
    std::vector<LatticeVector> monomials;
};

/// T holds 1-based indices of non-extremal generators and must sit between
/// {j : deg < 1} and {j : deg <= 1}; it defaults to the former.
IdealDescription alternative_reduction_generators(
    const Semigroup& S, const std::optional<std::vector<int>>& T = std::nullopt);

/// Everything the report needs about the monomial reduction in one place.
struct ReductionReport {
    bool exists = false;
    std::vector<Rat> degrees;               // one per non-extremal generator
    std::optional<Int> bound;               // s*l - 1; set when exists and s > 0
    std::optional<int> reduction_number;    // set when exists
    int lower_bound = 0;                    // max Apery order
};

ReductionReport reduction_report(const Semigroup& S, const AperyData& ap);

}  // namespace apery
