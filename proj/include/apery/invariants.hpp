#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apery/apery_set.hpp"
#include "apery/reduction.hpp"
#include "apery/semigroup.hpp"

namespace apery {

/// R is Cohen-Macaulay iff rem is injective on the Apery set.
bool is_cohen_macaulay(const Semigroup& S);
bool is_cohen_macaulay(const Semigroup& S, const AperyData& ap);

/// Lattice-point identity in dimension 2:
/// |Ap| + |P_S \ Gr(S)| = |det(a_1 a_2)|, which holds iff R is CM.
struct PickIdentity {
    Int apery_count;
    Int outside_group_count;
    Int determinant;  // absolute value
    bool holds = false;
};
PickIdentity pick_identity_check(const Semigroup& S);

/// {w in Ap(S,E) : w + k*a_2 - a_1 in S}; dimension 2 only.
std::vector<LatticeVector> a_k_set(const Semigroup& S, int k);

enum class MultiplicityMethod { apery_cm, dim2_apery_minus_Ar, hilbert_estimate };

std::string to_string(MultiplicityMethod m);

struct MultiplicityResult {
    std::optional<Int> value;  // absent only when the estimate never stabilized
    MultiplicityMethod method = MultiplicityMethod::hilbert_estimate;
    bool certified = false;
    Int upper_bound_apery;
    std::optional<Int> dim2_det_bound;
    bool stabilized = true;
};

MultiplicityResult multiplicity(const Semigroup& S, int hilbert_cap = 40);
MultiplicityResult multiplicity(const Semigroup& S, const AperyData& ap, int hilbert_cap);

/// Uncertified multiplicity from the Hilbert-Samuel function: H(n) counts
/// elements of order < n, and the d-th finite difference of H is eventually
/// the multiplicity. Accepted once constant for d+3 consecutive n.
struct HilbertEstimate {
    std::optional<Int> value;
    bool stabilized = false;
    int last_n = 0;
};
HilbertEstimate hilbert_samuel_estimate(const Semigroup& S, int cap = 40);

/// R is Gorenstein iff it is CM and Ap(S,E) has a unique maximal element
/// under a <= b iff b - a in S.
bool is_gorenstein(const Semigroup& S);
bool is_gorenstein(const Semigroup& S, const AperyData& ap);

/// Valabrega-Valla test for the associated graded ring; requires the
/// monomial reduction (NoMonomialReductionError otherwise).
bool gr_is_cohen_macaulay(const Semigroup& S);
bool gr_is_cohen_macaulay(const Semigroup& S, const AperyData& ap);

/// gr is Gorenstein iff gr is CM and the Apery set has a unique maximal
/// element under the order-compatible relation a <=_M b (b - a in S and
/// ord(b) = ord(b-a) + ord(a)).
bool gr_is_gorenstein(const Semigroup& S);
bool gr_is_gorenstein(const Semigroup& S, const AperyData& ap);

/// Maximal Apery elements under plain divisibility (b - a in S).
std::vector<LatticeVector> divisibility_maxima(const Semigroup& S, const AperyData& ap);
/// Maximal Apery elements under the order-compatible relation.
std::vector<LatticeVector> order_compatible_maxima(const Semigroup& S, const AperyData& ap);

/// Histogram of Apery orders (betas) and its top degree d_S.
std::pair<std::vector<long long>, int> betas_and_dS(const Semigroup& S);
std::pair<std::vector<long long>, int> betas_and_dS(const AperyData& ap);

/// Castelnuovo-Mumford regularity of the associated graded ring, equal to
/// d_S once gr is CM. PreconditionFailedError names the failing hypothesis.
int regularity(const Semigroup& S);

/// Full analysis result; field order mirrors the JSON layout.
struct Report {
    std::vector<LatticeVector> generators;
    std::vector<LatticeVector> extremal_rays;
    int dimension = 0;
    int codimension = 0;
    std::vector<Rat> degrees;
    bool homogeneous = false;
    ReductionReport reduction;
    AperyData apery;
    bool cohen_macaulay = false;
    bool gorenstein = false;
    MultiplicityResult mult;

    struct Graded {
        std::optional<bool> cm;
        std::optional<bool> gorenstein;
        std::vector<long long> betas;
        int d_S = 0;
        std::optional<int> regularity;
    } graded;

    struct Dim2 {
        Int pick_lhs;
        Int determinant;
        bool pick_holds = false;
        Int group_index;
    };
    std::optional<Dim2> dim2;

    std::optional<IdealDescription> alternative_reduction;
    std::vector<std::string> annotations;
};

Report analyze(const Semigroup& S, int hilbert_cap = 40);

}  // namespace apery
