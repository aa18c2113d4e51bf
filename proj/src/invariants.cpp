#include "apery/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "apery/errors.hpp"

namespace apery {

bool is_cohen_macaulay(const Semigroup& S) { return is_cohen_macaulay(S, apery_set(S)); }

bool is_cohen_macaulay(const Semigroup& S, const AperyData& ap) {
    (void)S;
    std::set<LatticeVector> rems;
    for (const auto& el : ap.elements) rems.insert(el.rem);
    return rems.size() == ap.elements.size();
}

PickIdentity pick_identity_check(const Semigroup& S) {
    if (S.dimension() != 2)
        throw DimensionMismatchError("pick_identity_check: requires ambient dimension 2");
    const AperyData ap = apery_set(S);

    PickIdentity out;
    out.apery_count = Int(ap.elements.size());
    out.outside_group_count = 0;
    for (const auto& p : fundamental_domain_points(S))
        if (!group_contains(S, p)) ++out.outside_group_count;
    const LatticeVector& a1 = S.generator(0);
    const LatticeVector& a2 = S.generator(1);
    out.determinant = abs(a1[0] * a2[1] - a2[0] * a1[1]);
    out.holds = (out.apery_count + out.outside_group_count == out.determinant);
    return out;
}

std::vector<LatticeVector> a_k_set(const Semigroup& S, int k) {
    if (S.dimension() != 2)
        throw DimensionMismatchError("a_k_set: requires ambient dimension 2");
    const AperyData ap = apery_set(S);
    std::vector<LatticeVector> out;
    const LatticeVector shift = Int(k) * S.generator(1) - S.generator(0);
    for (const auto& el : ap.elements)
        if (S.contains(el.value + shift)) out.push_back(el.value);
    return out;
}

namespace {

// True iff some combination of the weighted generators spends `budget`
// exactly and lands in the residue class of `target` modulo the parallel
// sublattice. Weights are all positive, so the recursion terminates.
bool escape_search(const std::vector<std::pair<LatticeVector, Rat>>& heavy, size_t i,
                   const Rat& budget, const LatticeVector& partial, const LatticeVector& target,
                   const IntegerLatticeBasis& parallel_lattice) {
    if (budget == 0) return lattice_contains(parallel_lattice, target - partial);
    if (i == heavy.size()) return false;
    Rat rem = budget;
    LatticeVector acc = partial;
    while (true) {
        if (escape_search(heavy, i + 1, rem, acc, target, parallel_lattice)) return true;
        if (rem < heavy[i].second) return false;
        rem -= heavy[i].second;
        acc = acc + heavy[i].first;
    }
}

// Number of Apery elements w such that w - a_first + k*a_second lies in S for
// some k >= 0. These are the w whose classes die in R/(x^{a_first}) at high
// degrees, so the multiplicity is the Apery count minus this number.
//
// Membership along the line is monotone in k, and the coordinate of the line
// along the first ray is frozen at l_first(w) - 1. Any semigroup element with
// that coordinate splits as a combination of generators with positive first
// coordinate, of that exact total weight, plus a vector in the sublattice
// spanned by the generators parallel to the second ray. Existence of a
// witness therefore reduces to a finite knapsack search per Apery element.
long long escaping_apery_count(const Semigroup& S, const AperyData& ap, int first, int second) {
    const LatticeVector& a1 = S.generator(first);
    const LatticeVector& a2 = S.generator(second);
    const std::vector<LatticeVector> rays{a1, a2};

    std::vector<std::pair<LatticeVector, Rat>> heavy;
    std::vector<LatticeVector> parallel;
    for (const auto& g : S.generators()) {
        const Rat w = solve_cone_coordinates(rays, g)[0];
        if (w > 0)
            heavy.emplace_back(g, w);
        else
            parallel.push_back(g);
    }
    const IntegerLatticeBasis parallel_lattice = hermite_normal_form(parallel);

    const LatticeVector zero = Int(0) * a1;
    long long count = 0;
    for (const auto& el : ap.elements) {
        const LatticeVector t = el.value - a1;
        const Rat budget = solve_cone_coordinates(rays, t)[0];
        if (budget < 0) continue;
        if (escape_search(heavy, 0, budget, zero, t, parallel_lattice)) ++count;
    }
    return count;
}

}  // namespace

std::string to_string(MultiplicityMethod m) {
    switch (m) {
        case MultiplicityMethod::apery_cm: return "apery_cm";
        case MultiplicityMethod::dim2_apery_minus_Ar: return "dim2_apery_minus_Ar";
        case MultiplicityMethod::hilbert_estimate: return "hilbert_estimate";
    }
    return "unknown";
}

HilbertEstimate hilbert_samuel_estimate(const Semigroup& S, int cap) {
    const int d = S.dimension();
    HilbertEstimate out;

    LatticeVector zero{std::vector<Int>(static_cast<size_t>(d), Int(0))};
    std::set<LatticeVector> seen{zero};
    std::vector<LatticeVector> frontier{zero};
    std::vector<long long> hist{1};  // hist[o] = #elements of order o found so far
    std::vector<Int> H{Int(1)};      // H[i] = H(i+1) = #{z : ord(z) <= i}

    for (int k = 1; k < cap; ++k) {
        std::vector<LatticeVector> next;
        for (const auto& z : frontier)
            for (const auto& g : S.generators()) {
                LatticeVector w = z + g;
                if (!seen.insert(w).second) continue;
                const int o = S.order(w);
                if (o >= static_cast<int>(hist.size())) hist.resize(static_cast<size_t>(o) + 1, 0);
                ++hist[static_cast<size_t>(o)];
                next.push_back(std::move(w));
            }
        frontier = std::move(next);

        // Every element of order <= k is a sum of at most k generators, so
        // the histogram is now complete up to order k and H(k+1) is exact.
        Int h = 0;
        for (int o = 0; o <= k && o < static_cast<int>(hist.size()); ++o)
            h += hist[static_cast<size_t>(o)];
        H.push_back(h);
        out.last_n = k + 1;

        // Accept once the last d+3 leading differences agree. The window
        // grows with the dimension because short accidental plateaus do
        // occur before the polynomial regime; a window of 3 is known to be
        // fooled in the plane.
        const size_t window = static_cast<size_t>(d) + 3;
        if (H.size() >= static_cast<size_t>(d) + window) {
            std::vector<Int> diff = H;
            for (int t = 0; t < d; ++t)
                for (size_t i = 0; i + 1 < diff.size() - static_cast<size_t>(t); ++i)
                    diff[i] = diff[i + 1] - diff[i];
            const size_t m = H.size() - static_cast<size_t>(d);
            bool flat = true;
            for (size_t j = 1; j < window && flat; ++j)
                if (diff[m - 1 - j] != diff[m - 1]) flat = false;
            if (flat) {
                out.value = diff[m - 1];
                out.stabilized = true;
                return out;
            }
        }
    }
    return out;  // never stabilized within the cap
}

MultiplicityResult multiplicity(const Semigroup& S, int hilbert_cap) {
    return multiplicity(S, apery_set(S), hilbert_cap);
}

MultiplicityResult multiplicity(const Semigroup& S, const AperyData& ap, int hilbert_cap) {
    MultiplicityResult out;
    out.upper_bound_apery = Int(ap.elements.size());
    if (S.dimension() == 2) {
        const LatticeVector& a1 = S.generator(0);
        const LatticeVector& a2 = S.generator(1);
        out.dim2_det_bound = abs(a1[0] * a2[1] - a2[0] * a1[1]);
    }

    const bool reduction = has_monomial_reduction(S);
    const bool cm = is_cohen_macaulay(S, ap);

    if (reduction && cm) {
        out.value = Int(ap.elements.size());
        out.method = MultiplicityMethod::apery_cm;
        out.certified = true;
        return out;
    }

    if (S.dimension() == 2 && reduction) {
        const long long escaped = escaping_apery_count(S, ap, 0, 1);
        const Int value = Int(ap.elements.size()) - Int(escaped);

        // The same count with the roles of the two rays swapped; the
        // multiplicity is intrinsic, so a mismatch is a bug.
        if (escaping_apery_count(S, ap, 1, 0) != escaped)
            throw std::logic_error("multiplicity: value changed under ray swap");

        out.value = value;
        out.method = MultiplicityMethod::dim2_apery_minus_Ar;
        out.certified = true;
        return out;
    }

    const auto est = hilbert_samuel_estimate(S, hilbert_cap);
    out.method = MultiplicityMethod::hilbert_estimate;
    out.certified = false;
    out.stabilized = est.stabilized;
    out.value = est.value;
    return out;
}

std::vector<LatticeVector> divisibility_maxima(const Semigroup& S, const AperyData& ap) {
    std::vector<LatticeVector> out;
    for (const auto& w : ap.elements) {
        bool maximal = true;
        for (const auto& w2 : ap.elements) {
            if (w2.value == w.value) continue;
            if (S.contains(w2.value - w.value)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(w.value);
    }
    return out;
}

std::vector<LatticeVector> order_compatible_maxima(const Semigroup& S, const AperyData& ap) {
    std::vector<LatticeVector> out;
    for (const auto& w : ap.elements) {
        bool maximal = true;
        for (const auto& w2 : ap.elements) {
            if (w2.value == w.value) continue;
            const LatticeVector diff = w2.value - w.value;
            if (diff.has_negative() || !S.contains(diff)) continue;
            if (w2.order == S.order(diff) + w.order) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(w.value);
    }
    return out;
}

bool is_gorenstein(const Semigroup& S) { return is_gorenstein(S, apery_set(S)); }

bool is_gorenstein(const Semigroup& S, const AperyData& ap) {
    if (!is_cohen_macaulay(S, ap)) return false;
    return divisibility_maxima(S, ap).size() == 1;
}

bool gr_is_cohen_macaulay(const Semigroup& S) { return gr_is_cohen_macaulay(S, apery_set(S)); }

bool gr_is_cohen_macaulay(const Semigroup& S, const AperyData& ap) {
    if (!has_monomial_reduction(S))
        throw NoMonomialReductionError(
            "gr_is_cohen_macaulay: the extremal monomials do not generate a reduction");
    if (!is_cohen_macaulay(S, ap)) return false;
    const int r = reduction_number(S, ap);

    // Valabrega-Valla: gr is CM iff I cap m^n = I m^{n-1} for all n >= 1,
    // with I the reduction. Levels n > r are forced by m^{r+1} = I m^r, and
    // within n <= r the elements to test are the sums of exactly k
    // generators, n <= k <= r, outside the Apery set. For each such z only
    // the largest admissible n binds: a witness a_j with z - a_j in S and
    // ord(z - a_j) >= n - 1 serves every smaller n as well.
    std::set<LatticeVector> apery_values;
    for (const auto& el : ap.elements) apery_values.insert(el.value);

    std::map<LatticeVector, int> deepest_level;
    for (int k = 1; k <= r; ++k)
        for (const auto& z : sums_of_exactly(S, k)) deepest_level[z] = k;

    for (const auto& [z, n] : deepest_level) {
        if (apery_values.count(z)) continue;
        bool ok = false;
        for (int j = 0; j < S.dimension() && !ok; ++j) {
            const LatticeVector w = z - S.generator(j);
            if (!w.has_negative() && S.contains(w) && S.order(w) >= n - 1) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

bool gr_is_gorenstein(const Semigroup& S) { return gr_is_gorenstein(S, apery_set(S)); }

bool gr_is_gorenstein(const Semigroup& S, const AperyData& ap) {
    if (!gr_is_cohen_macaulay(S, ap)) return false;
    return order_compatible_maxima(S, ap).size() == 1;
}

std::pair<std::vector<long long>, int> betas_and_dS(const Semigroup& S) {
    return betas_and_dS(apery_set(S));
}

std::pair<std::vector<long long>, int> betas_and_dS(const AperyData& ap) {
    std::vector<long long> betas(static_cast<size_t>(ap.max_order) + 1, 0);
    for (const auto& el : ap.elements) ++betas[static_cast<size_t>(el.order)];
    return {betas, ap.max_order};
}

int regularity(const Semigroup& S) {
    if (!has_monomial_reduction(S))
        throw PreconditionFailedError(
            "regularity: the extremal monomials do not generate a reduction");
    const AperyData ap = apery_set(S);
    if (!gr_is_cohen_macaulay(S, ap))
        throw PreconditionFailedError("regularity: associated graded ring is not Cohen-Macaulay");
    return ap.max_order;
}

namespace {

void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("analyze: internal consistency failed: ") + what);
}

}  // namespace

Report analyze(const Semigroup& S, int hilbert_cap) {
    Report rep;
    rep.generators = S.generators();
    rep.extremal_rays = S.extremal_rays();
    rep.dimension = S.dimension();
    rep.codimension = S.codimension();
    for (int j = 0; j < S.codimension(); ++j)
        rep.degrees.push_back(S.degree(S.generator(S.dimension() + j)));
    rep.homogeneous = S.is_homogeneous();

    rep.apery = apery_set(S);
    rep.reduction = reduction_report(S, rep.apery);
    rep.cohen_macaulay = is_cohen_macaulay(S, rep.apery);
    rep.gorenstein = is_gorenstein(S, rep.apery);
    rep.mult = multiplicity(S, rep.apery, hilbert_cap);

    auto [betas, d_S] = betas_and_dS(rep.apery);
    rep.graded.betas = std::move(betas);
    rep.graded.d_S = d_S;
    if (rep.reduction.exists) {
        rep.graded.cm = gr_is_cohen_macaulay(S, rep.apery);
        rep.graded.gorenstein = *rep.graded.cm && gr_is_gorenstein(S, rep.apery);
        if (*rep.graded.cm) rep.graded.regularity = d_S;
    } else {
        rep.annotations.push_back(
            "graded ring analysis skipped: the extremal monomials do not generate a reduction");
    }

    if (S.dimension() == 2) {
        const auto pick = pick_identity_check(S);
        Report::Dim2 d2;
        d2.pick_lhs = pick.apery_count + pick.outside_group_count;
        d2.determinant = pick.determinant;
        d2.pick_holds = pick.holds;
        d2.group_index = lattice_index(S.group_lattice()).value();
        rep.dim2 = d2;
    } else {
        rep.annotations.push_back(
            "lattice-point identity applies only in ambient dimension 2; section omitted");
    }

    try {
        rep.alternative_reduction = alternative_reduction_generators(S);
    } catch (const EmptyTError&) {
        rep.annotations.push_back(
            "no alternative reduction emitted: every non-extremal generator has degree >= 1");
    }

    if (rep.reduction.exists && rep.reduction.bound.has_value())
        rep.annotations.push_back("reduction number lies in [" +
                                  std::to_string(rep.reduction.lower_bound) + ", " +
                                  rep.reduction.bound->str() + "]: " +
                                  std::to_string(*rep.reduction.reduction_number));
    if (rep.graded.cm.value_or(false)) {
        rep.annotations.push_back(
            "graded ring is Cohen-Macaulay: reduction number equals the top Apery order " +
            std::to_string(rep.graded.d_S));
        if (rep.mult.certified)
            rep.annotations.push_back(
                "reduction number is at most multiplicity minus codimension: " +
                std::to_string(*rep.reduction.reduction_number) + " <= " +
                (*rep.mult.value - Int(rep.codimension)).str());
    }
    if (rep.homogeneous)
        rep.annotations.push_back(
            "all non-extremal generators have degree 1: the ring is isomorphic to its "
            "associated graded ring, so graded results apply to the ring itself");
    if (!rep.mult.certified) {
        rep.annotations.push_back(
            rep.mult.stabilized
                ? "multiplicity is an uncertified Hilbert-Samuel estimate"
                : "Hilbert-Samuel estimate did not stabilize within the cap; multiplicity "
                  "omitted");
    }
    rep.annotations.push_back(
        "minimal reduction statements assume an infinite coefficient field");

    // Cross-checks between independently computed sections. A failure here
    // is a bug, never a property of the input.
    {
        std::set<LatticeVector> rems;
        for (const auto& el : rep.apery.elements) rems.insert(el.rem);
        std::set<LatticeVector> domain_in_group;
        for (const auto& p : fundamental_domain_points(S))
            if (group_contains(S, p)) domain_in_group.insert(p);
        internal_check(rems == domain_in_group,
                       "rem image must equal the parallelepiped points of the group");

        long long beta_sum = 0;
        for (long long b : rep.graded.betas) beta_sum += b;
        internal_check(beta_sum == static_cast<long long>(rep.apery.elements.size()),
                       "betas must sum to the Apery count");
        internal_check(rep.graded.betas.front() == 1, "beta_0 must be 1");

        if (rep.dim2.has_value())
            internal_check(rep.dim2->pick_holds == rep.cohen_macaulay,
                           "lattice-point identity must match the CM test");

        if (rep.dimension == 2) {
            internal_check(dim2_line_test(S) == rep.reduction.exists,
                           "line test must match the degree criterion");
            if (rep.reduction.exists)
                internal_check(necessary_coordinate_test(S),
                               "coordinate test is necessary for a reduction");
        }

        if (rep.mult.value.has_value()) {
            internal_check(*rep.mult.value <= rep.mult.upper_bound_apery,
                           "multiplicity must be bounded by the Apery count");
            if (rep.reduction.exists)
                internal_check(rep.cohen_macaulay
                                   ? *rep.mult.value == rep.mult.upper_bound_apery
                                   : *rep.mult.value < rep.mult.upper_bound_apery,
                               "Apery count must certify multiplicity exactly in the CM case");
        }

        if (rep.graded.cm.value_or(false)) {
            internal_check(*rep.reduction.reduction_number == rep.graded.d_S,
                           "graded CM forces reduction number = top Apery order");
            if (rep.mult.certified)
                internal_check(Int(*rep.reduction.reduction_number) <=
                                   *rep.mult.value - Int(rep.codimension),
                               "graded CM forces r <= e - codim");
        }

        if (rep.graded.gorenstein.value_or(false)) {
            const auto& b = rep.graded.betas;
            for (size_t i = 0; i < b.size(); ++i)
                internal_check(b[i] == b[b.size() - 1 - i],
                               "graded Gorenstein forces a symmetric beta vector");
        }
    }

    return rep;
}

}  // namespace apery
