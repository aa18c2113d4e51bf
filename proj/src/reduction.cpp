#include "apery/reduction.hpp"

#include <algorithm>

#include "apery/errors.hpp"
#include "apery/invariants.hpp"

namespace apery {

bool has_monomial_reduction(const Semigroup& S) {
    for (int j = 0; j < S.codimension(); ++j)
        if (S.degree(S.generator(S.dimension() + j)) < 1) return false;
    return true;
}

bool dim2_line_test(const Semigroup& S) {
    if (S.dimension() != 2)
        throw DimensionMismatchError("dim2_line_test: requires ambient dimension 2");
    const LatticeVector& a1 = S.generator(0);
    const LatticeVector& a2 = S.generator(1);
    // Oriented line through the rays: g(v) = (a1.x - a2.x)(v.y - a1.y)
    // - (a1.y - a2.y)(v.x - a1.x), with g(origin) = -det. Points of the cone
    // on or above the line satisfy g(v) * det >= 0, and no division is
    // needed, so the vertical case a1.x = a2.x costs nothing extra.
    const Int det = a1[0] * a2[1] - a2[0] * a1[1];
    for (int j = 0; j < S.codimension(); ++j) {
        const LatticeVector& v = S.generator(2 + j);
        const Int g = (a1[0] - a2[0]) * (v[1] - a1[1]) - (a1[1] - a2[1]) * (v[0] - a1[0]);
        if (g * det < 0) return false;
    }
    return true;
}

bool necessary_coordinate_test(const Semigroup& S) {
    if (S.dimension() != 2)
        throw DimensionMismatchError("necessary_coordinate_test: requires ambient dimension 2");
    const LatticeVector& a1 = S.generator(0);
    const LatticeVector& a2 = S.generator(1);
    const Int min_x = std::min(a1[0], a2[0]);
    const Int min_y = std::min(a1[1], a2[1]);
    for (int j = 0; j < S.codimension(); ++j) {
        const LatticeVector& v = S.generator(2 + j);
        if (v[0] < min_x || v[1] < min_y) return false;
    }
    return true;
}

namespace {

void collect_sums(const Semigroup& S, int from, int remaining, const LatticeVector& acc,
                  std::set<LatticeVector>& out) {
    if (remaining == 0) {
        out.insert(acc);
        return;
    }
    const int n = static_cast<int>(S.generators().size());
    for (int k = from; k < n; ++k)
        collect_sums(S, k, remaining - 1, acc + S.generator(k), out);
}

}  // namespace

std::set<LatticeVector> sums_of_exactly(const Semigroup& S, int k) {
    std::set<LatticeVector> out;
    LatticeVector zero{std::vector<Int>(static_cast<size_t>(S.dimension()), Int(0))};
    collect_sums(S, 0, k, zero, out);
    return out;
}

bool reduction_level_test(const Semigroup& S, int n) {
    // m^{n+1} = I m^n holds iff every z that is a sum of exactly n+1
    // generators splits as z = a_i + b with b in S of order >= n, for some
    // extremal i. Checking these z suffices: a general element of m^{n+1}
    // is such a sum plus a leftover element of S, and the leftover can be
    // absorbed into b without lowering its order.
    for (const auto& z : sums_of_exactly(S, n + 1)) {
        bool ok = false;
        for (int i = 0; i < S.dimension() && !ok; ++i) {
            const LatticeVector w = z - S.generator(i);
            if (!w.has_negative() && S.contains(w) && S.order(w) >= n) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

int reduction_number(const Semigroup& S) { return reduction_number(S, apery_set(S)); }

int reduction_number(const Semigroup& S, const AperyData& ap) {
    if (!has_monomial_reduction(S))
        throw NoMonomialReductionError(
            "reduction_number: the extremal monomials do not generate a reduction");
    const int s = S.codimension();
    if (s == 0) return 0;

    // One passing level propagates upward (m^{n+2} = m m^{n+1} = I m^{n+1}),
    // so the least passing level is the reduction number. Levels below the
    // maximum Apery order always fail, and the level s*l - 1 is guaranteed
    // to pass, which bounds the search.
    Int l = 0;
    for (int j = 1; j <= s; ++j) l = std::max(l, singular_exponent(S, j).e);
    const Int bound = Int(s) * l - 1;

    for (int n = std::max(ap.max_order, 0); Int(n) <= bound; ++n)
        if (reduction_level_test(S, n)) return n;
    throw std::logic_error("reduction_number: no level passed within the proven bound");
}

bool is_minimal_multiplicity(const Semigroup& S) {
    const AperyData ap = apery_set(S);
    if (!is_cohen_macaulay(S, ap))
        throw NotCohenMacaulayError("is_minimal_multiplicity: ring is not Cohen-Macaulay");
    return static_cast<int>(ap.elements.size()) == 1 + S.codimension();
}

IdealDescription alternative_reduction_generators(const Semigroup& S,
                                                  const std::optional<std::vector<int>>& T) {
    const int d = S.dimension();
    const int s = S.codimension();

    std::vector<int> strict, weak;  // 1-based indices with deg < 1, deg <= 1
    for (int j = 1; j <= s; ++j) {
        const Rat deg = S.degree(S.generator(d + j - 1));
        if (deg < 1) strict.push_back(j);
        if (deg <= 1) weak.push_back(j);
    }

    std::vector<int> chosen;
    if (T.has_value()) {
        chosen = *T;
        std::sort(chosen.begin(), chosen.end());
        chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
        for (int j : chosen) {
            if (j < 1 || j > s)
                throw InvalidTError("alternative_reduction_generators: index " +
                                    std::to_string(j) + " out of range");
            if (!std::binary_search(weak.begin(), weak.end(), j))
                throw InvalidTError("alternative_reduction_generators: index " +
                                    std::to_string(j) + " has degree > 1");
        }
        for (int j : strict)
            if (!std::binary_search(chosen.begin(), chosen.end(), j))
                throw InvalidTError("alternative_reduction_generators: T must contain every "
                                    "index of degree < 1, missing " +
                                    std::to_string(j));
        if (chosen.empty())
            throw EmptyTError("alternative_reduction_generators: T must be non-empty");
    } else {
        chosen = strict;
        if (chosen.empty())
            throw EmptyTError(
                "alternative_reduction_generators: no generator of degree < 1; use the "
                "monomial reduction instead");
    }

    IdealDescription out;
    for (int i = 1; i < d; ++i)
        out.binomials.emplace_back(S.generator(0), S.generator(i));
    for (int j : chosen) out.monomials.push_back(S.generator(d + j - 1));
    return out;
}

ReductionReport reduction_report(const Semigroup& S, const AperyData& ap) {
    ReductionReport out;
    const int s = S.codimension();
    out.degrees.reserve(static_cast<size_t>(s));
    for (int j = 0; j < s; ++j)
        out.degrees.push_back(S.degree(S.generator(S.dimension() + j)));
    out.exists = has_monomial_reduction(S);
    out.lower_bound = ap.max_order;
    if (out.exists) {
        if (s > 0) {
            Int l = 0;
            for (int j = 1; j <= s; ++j) l = std::max(l, singular_exponent(S, j).e);
            out.bound = Int(s) * l - 1;
        }
        out.reduction_number = reduction_number(S, ap);
    }
    return out;
}

}  // namespace apery
