// Acceptance runner: exercises the worked examples end to end and the
// randomized invariant battery. One PASS/FAIL line per criterion; exit code
// is the number of failed criteria.

#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "apery/apery_set.hpp"
#include "apery/errors.hpp"
#include "apery/invariants.hpp"
#include "apery/reduction.hpp"
#include "apery/semigroup.hpp"
#include "support/properties.hpp"
#include "support/random_semigroups.hpp"

using apery::Int;
using apery::LatticeVector;
using apery::Rat;
using apery::Semigroup;

namespace {

struct Criterion {
    std::string name;
    std::function<void(std::vector<std::string>&, std::vector<std::string>&)> body;
};

void expect(bool ok, const std::string& what, std::vector<std::string>& problems) {
    if (!ok) problems.push_back(what);
}

std::set<LatticeVector> apery_values(const Semigroup& S) {
    std::set<LatticeVector> out;
    for (const auto& el : apery::apery_set(S).elements) out.insert(el.value);
    return out;
}

std::string join_values(const std::set<LatticeVector>& values) {
    std::ostringstream os;
    for (const auto& v : values) os << v.to_string() << " ";
    return os.str();
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"reduction data of <(3,1),(0,4),(2,2)>", [](auto& problems, auto&) {
        Semigroup S({{3, 1}, {0, 4}, {2, 2}});
        expect(apery::has_monomial_reduction(S), "monomial reduction should exist", problems);
        expect(S.degree(LatticeVector{2, 2}) == Rat(1), "deg (2,2) should be 1", problems);
        const auto se = apery::singular_exponent(S, 1);
        expect(se.e == Int(3), "coefficient sum e should be 3, got " + se.e.str(), problems);
        const int r = apery::reduction_number(S);
        expect(r == 2, "reduction number should be 2, got " + std::to_string(r), problems);
    }});

    criteria.push_back({"apery set and multiplicity of <(2,0),(0,4),(1,1),(1,2)>",
                        [](auto& problems, auto&) {
        Semigroup S({{2, 0}, {0, 4}, {1, 1}, {1, 2}});
        const std::set<LatticeVector> expected = {{0, 0}, {1, 1}, {1, 2}, {2, 2},
                                                  {2, 3}, {3, 3}, {3, 4}, {4, 5}};
        const auto values = apery_values(S);
        expect(values == expected, "apery set mismatch: got " + join_values(values), problems);
        expect(apery::is_cohen_macaulay(S), "ring should be CM", problems);
        expect(!apery::has_monomial_reduction(S), "monomial reduction should not exist", problems);
        const auto m = apery::multiplicity(S);
        expect(m.value.has_value() && *m.value == Int(6), "multiplicity estimate should be 6",
               problems);
        expect(!m.certified, "estimate must not claim certification", problems);
        expect(m.upper_bound_apery == Int(8) && Int(6) < m.upper_bound_apery,
               "estimate should sit strictly below the apery count 8", problems);
    }});

    criteria.push_back({"degrees and fallback ideal of <(2,0),(0,4),(1,1),(1,2),(2,1)>",
                        [](auto& problems, auto&) {
        Semigroup S({{2, 0}, {0, 4}, {1, 1}, {1, 2}, {2, 1}});
        const std::vector<Rat> degrees = {S.degree(LatticeVector{1, 1}),
                                          S.degree(LatticeVector{1, 2}),
                                          S.degree(LatticeVector{2, 1})};
        expect(degrees == std::vector<Rat>{Rat(3, 4), Rat(1), Rat(5, 4)},
               "degrees should be 3/4, 1, 5/4", problems);
        const auto ideal = apery::alternative_reduction_generators(S);
        expect(ideal.binomials.size() == 1 && ideal.binomials[0].first == LatticeVector{2, 0} &&
                   ideal.binomials[0].second == LatticeVector{0, 4},
               "expected the single binomial (2,0) - (0,4)", problems);
        expect(ideal.monomials == std::vector<LatticeVector>{{1, 1}},
               "expected the single monomial (1,1)", problems);
    }});

    criteria.push_back({"certified and estimated multiplicities of three plane semigroups",
                        [](auto& problems, auto&) {
        Semigroup A({{3, 1}, {4, 2}, {5, 2}});
        const auto ma = apery::multiplicity(A);
        expect(ma.value.has_value() && *ma.value == Int(2), "first multiplicity should be 2",
               problems);
        expect(ma.certified && ma.method == apery::MultiplicityMethod::apery_cm,
               "first multiplicity should be certified via the apery count", problems);
        expect(ma.dim2_det_bound.has_value() && *ma.dim2_det_bound == Int(2),
               "first determinant bound should be 2", problems);

        Semigroup B({{5, 3}, {3, 5}, {2, 2}});
        const auto pick = apery::pick_identity_check(B);
        expect(pick.apery_count == Int(4) && pick.outside_group_count == Int(12) &&
                   pick.determinant == Int(16) && pick.holds,
               "lattice point identity should read 4 + 12 = 16", problems);
        expect(apery::is_cohen_macaulay(B), "second ring should be CM", problems);
        const auto mb = apery::multiplicity(B);
        expect(mb.value.has_value() && *mb.value == Int(2) && !mb.certified,
               "second multiplicity estimate should be 2", problems);

        Semigroup C({{4, 1}, {1, 3}, {2, 2}});
        expect(!apery::has_monomial_reduction(C), "third semigroup has no monomial reduction",
               problems);
        expect(C.degree(LatticeVector{2, 2}) == Rat(10, 11), "third degree should be 10/11",
               problems);
        expect(apery::necessary_coordinate_test(C),
               "coordinate test should still pass for the third semigroup", problems);
    }});

    criteria.push_back({"<(6,0),(0,4),(3,3),(3,9)>: CM ring, non-CM graded ring",
                        [](auto& problems, auto&) {
        Semigroup S({{6, 0}, {0, 4}, {3, 3}, {3, 9}});
        const std::set<LatticeVector> expected = {{0, 0}, {3, 3}, {3, 9}, {6, 6}};
        expect(apery_values(S) == expected, "apery set mismatch", problems);
        expect(apery::is_cohen_macaulay(S), "ring should be CM", problems);
        expect(!apery::gr_is_cohen_macaulay(S), "graded ring should not be CM", problems);
        const auto m = apery::multiplicity(S);
        expect(m.value.has_value() && *m.value == Int(4) && m.certified,
               "multiplicity should be certified as 4", problems);
        const int r = apery::reduction_number(S);
        const Int slack = *m.value - Int(S.codimension());
        expect(r >= 3, "reduction number should be at least 3", problems);
        expect(Int(r) > slack && slack == Int(2),
               "reduction number should exceed e - s = 2", problems);
    }});

    criteria.push_back({"graded gorenstein dichotomy of two plane semigroups",
                        [](auto& problems, auto&) {
        Semigroup S({{0, 2}, {2, 1}, {0, 3}, {1, 2}});
        expect(apery::gr_is_cohen_macaulay(S), "first graded ring should be CM", problems);
        expect(apery::gr_is_gorenstein(S), "first graded ring should be Gorenstein", problems);
        const auto [betas, d_S] = apery::betas_and_dS(S);
        expect(betas == std::vector<long long>{1, 2, 1}, "betas should be (1,2,1)", problems);
        expect(apery::regularity(S) == 2, "regularity should be 2", problems);

        Semigroup T({{3, 1}, {0, 4}, {1, 3}, {2, 2}});
        const std::set<LatticeVector> expected = {{0, 0}, {1, 3}, {2, 2}};
        expect(apery_values(T) == expected, "second apery set mismatch", problems);
        const auto maxima = apery::order_compatible_maxima(T, apery::apery_set(T));
        expect(maxima.size() == 2, "second semigroup should have exactly 2 order-compatible maxima",
               problems);
        expect(!apery::gr_is_gorenstein(T), "second graded ring should not be Gorenstein",
               problems);
    }});

    criteria.push_back({"<(5,0),(0,5),(6,0),(0,6)>: multiplicity and reduction bounds",
                        [](auto& problems, auto&) {
        Semigroup S({{5, 0}, {0, 5}, {6, 0}, {0, 6}});
        const auto m = apery::multiplicity(S);
        expect(m.value.has_value() && *m.value == Int(25) && m.certified,
               "multiplicity should be certified as 25", problems);
        const auto ap = apery::apery_set(S);
        const auto rep = apery::reduction_report(S, ap);
        expect(rep.bound.has_value() && *rep.bound == Int(11), "level bound should be 11",
               problems);
        expect(rep.reduction_number.has_value() && *rep.reduction_number <= 11,
               "reduction number should respect the bound", problems);
        expect(Int(11) < *m.value - Int(S.codimension()),
               "the bound 11 should undercut e - s = 23", problems);
    }});

    criteria.push_back({"three-dimensional semigroup on seven generators",
                        [](auto& problems, auto& notes) {
        Semigroup S({{5, 0, 0}, {0, 5, 0}, {0, 0, 5}, {4, 1, 0},
                     {2, 0, 3}, {1, 0, 4}, {1, 3, 1}});
        expect(S.is_homogeneous(), "semigroup should be homogeneous", problems);
        const auto ap = apery::apery_set(S);
        const int d_S = apery::betas_and_dS(ap).second;
        expect(d_S == 6, "top apery order should be 6", problems);
        const LatticeVector deep{18, 10, 2};
        bool found = false;
        for (const auto& el : ap.elements)
            if (el.value == deep) {
                found = true;
                expect(el.order == 6, "(18,10,2) should have order 6", problems);
            }
        expect(found, "(18,10,2) should be an apery element", problems);
        expect(S.order(deep) == 6, "order of (18,10,2) should be 6", problems);
        if (apery::gr_is_cohen_macaulay(S, ap)) {
            expect(apery::regularity(S) == 6, "regularity should be 6", problems);
        } else {
            notes.push_back(
                "graded ring is not CM here, so the regularity clause holds vacuously");
        }
    }});

    criteria.push_back({"invariant battery over 200 random plane semigroups plus the corpus",
                        [](auto& problems, auto& notes) {
        auto pool = testsupport::random_plane_semigroups(200, 424242);
        for (const auto& gens : testsupport::corpus_plane_semigroups()) pool.push_back(gens);
        const auto stats = testsupport::run_plane_properties(pool);
        expect(stats.cases == static_cast<int>(pool.size()), "not every case was checked",
               problems);
        expect(stats.with_reduction > 0 && stats.with_reduction < stats.cases,
               "pool should exercise both reduction outcomes", problems);
        for (size_t i = 0; i < stats.violations.size() && i < 10; ++i)
            problems.push_back(stats.violations[i]);
        if (stats.violations.size() > 10)
            problems.push_back("... and " + std::to_string(stats.violations.size() - 10) +
                               " more violations");
        std::ostringstream os;
        os << stats.cases << " cases, " << stats.with_reduction << " with a monomial reduction, "
           << stats.graded_cm << " graded CM, " << stats.violations.size() << " violations";
        notes.push_back(os.str());
    }});

    int failed = 0;
    for (const auto& criterion : criteria) {
        std::vector<std::string> problems;
        std::vector<std::string> notes;
        try {
            criterion.body(problems, notes);
        } catch (const std::exception& e) {
            problems.push_back(std::string("unexpected exception: ") + e.what());
        }
        if (problems.empty()) {
            std::cout << "PASS  " << criterion.name << "\n";
        } else {
            ++failed;
            std::cout << "FAIL  " << criterion.name << "\n";
            for (const auto& p : problems) std::cout << "      " << p << "\n";
        }
        for (const auto& n : notes) std::cout << "      note: " << n << "\n";
    }

    std::cout << (failed == 0 ? "all criteria passed" : "criteria failed: " + std::to_string(failed))
              << "\n";
    return failed;
}
