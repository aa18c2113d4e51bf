#include <doctest.h>

#include <set>
#include <vector>

#include "apery/apery_set.hpp"
#include "apery/errors.hpp"
#include "support/oracles.hpp"

using apery::apery_set;
using apery::Int;
using apery::LatticeVector;
using apery::Semigroup;

namespace {

std::set<LatticeVector> values_of(const apery::AperyData& ap) {
    std::set<LatticeVector> out;
    for (const auto& el : ap.elements) out.insert(el.value);
    return out;
}

}  // namespace

TEST_SUITE("apery") {

TEST_CASE("clearing data of non-extremal generators") {
    Semigroup S({{3, 1}, {0, 4}, {2, 2}});
    const auto se = apery::singular_exponent(S, 1);
    CHECK(se.j == 1);
    CHECK(se.c == Int(3));
    CHECK(se.l == std::vector<Int>{2, 1});
    CHECK(se.e == Int(3));

    Semigroup T({{0, 2}, {2, 1}, {0, 3}, {1, 2}});
    const auto s1 = apery::singular_exponent(T, 1);
    CHECK(s1.c == Int(2));
    CHECK(s1.l == std::vector<Int>{3, 0});
    CHECK(s1.e == Int(3));
    const auto s2 = apery::singular_exponent(T, 2);
    CHECK(s2.c == Int(4));
    CHECK(s2.l == std::vector<Int>{3, 2});
    CHECK(s2.e == Int(5));
}

TEST_CASE("apery sets match frozen examples") {
    Semigroup S({{0, 2}, {2, 1}, {0, 3}, {1, 2}});
    const auto ap = apery_set(S);
    CHECK(values_of(ap) ==
          std::set<LatticeVector>{{0, 0}, {0, 3}, {1, 2}, {1, 5}});
    CHECK(ap.max_order == 2);

    Semigroup U({{6, 0}, {0, 4}, {3, 3}, {3, 9}});
    CHECK(values_of(apery_set(U)) ==
          std::set<LatticeVector>{{0, 0}, {3, 3}, {3, 9}, {6, 6}});

    Semigroup V({{2, 0}, {0, 4}, {1, 1}, {1, 2}});
    CHECK(values_of(apery_set(V)) ==
          std::set<LatticeVector>{
              {0, 0}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 5}});
}

TEST_CASE("apery elements carry orders and rem values") {
    Semigroup S({{6, 0}, {0, 4}, {3, 3}, {3, 9}});
    const auto ap = apery_set(S);
    REQUIRE(ap.elements.size() == 4);
    // sorted lexicographically by value
    CHECK(ap.elements[0].value == LatticeVector{0, 0});
    CHECK(ap.elements[0].order == 0);
    CHECK(ap.elements[1].value == LatticeVector{3, 3});
    CHECK(ap.elements[1].rem == LatticeVector{3, 3});
    CHECK(ap.elements[2].value == LatticeVector{3, 9});
    CHECK(ap.elements[2].rem == LatticeVector{3, 1});
    CHECK(ap.elements[3].value == LatticeVector{6, 6});
    CHECK(ap.elements[3].order == 2);
    CHECK(ap.elements[3].rem == LatticeVector{0, 2});
}

TEST_CASE("apery sets agree with the definition on a generous box") {
    const std::vector<std::vector<LatticeVector>> cases = {
        {{0, 2}, {2, 1}, {0, 3}, {1, 2}},
        {{3, 1}, {0, 4}, {2, 2}},
        {{4, 0}, {0, 4}, {1, 3}, {3, 1}},
        {{2, 0}, {0, 4}, {1, 1}, {1, 2}},
        {{5, 0}, {0, 5}, {6, 0}, {0, 6}},
    };
    for (const auto& gens : cases) {
        Semigroup S(gens);
        const auto ap = apery_set(S);

        // box covering every apery value with margin; saturation means the
        // margin finds nothing new
        Int hi = 0;
        for (const auto& el : ap.elements)
            for (int i = 0; i < S.dimension(); ++i)
                if (el.value[i] > hi) hi = el.value[i];
        const LatticeVector box{std::vector<Int>{hi + 8, hi + 8}};

        oracle::BoxOrders dp(gens, box);
        CHECK(values_of(ap) == dp.apery(S.extremal_rays()));
        for (const auto& el : ap.elements) REQUIRE(dp.order(el.value) == el.order);
    }
}

TEST_CASE("rem decomposition lands in the fundamental domain") {
    Semigroup S({{6, 0}, {0, 4}, {3, 3}, {3, 9}});
    const auto [floors, rem] = apery::rem_decompose(S, LatticeVector{6, 6});
    CHECK(floors == std::vector<Int>{1, 1});
    CHECK(rem == LatticeVector{0, 2});

    const auto [f2, r2] = apery::rem_decompose(S, LatticeVector{3, 9});
    CHECK(f2 == std::vector<Int>{0, 2});
    CHECK(r2 == LatticeVector{3, 1});

    const auto [f3, r3] = apery::rem_decompose(S, LatticeVector{0, 0});
    CHECK(r3 == LatticeVector{0, 0});
}

TEST_CASE("fundamental domain point count equals the ray determinant") {
    Semigroup S({{3, 1}, {0, 4}, {2, 2}});
    const auto pts = apery::fundamental_domain_points(S);
    CHECK(pts.size() == 12);
    CHECK(std::count(pts.begin(), pts.end(), LatticeVector{0, 0}) == 1);
    CHECK(std::count(pts.begin(), pts.end(), LatticeVector{2, 2}) == 1);
    // no point may dominate the rays' componentwise span boundary
    for (const auto& p : pts) {
        const auto coords = S.cone_coordinates(p);
        for (const auto& c : coords) {
            CHECK(c >= 0);
            CHECK(c < 1);
        }
    }
}

TEST_CASE("group of differences membership") {
    Semigroup S({{3, 1}, {0, 4}, {2, 2}});
    CHECK(apery::group_contains(S, LatticeVector{1, 3}));
    CHECK(apery::group_contains(S, LatticeVector{-1, -3}));
    CHECK_FALSE(apery::group_contains(S, LatticeVector{1, 0}));
    CHECK_FALSE(apery::group_is_full(S));

    Semigroup F({{4, 1}, {1, 3}, {2, 2}});
    CHECK(apery::group_is_full(F));
    CHECK(apery::group_contains(F, LatticeVector{0, 1}));
}

}  // TEST_SUITE
