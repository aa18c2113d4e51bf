#include "apery/apery_set.hpp"

#include <algorithm>
#include <set>

#include "apery/errors.hpp"

namespace apery {

namespace {

// Guard against runaway enumeration on adversarial inputs; the intended
// working range is small hand-sized semigroups.
constexpr long long kEnumerationCap = 50'000'000;

}  // namespace

SingularExponent singular_exponent(const Semigroup& S, int j) {
    if (j < 1 || j > S.codimension())
        throw PreconditionFailedError("singular_exponent: j must be between 1 and " +
                                      std::to_string(S.codimension()));
    const int d = S.dimension();
    const auto coords = S.cone_coordinates(S.generator(d + j - 1));

    SingularExponent out;
    out.j = j;
    out.c = 1;
    for (const Rat& q : coords) out.c = lcm(out.c, denominator(q));
    out.l.reserve(coords.size());
    out.e = 0;
    for (const Rat& q : coords) {
        Rat scaled = Rat(out.c) * q;
        if (denominator(scaled) != 1)
            throw std::logic_error("singular_exponent: lcm did not clear denominators");
        out.l.push_back(numerator(scaled));
        out.e += numerator(scaled);
    }
    return out;
}

AperyData apery_set(const Semigroup& S) {
    const int d = S.dimension();
    const int s = S.codimension();

    // Every Apery element is a sum sum_j m_j * a_{d+j} with 0 <= m_j < c_j:
    // a maximal expression of an Apery element uses no extremal generator,
    // and m_j >= c_j would let c_j * a_{d+j} be rewritten as an integer
    // combination of the rays, exposing an extremal summand.
    std::vector<long long> bounds(static_cast<size_t>(s));
    long long total = 1;
    for (int j = 1; j <= s; ++j) {
        const Int c = singular_exponent(S, j).c;
        if (c > kEnumerationCap)
            throw Error("apery_set: candidate space too large");
        bounds[static_cast<size_t>(j - 1)] = c.convert_to<long long>();
        total *= bounds[static_cast<size_t>(j - 1)];
        if (total > kEnumerationCap)
            throw Error("apery_set: candidate space too large");
    }

    std::set<LatticeVector> candidates;
    std::vector<long long> m(static_cast<size_t>(s), 0);
    for (;;) {
        LatticeVector w{std::vector<Int>(static_cast<size_t>(d), Int(0))};
        for (int j = 0; j < s; ++j)
            w += Int(m[static_cast<size_t>(j)]) * S.generator(d + j);
        candidates.insert(w);

        int j = 0;
        while (j < s && ++m[static_cast<size_t>(j)] == bounds[static_cast<size_t>(j)]) {
            m[static_cast<size_t>(j)] = 0;
            ++j;
        }
        if (j == s) break;
    }

    AperyData out;
    for (const auto& w : candidates) {
        bool in_apery = true;
        for (int i = 0; i < d; ++i)
            if (S.contains(w - S.generator(i))) {
                in_apery = false;
                break;
            }
        if (!in_apery) continue;

        AperyElement el;
        el.value = w;
        el.order = S.order(w);
        auto [floors, rem] = rem_decompose(S, w);
        el.floors = std::move(floors);
        el.rem = std::move(rem);
        out.max_order = std::max(out.max_order, el.order);
        out.elements.push_back(std::move(el));
    }
    return out;  // std::set iteration already gave lexicographic order
}

std::pair<std::vector<Int>, LatticeVector> rem_decompose(const Semigroup& S,
                                                         const LatticeVector& v) {
    const auto coords = S.cone_coordinates(v);
    std::vector<Int> floors;
    floors.reserve(coords.size());
    LatticeVector rem = v;
    for (int i = 0; i < S.dimension(); ++i) {
        Int f = floor_rat(coords[static_cast<size_t>(i)]);
        rem -= f * S.generator(i);
        floors.push_back(std::move(f));
    }
    if (rem.has_negative())
        throw std::logic_error("rem_decompose: remainder left the first orthant");
    return {std::move(floors), std::move(rem)};
}

std::vector<LatticeVector> fundamental_domain_points(const Semigroup& S) {
    const int d = S.dimension();
    const auto rays = S.extremal_rays();

    // The parallelepiped sits inside the box 0 <= z_i < sum_k (ray_k)_i.
    std::vector<long long> box(static_cast<size_t>(d));
    long long total = 1;
    for (int i = 0; i < d; ++i) {
        Int b = 0;
        for (const auto& r : rays) b += r[i];
        if (b > kEnumerationCap) throw Error("fundamental_domain_points: box too large");
        box[static_cast<size_t>(i)] = b.convert_to<long long>();
        total *= std::max<long long>(box[static_cast<size_t>(i)], 1);
        if (total > kEnumerationCap)
            throw Error("fundamental_domain_points: box too large");
    }

    std::vector<LatticeVector> out;
    std::vector<long long> z(static_cast<size_t>(d), 0);
    for (;;) {
        std::vector<Int> entries(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) entries[static_cast<size_t>(i)] = z[static_cast<size_t>(i)];
        LatticeVector v{std::move(entries)};
        const auto coords = solve_cone_coordinates(rays, v);
        bool inside = true;
        for (const Rat& c : coords)
            if (c < 0 || c >= 1) {
                inside = false;
                break;
            }
        if (inside) out.push_back(std::move(v));

        int i = 0;
        while (i < d && ++z[static_cast<size_t>(i)] == box[static_cast<size_t>(i)]) {
            z[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == d) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool group_contains(const Semigroup& S, const LatticeVector& v) {
    return lattice_contains(S.group_lattice(), v);
}

bool group_is_full(const Semigroup& S) {
    const auto idx = lattice_index(S.group_lattice());
    return idx.has_value() && *idx == 1;
}

}  // namespace apery
