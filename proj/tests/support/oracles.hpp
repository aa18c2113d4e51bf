#pragma once

// Brute-force reference implementations used only by tests. Deliberately
// independent of the library's algorithms: plain dynamic programming over a
// box, union-find residue counting, and exhaustive coefficient search.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "apery/lattice.hpp"

namespace oracle {

using apery::Int;
using apery::LatticeVector;

/// Orders of all semigroup elements inside the box [0, box], computed by a
/// forward DP in row-major order (every v - g precedes v). -1 = not a member.
class BoxOrders {
public:
    BoxOrders(const std::vector<LatticeVector>& gens, const LatticeVector& box) : box_(box) {
        const int d = box.dim();
        std::vector<Int> cur(static_cast<size_t>(d), Int(0));
        for (;;) {
            LatticeVector v{cur};
            int best = v.is_zero() ? 0 : -1;
            for (const auto& g : gens) {
                const LatticeVector w = v - g;
                if (w.has_negative() || w == v) continue;
                auto it = ord_.find(w);
                if (it != ord_.end() && it->second >= 0) best = std::max(best, it->second + 1);
            }
            ord_.emplace(std::move(v), best);

            int i = d - 1;
            while (i >= 0 && cur[static_cast<size_t>(i)] == box[i]) {
                cur[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++cur[static_cast<size_t>(i)];
        }
    }

    bool member(const LatticeVector& v) const {
        auto it = ord_.find(v);
        return it != ord_.end() && it->second >= 0;
    }

    int order(const LatticeVector& v) const { return ord_.at(v); }

    /// Apery elements inside the box, straight from the definition.
    std::set<LatticeVector> apery(const std::vector<LatticeVector>& rays) const {
        std::set<LatticeVector> out;
        for (const auto& [v, o] : ord_) {
            if (o < 0) continue;
            bool in = true;
            for (const auto& r : rays) {
                const LatticeVector w = v - r;
                if (!w.has_negative() && member(w)) {
                    in = false;
                    break;
                }
            }
            if (in) out.insert(v);
        }
        return out;
    }

    const LatticeVector& box() const { return box_; }

private:
    LatticeVector box_;
    std::map<LatticeVector, int> ord_;
};

/// Number of residue classes of Z^d modulo the lattice spanned by `vectors`
/// that are visible in the box [0,M)^d, counted by union-find. Steps are all
/// combinations of the generators with coefficients in [-3,3], not just the
/// generators themselves: two points of one class may only be connected by a
/// path through such a combination when single steps would leave the box.
/// For small lattices and a generous M this equals the lattice index.
inline long long residue_count(const std::vector<LatticeVector>& vectors, int M) {
    const int d = vectors.front().dim();

    std::set<LatticeVector> steps;
    {
        const size_t k = vectors.size();
        std::vector<int> x(k, -3);
        for (;;) {
            LatticeVector acc{std::vector<Int>(static_cast<size_t>(d), Int(0))};
            for (size_t i = 0; i < k; ++i) acc += Int(x[i]) * vectors[i];
            if (!acc.is_zero()) steps.insert(acc);

            size_t i = 0;
            while (i < k && x[i] == 3) {
                x[i] = -3;
                ++i;
            }
            if (i == k) break;
            ++x[i];
        }
    }

    long long total = 1;
    for (int i = 0; i < d; ++i) total *= M;

    std::vector<long long> parent(static_cast<size_t>(total));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<long long(long long)> find = [&](long long x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](long long a, long long b) { parent[static_cast<size_t>(find(a))] = find(b); };

    auto index_of = [&](const std::vector<long long>& coords) {
        long long idx = 0;
        for (int i = 0; i < d; ++i) idx = idx * M + coords[static_cast<size_t>(i)];
        return idx;
    };

    std::vector<long long> cur(static_cast<size_t>(d), 0);
    for (;;) {
        for (const auto& g : steps) {
            std::vector<long long> to = cur;
            bool inside = true;
            for (int i = 0; i < d; ++i) {
                to[static_cast<size_t>(i)] += g[i].convert_to<long long>();
                if (to[static_cast<size_t>(i)] < 0 || to[static_cast<size_t>(i)] >= M) inside = false;
            }
            if (inside) unite(index_of(cur), index_of(to));
        }
        int i = d - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == M - 1) {
            cur[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
    }

    long long classes = 0;
    for (long long x = 0; x < total; ++x)
        if (find(x) == x) ++classes;
    return classes;
}

/// Exhaustive test for v in the integer span of `vectors`, coefficients in
/// [-bound, bound].
inline bool integer_combination_exists(const std::vector<LatticeVector>& vectors,
                                       const LatticeVector& v, int bound) {
    const size_t k = vectors.size();
    std::vector<int> x(k, -bound);
    for (;;) {
        LatticeVector acc{std::vector<Int>(static_cast<size_t>(v.dim()), Int(0))};
        for (size_t i = 0; i < k; ++i) acc += Int(x[i]) * vectors[i];
        if (acc == v) return true;

        size_t i = 0;
        while (i < k && x[i] == bound) {
            x[i] = -bound;
            ++i;
        }
        if (i == k) return false;
        ++x[i];
    }
}

}  // namespace oracle
