#include "apery/semigroup.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

#include "apery/errors.hpp"
#include "apery/simplex.hpp"

namespace apery {

struct Semigroup::Caches {
    mutable std::mutex mutex;
    std::unordered_map<LatticeVector, bool, LatticeVectorHash> member;
    std::unordered_map<LatticeVector, int, LatticeVectorHash> order;
};

namespace {

using Memo = std::unordered_map<LatticeVector, bool, LatticeVectorHash>;

// Membership of v in the semigroup generated by `gens`, by descent through
// the box [0, v]. Standalone variant used during construction.
bool generated_member(const std::vector<LatticeVector>& gens, const LatticeVector& v, Memo& memo) {
    if (v.has_negative()) return false;
    if (v.is_zero()) return true;
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    bool in = false;
    for (const auto& g : gens) {
        if (!componentwise_leq(g, v)) continue;
        if (generated_member(gens, v - g, memo)) {
            in = true;
            break;
        }
    }
    memo.emplace(v, in);
    return in;
}

std::string expression_witness(const std::vector<LatticeVector>& gens, LatticeVector v, Memo& memo) {
    std::string out = v.to_string() + " =";
    bool first = true;
    while (!v.is_zero()) {
        for (const auto& g : gens) {
            if (!componentwise_leq(g, v)) continue;
            if (!generated_member(gens, v - g, memo)) continue;
            out += first ? " " : " + ";
            out += g.to_string();
            first = false;
            v -= g;
            break;
        }
    }
    return out;
}

bool parallel(const LatticeVector& u, const LatticeVector& v) {
    const int d = u.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

}  // namespace

Semigroup::Semigroup(const std::vector<LatticeVector>& raw_generators)
    : caches_(std::make_unique<Caches>()) {
    if (raw_generators.empty()) throw Error("Semigroup: at least one generator required");

    dim_ = raw_generators.front().dim();
    if (dim_ == 0) throw Error("Semigroup: ambient dimension must be positive");
    for (const auto& g : raw_generators) {
        if (g.dim() != dim_)
            throw DimensionMismatchError("Semigroup: generators of mixed dimension");
        if (g.has_negative())
            throw NegativeEntryError("Semigroup: generator " + g.to_string() +
                                     " has a negative entry");
        if (g.is_zero()) throw ZeroGeneratorError("Semigroup: the zero vector is not allowed");
    }
    {
        std::set<LatticeVector> dedupe(raw_generators.begin(), raw_generators.end());
        if (dedupe.size() != raw_generators.size())
            throw DuplicateGeneratorError("Semigroup: duplicate generator in input");
    }

    group_ = hermite_normal_form(raw_generators);
    if (group_.rank() < dim_)
        throw RankDeficientError("Semigroup: generators span a group of rank " +
                                 std::to_string(group_.rank()) + " < " + std::to_string(dim_));

    // Group the generators into rays and find the extreme ones. A ray is
    // extreme exactly when its representative is not a nonnegative rational
    // combination of the other rays.
    std::vector<int> ray_of(raw_generators.size(), -1);
    std::vector<LatticeVector> ray_reps;
    for (size_t k = 0; k < raw_generators.size(); ++k) {
        for (size_t r = 0; r < ray_reps.size(); ++r)
            if (parallel(raw_generators[k], ray_reps[r])) {
                ray_of[k] = static_cast<int>(r);
                break;
            }
        if (ray_of[k] < 0) {
            ray_of[k] = static_cast<int>(ray_reps.size());
            ray_reps.push_back(raw_generators[k]);
        }
    }

    std::vector<bool> ray_extreme(ray_reps.size(), false);
    int extreme_count = 0;
    for (size_t r = 0; r < ray_reps.size(); ++r) {
        std::vector<LatticeVector> others;
        for (size_t q = 0; q < ray_reps.size(); ++q)
            if (q != r) others.push_back(ray_reps[q]);
        ray_extreme[r] = !nonnegative_combination_exists(others, ray_reps[r]);
        if (ray_extreme[r]) ++extreme_count;
    }
    if (extreme_count != dim_)
        throw NotSimplicialError("Semigroup: cone has " + std::to_string(extreme_count) +
                                 " extreme rays, expected " + std::to_string(dim_));

    // The extremal generator on each extreme ray is its componentwise
    // smallest member; any larger parallel generator stays non-extremal.
    std::vector<bool> is_extremal_gen(raw_generators.size(), false);
    for (size_t r = 0; r < ray_reps.size(); ++r) {
        if (!ray_extreme[r]) continue;
        int smallest = -1;
        for (size_t k = 0; k < raw_generators.size(); ++k) {
            if (ray_of[k] != static_cast<int>(r)) continue;
            if (smallest < 0 ||
                componentwise_leq(raw_generators[k], raw_generators[static_cast<size_t>(smallest)]))
                smallest = static_cast<int>(k);
        }
        is_extremal_gen[static_cast<size_t>(smallest)] = true;
    }

    for (size_t k = 0; k < raw_generators.size(); ++k)
        if (is_extremal_gen[k]) gens_.push_back(raw_generators[k]);
    for (size_t k = 0; k < raw_generators.size(); ++k)
        if (!is_extremal_gen[k]) gens_.push_back(raw_generators[k]);
    codim_ = static_cast<int>(gens_.size()) - dim_;

    // Invert the ray matrix once; cone coordinates are then a single
    // rational matrix-vector product.
    {
        const int d = dim_;
        std::vector<std::vector<Rat>> m(static_cast<size_t>(d),
                                        std::vector<Rat>(2 * static_cast<size_t>(d)));
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(gens_[static_cast<size_t>(j)][i]);
            m[static_cast<size_t>(i)][static_cast<size_t>(d + i)] = 1;
        }
        for (int col = 0; col < d; ++col) {
            int pivot = -1;
            for (int r = col; r < d; ++r)
                if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) throw std::logic_error("Semigroup: extreme rays are linearly dependent");
            std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(pivot)]);
            const Rat p = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
            for (size_t c = 0; c < 2 * static_cast<size_t>(d); ++c) m[static_cast<size_t>(col)][c] /= p;
            for (int r = 0; r < d; ++r) {
                if (r == col) continue;
                const Rat f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
                if (f == 0) continue;
                for (size_t c = 0; c < 2 * static_cast<size_t>(d); ++c)
                    m[static_cast<size_t>(r)][c] -= f * m[static_cast<size_t>(col)][c];
            }
        }
        ray_inverse_.assign(static_cast<size_t>(d), std::vector<Rat>(static_cast<size_t>(d)));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                ray_inverse_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    m[static_cast<size_t>(i)][static_cast<size_t>(d + j)];
    }

    for (const auto& g : gens_) {
        const auto coords = cone_coordinates(g);
        (void)coords;  // throws OutsideConeError on failure, which cannot happen here
    }

    // Minimality: no generator may lie in the semigroup spanned by the rest.
    for (size_t k = 0; k < gens_.size(); ++k) {
        std::vector<LatticeVector> others;
        for (size_t q = 0; q < gens_.size(); ++q)
            if (q != k) others.push_back(gens_[q]);
        Memo memo;
        if (generated_member(others, gens_[k], memo))
            throw NotMinimalError("Semigroup: generating set is not minimal: " +
                                  expression_witness(others, gens_[k], memo));
    }
}

Semigroup::Semigroup(Semigroup&&) noexcept = default;
Semigroup& Semigroup::operator=(Semigroup&&) noexcept = default;
Semigroup::~Semigroup() = default;

std::vector<LatticeVector> Semigroup::extremal_rays() const {
    return {gens_.begin(), gens_.begin() + dim_};
}

void Semigroup::check_dimension(const LatticeVector& v) const {
    if (v.dim() != dim_)
        throw DimensionMismatchError("Semigroup: vector " + v.to_string() +
                                     " has dimension " + std::to_string(v.dim()) +
                                     ", expected " + std::to_string(dim_));
}

bool Semigroup::contains_impl(const LatticeVector& v) const {
    if (v.has_negative()) return false;
    if (v.is_zero()) return true;
    auto it = caches_->member.find(v);
    if (it != caches_->member.end()) return it->second;
    bool in = false;
    for (const auto& g : gens_) {
        if (!componentwise_leq(g, v)) continue;
        if (contains_impl(v - g)) {
            in = true;
            break;
        }
    }
    caches_->member.emplace(v, in);
    return in;
}

int Semigroup::order_impl(const LatticeVector& v) const {
    if (v.is_zero()) return 0;
    auto it = caches_->order.find(v);
    if (it != caches_->order.end()) return it->second;
    int best = -1;
    for (const auto& g : gens_) {
        if (!componentwise_leq(g, v)) continue;
        const LatticeVector w = v - g;
        if (!contains_impl(w)) continue;
        best = std::max(best, 1 + order_impl(w));
    }
    if (best < 0) throw std::logic_error("Semigroup::order_impl called on a non-member");
    caches_->order.emplace(v, best);
    return best;
}

bool Semigroup::contains(const LatticeVector& v) const {
    check_dimension(v);
    if (v.has_negative()) return false;
    std::lock_guard<std::mutex> lock(caches_->mutex);
    return contains_impl(v);
}

int Semigroup::order(const LatticeVector& v) const {
    check_dimension(v);
    std::lock_guard<std::mutex> lock(caches_->mutex);
    if (!contains_impl(v))
        throw NotMemberError("order: " + v.to_string() + " is not in the semigroup");
    return order_impl(v);
}

std::vector<int> Semigroup::maximal_expression(const LatticeVector& v) const {
    check_dimension(v);
    std::lock_guard<std::mutex> lock(caches_->mutex);
    if (!contains_impl(v))
        throw NotMemberError("maximal_expression: " + v.to_string() +
                             " is not in the semigroup");
    std::vector<int> coeff(gens_.size(), 0);
    LatticeVector cur = v;
    while (!cur.is_zero()) {
        const int o = order_impl(cur);
        bool stepped = false;
        for (size_t k = 0; k < gens_.size(); ++k) {
            if (!componentwise_leq(gens_[k], cur)) continue;
            const LatticeVector w = cur - gens_[k];
            if (!contains_impl(w) || order_impl(w) != o - 1) continue;
            ++coeff[k];
            cur = w;
            stepped = true;
            break;
        }
        if (!stepped) throw std::logic_error("maximal_expression: no descent step found");
    }
    return coeff;
}

std::vector<Rat> Semigroup::cone_coordinates(const LatticeVector& v) const {
    check_dimension(v);
    std::vector<Rat> coords(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        Rat acc = 0;
        for (int j = 0; j < dim_; ++j)
            acc += ray_inverse_[static_cast<size_t>(i)][static_cast<size_t>(j)] * Rat(v[j]);
        coords[static_cast<size_t>(i)] = acc;
    }
    for (const Rat& c : coords)
        if (c < 0)
            throw OutsideConeError("cone_coordinates: " + v.to_string() +
                                   " lies outside the cone spanned by the extremal rays");
    return coords;
}

Rat Semigroup::degree(const LatticeVector& v) const {
    Rat sum = 0;
    for (const Rat& c : cone_coordinates(v)) sum += c;
    return sum;
}

bool Semigroup::is_homogeneous() const {
    for (int j = 0; j < codim_; ++j)
        if (degree(gens_[static_cast<size_t>(dim_ + j)]) != 1) return false;
    return true;
}

}  // namespace apery
