#pragma once

#include <memory>
#include <vector>

#include "apery/lattice.hpp"

namespace apery {

/// A simplicial affine semigroup S in N^d, given by a minimal generating set
/// that spans a rank-d group of differences. Construction validates the
/// input, detects the d extremal rays, and reorders the generators so the
/// extremal ones come first (each group kept in input order).
///
/// Membership and order queries memoize their recursions; the caches are
/// mutex-guarded, so a fully built Semigroup is safe for concurrent
/// read-only use.
class Semigroup {
public:
    explicit Semigroup(const std::vector<LatticeVector>& raw_generators);

    Semigroup(Semigroup&&) noexcept;
    Semigroup& operator=(Semigroup&&) noexcept;
    Semigroup(const Semigroup&) = delete;
    Semigroup& operator=(const Semigroup&) = delete;
    ~Semigroup();

    /// Ambient (and Krull) dimension d.
    int dimension() const { return dim_; }
    /// Number of non-extremal generators s.
    int codimension() const { return codim_; }

    /// All generators, the d extremal rays first.
    const std::vector<LatticeVector>& generators() const { return gens_; }
    const LatticeVector& generator(int k) const { return gens_[static_cast<size_t>(k)]; }
    std::vector<LatticeVector> extremal_rays() const;

    /// Group of differences of S as a sublattice of Z^d (always rank d).
    const IntegerLatticeBasis& group_lattice() const { return group_; }

    /// Is v an element of S? Vectors with a negative entry are never members.
    bool contains(const LatticeVector& v) const;

    /// Largest number of generators (with repetition) summing to v.
    /// Throws NotMemberError when v is not in S.
    int order(const LatticeVector& v) const;

    /// One expression of v as a sum of order(v) generators: a coefficient
    /// per generator. Ties are broken by greedily descending through the
    /// lowest-index generator that keeps the order dropping by one.
    std::vector<int> maximal_expression(const LatticeVector& v) const;

    /// The unique rationals (l_1..l_d) with v = sum l_i * ray_i. All of them
    /// must come out nonnegative; otherwise OutsideConeError.
    std::vector<Rat> cone_coordinates(const LatticeVector& v) const;

    /// Sum of the cone coordinates of v.
    Rat degree(const LatticeVector& v) const;

    /// True when every non-extremal generator has degree exactly 1.
    bool is_homogeneous() const;

private:
    struct Caches;

    void check_dimension(const LatticeVector& v) const;
    bool contains_impl(const LatticeVector& v) const;
    int order_impl(const LatticeVector& v) const;

    std::vector<LatticeVector> gens_;
    int dim_ = 0;
    int codim_ = 0;
    IntegerLatticeBasis group_;
    std::vector<std::vector<Rat>> ray_inverse_;
    std::unique_ptr<Caches> caches_;
};

}  // namespace apery
