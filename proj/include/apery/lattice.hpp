#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "apery/numeric.hpp"

namespace apery {

/// An integer vector in the ambient lattice Z^d.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::vector<Int> entries) : e_(std::move(entries)) {}
    LatticeVector(std::initializer_list<long long> entries) {
        e_.assign(entries.begin(), entries.end());
    }

    int dim() const { return static_cast<int>(e_.size()); }
    const Int& operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    Int& operator[](int i) { return e_[static_cast<size_t>(i)]; }
    const std::vector<Int>& entries() const { return e_; }

    bool is_zero() const {
        for (const Int& x : e_)
            if (x != 0) return false;
        return true;
    }
    bool has_negative() const {
        for (const Int& x : e_)
            if (x < 0) return true;
        return false;
    }

    LatticeVector& operator+=(const LatticeVector& o) {
        for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    LatticeVector& operator-=(const LatticeVector& o) {
        for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator*(const Int& c, LatticeVector v) {
        for (Int& x : v.e_) x *= c;
        return v;
    }

    bool operator==(const LatticeVector& o) const { return e_ == o.e_; }
    bool operator!=(const LatticeVector& o) const { return e_ != o.e_; }
    /// Lexicographic order; used for canonical listings.
    bool operator<(const LatticeVector& o) const {
        return std::lexicographical_compare(e_.begin(), e_.end(), o.e_.begin(), o.e_.end());
    }

    std::string to_string() const;

private:
    std::vector<Int> e_;
};

/// Componentwise lo <= hi.
inline bool componentwise_leq(const LatticeVector& lo, const LatticeVector& hi) {
    for (int i = 0; i < lo.dim(); ++i)
        if (lo[i] > hi[i]) return false;
    return true;
}

struct LatticeVectorHash {
    size_t operator()(const LatticeVector& v) const;
};

/// Row-style Hermite normal form of an integer lattice: `rows` holds a basis
/// in echelon shape, pivots positive, entries above each pivot reduced into
/// [0, pivot). The form is canonical, so two spans are equal iff their forms
/// coincide row by row.
struct IntegerLatticeBasis {
    int dimension = 0;
    std::vector<LatticeVector> rows;
    std::vector<int> pivot_columns;

    int rank() const { return static_cast<int>(rows.size()); }
};

IntegerLatticeBasis hermite_normal_form(const std::vector<LatticeVector>& vectors);

/// Does v lie in the lattice spanned by `basis`?
bool lattice_contains(const IntegerLatticeBasis& basis, const LatticeVector& v);

/// Index of the lattice in Z^d: product of the HNF pivots when the lattice
/// has full rank, std::nullopt (infinite index) otherwise.
std::optional<Int> lattice_index(const IntegerLatticeBasis& basis);

/// Solve sum_i x_i * basis[i] = target exactly over the rationals. The basis
/// must consist of d linearly independent vectors of dimension d; otherwise
/// SingularBasisError (or DimensionMismatchError for shape violations).
std::vector<Rat> solve_cone_coordinates(const std::vector<LatticeVector>& basis,
                                        const LatticeVector& target);

}  // namespace apery
