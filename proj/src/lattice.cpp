#include "apery/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "apery/errors.hpp"

namespace apery {

std::string LatticeVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < e_.size(); ++i) {
        if (i) os << ',';
        os << e_[i];
    }
    os << ')';
    return os.str();
}

size_t LatticeVectorHash::operator()(const LatticeVector& v) const {
    size_t h = static_cast<size_t>(v.dim());
    std::hash<Int> hi;
    for (int i = 0; i < v.dim(); ++i)
        h ^= hi(v[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

IntegerLatticeBasis hermite_normal_form(const std::vector<LatticeVector>& vectors) {
    IntegerLatticeBasis out;
    if (vectors.empty()) return out;

    const int d = vectors.front().dim();
    for (const auto& v : vectors)
        if (v.dim() != d)
            throw DimensionMismatchError("hermite_normal_form: vectors of mixed dimension");
    out.dimension = d;

    std::vector<LatticeVector> rows;
    for (const auto& v : vectors)
        if (!v.is_zero()) rows.push_back(v);

    size_t top = 0;
    for (int col = 0; col < d && top < rows.size(); ++col) {
        // Euclidean elimination below `top` until column `col` has at most
        // one nonzero entry in rows top..end.
        for (;;) {
            size_t best = rows.size();
            for (size_t i = top; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
            }
            if (best == rows.size()) break;  // no pivot in this column
            std::swap(rows[top], rows[best]);

            bool leftover = false;
            for (size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = rows[i][col] / rows[top][col];
                if (q != 0) rows[i] -= q * rows[top];
                if (rows[i][col] != 0) leftover = true;
            }
            if (!leftover) break;
        }
        if (top < rows.size() && rows[top][col] != 0) {
            if (rows[top][col] < 0) rows[top] = Int(-1) * rows[top];
            // Canonical reduction of the entries above the pivot.
            for (size_t r = 0; r < top; ++r) {
                Int q = floor_div(rows[r][col], rows[top][col]);
                if (q != 0) rows[r] -= q * rows[top];
            }
            out.pivot_columns.push_back(col);
            ++top;
        }
    }
    rows.resize(top);

    // Drop rows that became zero (possible when rank < number of rows).
    std::vector<LatticeVector> kept;
    for (auto& r : rows)
        if (!r.is_zero()) kept.push_back(std::move(r));
    out.rows = std::move(kept);
    if (out.rows.size() != out.pivot_columns.size())
        throw std::logic_error("hermite_normal_form: pivot bookkeeping out of sync");
    return out;
}

bool lattice_contains(const IntegerLatticeBasis& basis, const LatticeVector& v) {
    if (basis.dimension == 0) return v.is_zero();
    if (v.dim() != basis.dimension)
        throw DimensionMismatchError("lattice_contains: vector has wrong dimension");

    LatticeVector rem = v;
    for (int r = 0; r < basis.rank(); ++r) {
        const int col = basis.pivot_columns[static_cast<size_t>(r)];
        const Int& p = basis.rows[static_cast<size_t>(r)][col];
        if (rem[col] % p != 0) return false;
        Int q = rem[col] / p;
        if (q != 0) rem -= q * basis.rows[static_cast<size_t>(r)];
    }
    return rem.is_zero();
}

std::optional<Int> lattice_index(const IntegerLatticeBasis& basis) {
    if (basis.rank() < basis.dimension) return std::nullopt;
    Int idx = 1;
    for (int r = 0; r < basis.rank(); ++r)
        idx *= basis.rows[static_cast<size_t>(r)][basis.pivot_columns[static_cast<size_t>(r)]];
    return idx;
}

std::vector<Rat> solve_cone_coordinates(const std::vector<LatticeVector>& basis,
                                        const LatticeVector& target) {
    const int d = target.dim();
    if (static_cast<int>(basis.size()) != d)
        throw DimensionMismatchError("solve_cone_coordinates: basis must have d vectors");
    for (const auto& b : basis)
        if (b.dim() != d)
            throw DimensionMismatchError("solve_cone_coordinates: basis vector of wrong dimension");

    // Gaussian elimination over Q on the augmented system [A | t], where
    // column j of A is basis[j].
    std::vector<std::vector<Rat>> m(static_cast<size_t>(d),
                                    std::vector<Rat>(static_cast<size_t>(d) + 1));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m[i][static_cast<size_t>(j)] = Rat(basis[static_cast<size_t>(j)][i]);
        m[i][static_cast<size_t>(d)] = Rat(target[i]);
    }

    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int r = col; r < d; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw SingularBasisError("solve_cone_coordinates: basis is singular");
        std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(pivot)]);
        const Rat p = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int r = 0; r < d; ++r) {
            if (r == col) continue;
            const Rat f = m[static_cast<size_t>(r)][static_cast<size_t>(col)] / p;
            if (f == 0) continue;
            for (int c = col; c <= d; ++c)
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * m[static_cast<size_t>(col)][static_cast<size_t>(c)];
        }
    }

    std::vector<Rat> x(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i)
        x[static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(d)] /
                                    m[static_cast<size_t>(i)][static_cast<size_t>(i)];
    return x;
}

}  // namespace apery
