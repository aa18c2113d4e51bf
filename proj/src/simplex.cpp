#include "apery/simplex.hpp"

#include <stdexcept>

#include "apery/errors.hpp"

namespace apery {

bool nonnegative_combination_exists(const std::vector<LatticeVector>& columns,
                                    const LatticeVector& target) {
    const int m = target.dim();
    const int n = static_cast<int>(columns.size());
    for (const auto& c : columns)
        if (c.dim() != m)
            throw DimensionMismatchError("nonnegative_combination_exists: mixed dimensions");
    if (n == 0) return target.is_zero();

    // Phase-1 tableau for A x = b, x >= 0: minimize the sum of artificial
    // variables. Columns 0..n-1 are the real variables, n..n+m-1 the
    // artificials, column n+m the right-hand side.
    const int cols = n + m + 1;
    std::vector<std::vector<Rat>> t(static_cast<size_t>(m) + 1,
                                    std::vector<Rat>(static_cast<size_t>(cols)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(columns[static_cast<size_t>(j)][i]);
        t[static_cast<size_t>(i)][static_cast<size_t>(n + m)] = Rat(target[i]);
        if (t[static_cast<size_t>(i)][static_cast<size_t>(n + m)] < 0)
            for (int c = 0; c < cols; ++c) t[static_cast<size_t>(i)][static_cast<size_t>(c)] = -t[static_cast<size_t>(i)][static_cast<size_t>(c)];
        t[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1;
    }
    // Objective row: reduced costs with the artificial basis, i.e. the
    // negated column sums; objective value (negated) in the rhs cell.
    auto& obj = t[static_cast<size_t>(m)];
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) obj[static_cast<size_t>(j)] -= t[static_cast<size_t>(i)][static_cast<size_t>(j)];
    for (int i = 0; i < m; ++i) obj[static_cast<size_t>(n + m)] -= t[static_cast<size_t>(i)][static_cast<size_t>(n + m)];

    std::vector<int> basis(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) basis[static_cast<size_t>(i)] = n + i;

    for (;;) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (obj[static_cast<size_t>(j)] < 0) {
                enter = j;
                break;  // Bland: smallest eligible index
            }
        if (enter < 0) break;

        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            const Rat& a = t[static_cast<size_t>(i)][static_cast<size_t>(enter)];
            if (a <= 0) continue;
            Rat ratio = t[static_cast<size_t>(i)][static_cast<size_t>(n + m)] / a;
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("phase-1 simplex: unbounded objective");

        const Rat p = t[static_cast<size_t>(leave)][static_cast<size_t>(enter)];
        for (int c = 0; c < cols; ++c) t[static_cast<size_t>(leave)][static_cast<size_t>(c)] /= p;
        for (int r = 0; r <= m; ++r) {
            if (r == leave) continue;
            const Rat f = t[static_cast<size_t>(r)][static_cast<size_t>(enter)];
            if (f == 0) continue;
            for (int c = 0; c < cols; ++c)
                t[static_cast<size_t>(r)][static_cast<size_t>(c)] -= f * t[static_cast<size_t>(leave)][static_cast<size_t>(c)];
        }
        basis[static_cast<size_t>(leave)] = enter;
    }

    return obj[static_cast<size_t>(n + m)] == 0;
}

}  // namespace apery
