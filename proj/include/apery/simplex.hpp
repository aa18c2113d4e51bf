#pragma once

#include <vector>

#include "apery/lattice.hpp"

namespace apery {

/// Is `target` a nonnegative rational combination of `columns`? Decided
/// exactly with a phase-1 simplex using Bland's rule, so it terminates and
/// never suffers floating-point trouble.
bool nonnegative_combination_exists(const std::vector<LatticeVector>& columns,
                                    const LatticeVector& target);

}  // namespace apery
