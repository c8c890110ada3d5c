#pragma once

#include <cstddef>

#include "cluster/seed.hpp"

namespace cluster {

struct MutationClassResult {
    bool decided = false;    // false: budget exhausted, nothing concluded
    bool finite = false;     // valid only when decided
    std::size_t class_count = 0; // distinct matrices up to simultaneous permutation
};

// BFS over the mutation class of the matrix, identifying matrices that differ
// by a simultaneous permutation of the n mutable indices (frozen rows keep
// their row order, their columns are permuted along).  Stops as soon as more
// than `budget` classes have been seen.
MutationClassResult mutation_class_is_finite(const ExchangeMatrix& M, std::size_t budget = 10000);

} // namespace cluster
