#pragma once

#include <vector>

#include "rbd/matrix.hpp"

namespace rbd {

// left * M * right == diag(invariant_factors), padded with zeros.
// Factors are positive, each divides the next, leading 1s are kept.
// The cokernel of M (as a map Z^cols -> Z^rows) is
// Z^free_rank  (+)  sum_i Z/d_i, with free_rank = rows - #factors.
struct SmithDecomposition {
    std::vector<Integer> invariant_factors;
    std::size_t free_rank = 0;
    ExactMatrix left, right;

    ExactMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

SmithDecomposition smith_normal_form(const ExactMatrix& m);

}  // namespace rbd
