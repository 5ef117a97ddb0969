#pragma once

#include <gmpxx.h>
#include <vector>

namespace cuspfield {

using int_vec = std::vector<mpz_class>;
using int_mat = std::vector<int_vec>;

struct lll_result {
    int_mat basis;     // LLL-reduced with delta = 3/4
    int_mat transform; // unimodular: basis = transform * input
};

/// Lattice reduction with exact rational Gram-Schmidt bookkeeping.
/// Throws DependentRows when the input rows are linearly dependent.
lll_result lll_reduce(const int_mat& rows);

} // namespace cuspfield
