#pragma once

#include "pte/instance.hpp"

#include <cstddef>
#include <vector>

namespace pte {

struct SearchSpec {
    std::size_t dimension = 1;
    unsigned degree = 1;
    std::size_t size = 2;
    std::size_t classes = 2;
    long lo = 0;
    long hi = 0;
    bool translate = false;  // r = 1 only: shift every solution so its minimum entry is 0
    double ceiling = 1e8;    // cap on C(#multisets, classes)
    std::size_t threads = 1;
};

/// Exhaustive search over integer points of [lo, hi]^r: every tuple of
/// pairwise-disjoint size-n multisets with equal mixed power sums up to the
/// degree. Power sums are computed here directly, not through verify(). Output
/// is canonical, deduplicated, sorted, and truncated to `limit` (0 = all);
/// identical for any thread count. Throws InvalidInput when the space exceeds
/// the ceiling.
std::vector<PteInstance> brute_search(const SearchSpec& spec, std::size_t limit = 0);

struct IdealLinearityReport {
    Rational sum_x;
    Rational power_x;  // sum x_i^(n+1)
    Rational power_y;
    bool sum_zero = false;
    bool powers_equal = false;
    bool equivalent = false;
};

/// For an ideal one-dimensional instance (n = m + 1, re-verified) evaluates
/// (i) sum x_i = 0 and (ii) sum x_i^(n+1) = sum y_i^(n+1). Throws InvalidInput
/// on anything else.
IdealLinearityReport ideal_linearity_check(const PteInstance& instance);

} // namespace pte
