#pragma once

#include "pte/rational.hpp"

#include <cstddef>
#include <vector>

namespace pte {

/// Power sums p_1..p_K of `values`. Throws InvalidInput for empty input or K = 0.
std::vector<Rational> power_sums(const std::vector<Rational>& values, std::size_t count);

/// Girard-Newton: e_1..e_n from p_1..p_n, using k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
std::vector<Rational> elementary_from_power_sums(const std::vector<Rational>& power_sums);

/// Inverse direction for n variables: p_1..p_count from e_1..e_n. Indices past n
/// use the k > n form of the recurrence (e_j = 0 for j > n).
std::vector<Rational> power_sums_from_elementary(const std::vector<Rational>& elementary, std::size_t count);

/// Left-hand side of the Girard-Newton relation of order k (1-based) for n
/// variables given p_1..p_k and e_1..e_n. Zero whenever the inputs are consistent.
Rational girard_newton_residual(const std::vector<Rational>& power_sums,
                                const std::vector<Rational>& elementary, std::size_t k);

/// A value list together with its first K power sums and all n elementary
/// symmetric polynomials.
struct SymmetricProfile {
    std::vector<Rational> values;
    std::vector<Rational> power_sums;   // p_1..p_K
    std::vector<Rational> elementary;   // e_1..e_n

    static SymmetricProfile of(const std::vector<Rational>& values, std::size_t power_count);
};

} // namespace pte
