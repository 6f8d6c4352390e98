#include "pte/symmetric.hpp"

#include "pte/error.hpp"

#include <algorithm>

namespace pte {

std::vector<Rational> power_sums(const std::vector<Rational>& values, std::size_t count) {
    require(!values.empty(), "power sums of an empty value list");
    require(count >= 1, "power sum count must be positive");
    std::vector<Rational> out(count);
    for (const auto& v : values) {
        Rational term = v;
        for (std::size_t k = 0; k < count; ++k) {
            out[k] += term;
            term *= v;
        }
    }
    return out;
}

std::vector<Rational> elementary_from_power_sums(const std::vector<Rational>& p) {
    require(!p.empty(), "need at least one power sum");
    const std::size_t n = p.size();
    std::vector<Rational> e(n + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t i = 1; i <= k; ++i) {
            const Rational term = e[k - i] * p[i - 1];
            if (i % 2 == 1) acc += term; else acc -= term;
        }
        e[k] = acc / Rational(static_cast<long>(k));
    }
    return {e.begin() + 1, e.end()};
}

std::vector<Rational> power_sums_from_elementary(const std::vector<Rational>& e, std::size_t count) {
    require(!e.empty(), "need at least one elementary symmetric value");
    const std::size_t n = e.size();
    std::vector<Rational> p(count + 1);
    // p_k = sum_{i=1}^{min(k-1,n)} (-1)^{i-1} e_i p_{k-i} + [k <= n] (-1)^{k-1} k e_k
    for (std::size_t k = 1; k <= count; ++k) {
        Rational acc;
        for (std::size_t i = 1; i <= std::min(k - 1, n); ++i) {
            const Rational term = e[i - 1] * p[k - i];
            if (i % 2 == 1) acc += term; else acc -= term;
        }
        if (k <= n) {
            const Rational term = Rational(static_cast<long>(k)) * e[k - 1];
            if (k % 2 == 1) acc += term; else acc -= term;
        }
        p[k] = acc;
    }
    return {p.begin() + 1, p.end()};
}

Rational girard_newton_residual(const std::vector<Rational>& p, const std::vector<Rational>& e,
                                std::size_t k) {
    require(k >= 1 && k <= p.size(), "relation order out of range");
    const std::size_t n = e.size();
    // p_k - e_1 p_{k-1} + ... ; the tail is (-1)^k k e_k when k <= n, else (-1)^n e_n p_{k-n}.
    Rational acc = p[k - 1];
    for (std::size_t i = 1; i <= std::min(k - 1, n); ++i) {
        const Rational term = e[i - 1] * p[k - i - 1];
        if (i % 2 == 1) acc -= term; else acc += term;
    }
    if (k <= n) {
        const Rational term = Rational(static_cast<long>(k)) * e[k - 1];
        if (k % 2 == 1) acc -= term; else acc += term;
    }
    return acc;
}

SymmetricProfile SymmetricProfile::of(const std::vector<Rational>& values, std::size_t power_count) {
    SymmetricProfile s;
    s.values = values;
    const std::size_t n = values.size();
    s.power_sums = pte::power_sums(values, std::max(power_count, n));
    s.elementary = elementary_from_power_sums({s.power_sums.begin(), s.power_sums.begin() + n});
    s.power_sums.resize(std::max<std::size_t>(power_count, 1));
    return s;
}

} // namespace pte
