#pragma once

#include "pte/instance.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pte {

struct IdentityFailure {
    enum class Kind { SharedPoint, PowerSum };
    Kind kind = Kind::PowerSum;
    std::size_t first_class = 0;
    std::size_t second_class = 0;
    Exponent exponent;          // PowerSum only
    Rational first_value;       // PowerSum only
    Rational second_value;      // PowerSum only
    Point shared_point;         // SharedPoint only

    std::string describe() const;
};

struct VerificationReport {
    bool holds = false;
    std::optional<IdentityFailure> first_failure;
};

/// Worker count used when an operation takes `threads = 0`.
std::size_t default_threads();

/// Checks pairwise element-level disjointness and equality of every mixed
/// power sum with 1 <= |k| <= degree. The first failure is the first shared
/// point (smallest class pair, smallest point) or else the power sum at the
/// earliest multi-index, compared against class 0, regardless of `threads`.
VerificationReport verify(const PteInstance& instance, std::size_t threads = 1);

/// Largest m <= cap at which verify holds; 0 when degree 1 already fails.
unsigned max_verified_degree(const PteInstance& instance, unsigned cap, std::size_t threads = 1);

/// Every class has full column rank r.
bool is_proper(const PteInstance& instance);

/// Rank of each class viewed as an n x r matrix.
std::vector<std::size_t> class_ranks(const PteInstance& instance);

/// Rank of all classes stacked into one matrix.
std::size_t joint_rank(const PteInstance& instance);

bool is_symmetric(const PteClass& c);
bool is_symmetric(const PteInstance& instance);

struct LinearityOptions {
    bool exhaustive = false;
    std::size_t exhaustive_limit = 16;
};

struct LinearityResult {
    enum class Status { Linear, NotLinear, NotChecked };
    Status status = Status::NotChecked;
    std::vector<std::size_t> subset;  // 0-based positions into every sorted class
};

/// Looks for a nonempty index set S with sum_{i in S} x_i = 0 in every class,
/// pairing the sorted classes by position. The full set is always tried first;
/// proper subsets only when options.exhaustive and n <= exhaustive_limit.
LinearityResult is_linear(const PteInstance& instance, const LinearityOptions& options = {});

/// n = m + 1 at the claimed degree.
bool is_ideal(const PteInstance& instance);

} // namespace pte
