#pragma once

#include "pte/constructions.hpp"
#include "pte/designs.hpp"
#include "pte/instance.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace pte {

/// One-dimensional base A_1..A_s / B_1..B_s for symbol-substitution lifting.
struct SignedBase {
    std::vector<Rational> a;
    std::vector<Rational> b;
};

/// Throws InvalidInput unless: equal lengths, the 4s values +-A_i, +-B_i are
/// mutually distinct, sum A = sum B = 0, [A] =_m [B], and the (m+2)-th power
/// sums agree.
void check_signed_base(const SignedBase& base, unsigned m);

/// Each row of the array is emitted twice: with the k-th smallest symbol
/// replaced by A_{k+1} (resp. B_{k+1}) and negated. Degree m + 3, size 2l.
/// The array must have full strength r; m even, m >= 2, s >= m + 1.
PteInstance oa_lift(const OrthogonalArray& oa, const SignedBase& base, unsigned m, const BuildOptions& opts = {});

struct LiftResult {
    PteInstance instance;
    std::vector<std::size_t> ranks;  // per class
    bool proper = false;
};

/// Same substitution on a Type-I array of strength t = s <= r. Properness is
/// not asserted; the ranks are reported.
LiftResult type1_oa_lift(const SymbolArray& rows, const SignedBase& base, unsigned m, const BuildOptions& opts = {});

using Triple = std::array<Rational, 3>;

/// (2a+2b, -ab-b-a+3, ab-b-a-3) and (2b-2a, ab-b+a+3, -ab-b+a-3).
std::pair<Triple, Triple> borwein_triples(const Rational& a, const Rational& b);

/// [+-A_i] =_5 [+-B_i] from the triples above. Throws InvalidInput naming
/// the collision when the twelve values are not mutually distinct.
PteInstance borwein1d(const Rational& a, const Rational& b, const BuildOptions& opts = {});

/// +-(A1,A2), +-(A2,A3), +-(A3,A1) against the same for B; degree 5.
PteInstance borwein2d(const Rational& a, const Rational& b, const BuildOptions& opts = {});

/// +- the cyclic shifts of each triple; degree 5. Throws InvalidInput naming
/// the failed hypothesis (zero sums, degree-2 equality, fourth-power
/// equality, disjointness).
PteInstance borwein3d(const Triple& a, const Triple& b, const BuildOptions& opts = {});

/// U^(a) = union over i of S^(i) x T^(L[a][i]) with Latin symbols 1..l.
/// Both inputs are re-verified; the result has degree m_S + m_T + 1.
LiftResult cartesian_lift(const PteInstance& s, const PteInstance& t, const std::vector<std::vector<int>>& latin,
                          const BuildOptions& opts = {});

/// (u1, u2) -> u1 + (u2 - 1) * alpha * n_s on every class; needs integer
/// coordinates with 1 <= u1 <= alpha * n_s and u2 >= 1.
PteInstance jacroux_reduce(const PteInstance& u, unsigned long alpha, unsigned long n_s, const BuildOptions& opts = {});

} // namespace pte
