#pragma once

#include "pte/matrix.hpp"
#include "pte/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace pte {

/// Rows of an array whose symbols are rationals.
using SymbolArray = std::vector<std::vector<Rational>>;

/// An array together with the parameters it was built or verified with.
struct OrthogonalArray {
    SymbolArray rows;
    std::size_t levels = 0;  // s
    unsigned strength = 0;   // t
    std::size_t index = 0;   // lambda
};

struct OaCheck {
    bool holds = false;
    std::size_t index = 0;                // lambda when holds
    std::vector<std::size_t> columns;     // violating column selection
    std::vector<Rational> tuple;          // a tuple whose count differs from lambda
    std::size_t count = 0;                // how often `tuple` occurs there
};

/// Distinct symbols of the array, sorted.
std::vector<Rational> symbols_of(const SymbolArray& rows);

/// Strength-t check: every t columns contain every t-tuple over the symbol set
/// the same number of times. lambda is the count of the lexicographically first
/// tuple in the first column selection; the witness is the first deviation from
/// it. Throws InvalidInput unless 1 <= t <= r and the rows are rectangular.
OaCheck verify_oa(const SymbolArray& rows, unsigned t);

/// Type-I variant: only tuples of pairwise distinct symbols count, and each
/// must appear lambda times. Throws InvalidInput when t > s or t > r.
OaCheck verify_type1_oa(const SymbolArray& rows, unsigned t);

/// lambda * s^(t - t2); throws InvalidInput unless 1 <= t2 <= t.
Integer oa_regular_index(const Integer& lambda, unsigned s, unsigned t, unsigned t2);

/// All s^r tuples over 0..s-1 in lexicographic order: OA(s^r, r, s, r)_1.
OrthogonalArray trivial_oa(unsigned s, std::size_t r);

/// Even- and odd-weight halves of {0,1}^r, each an OA(2^(r-1), r, 2, r-1)_1.
std::pair<OrthogonalArray, OrthogonalArray> parity_split(std::size_t r);

/// The binary row space of the generators followed by its cosets, ordered by
/// smallest member; together a partition of {0,1}^r. Throws InvalidInput when
/// the generators are not 0/1 rows of one length or are linearly dependent
/// over the two-element field.
std::vector<SymbolArray> linear_oa_cosets(const std::vector<std::vector<int>>& generators);

/// No row in common.
bool oas_disjoint(const SymbolArray& a, const SymbolArray& b);

/// Latin square with symbols 1..l.
bool verify_latin(const std::vector<std::vector<int>>& grid);

/// Group divisible design on points 0..pointCount-1. A t-design is the case of
/// singleton groups.
struct Gdd {
    std::size_t point_count = 0;
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::vector<std::size_t>> blocks;  // sorted blocks, sorted family
    unsigned t = 0;
    std::size_t k = 0;
    std::size_t lambda = 0;

    std::size_t group_count() const { return groups.size(); }
    std::size_t group_size() const { return groups.empty() ? 0 : groups.front().size(); }

    /// Builds a design, sorting every block and the block family.
    static Gdd make(std::size_t point_count, std::vector<std::vector<std::size_t>> groups,
                    std::vector<std::vector<std::size_t>> blocks, unsigned t, std::size_t k, std::size_t lambda);
    /// t-(r,k,lambda) design: every point is its own group.
    static Gdd t_design(std::size_t r, std::vector<std::vector<std::size_t>> blocks, unsigned t, std::size_t k,
                        std::size_t lambda);
};

struct GddCheck {
    bool holds = false;
    std::string reason;                  // empty when holds
    std::vector<std::size_t> witness;    // offending block or t-subset
};

/// Checks block sizes, the at-most-one-point-per-group rule, and that every
/// transversal t-subset lies in exactly lambda blocks (exhaustively). Throws
/// InvalidInput when the groups do not partition the points into equal sizes
/// or t <= k <= g fails.
GddCheck verify_gdd(const Gdd& design);

/// Number of blocks containing a fixed transversal s-subset:
/// lambda * C(g-s, t-s) * v^(t-s) / C(k-s, t-s). Throws InvalidInput unless
/// 1 <= s <= t <= k.
Rational gdd_lambda_s(std::size_t lambda, unsigned t, std::size_t k, std::size_t g, std::size_t v, unsigned s);

/// Number of blocks containing every point of `subset`.
std::size_t blocks_through(const Gdd& design, const std::vector<std::size_t>& subset);

/// 0/1 vector of length r with ones at the block's (0-based) points.
Point char_vector(const std::vector<std::size_t>& block, std::size_t r);

/// No block in common.
bool designs_disjoint(const Gdd& a, const Gdd& b);

/// h x h matrix of +1/-1 entries.
using HadamardMatrix = std::vector<std::vector<int>>;
bool is_hadamard(const HadamardMatrix& h);

bool is_prime(unsigned long n);
/// Legendre symbol (a/p) for an odd prime p, in {-1, 0, 1}.
int legendre(long a, unsigned long p);

struct PaleyDesigns {
    HadamardMatrix hadamard;  // order p+1, normalized
    Gdd residues;             // blocks QR + a
    Gdd nonresidues;          // blocks -QR + a
};

/// Normalized Hadamard matrix [[1, 1^T], [1, Q - I]] with Q_ij = (i-j / p), and
/// the two disjoint 2-(p, (p-1)/2, (p-3)/4) designs developed from the
/// quadratic residues and their negatives. Throws InvalidInput unless p is a
/// prime, p = 3 mod 4 and p >= 7.
PaleyDesigns paley(unsigned long p);

/// {i, i+1, i+3} and {i, i+2, i+3} mod 7: two disjoint 2-(7,3,1) designs.
std::pair<Gdd, Gdd> fano_pair();

/// The 4-(23,7,1) design developed from its 11 base blocks mod 23, and its
/// image under i -> 22 - i.
std::pair<Gdd, Gdd> witt_pair();

/// Groups {i, i+4} on Z_8 with block families developed from {0,1,3} and
/// {0,1,6}: two disjoint GDD_1(2,3,8) of type 2^4.
std::pair<Gdd, Gdd> gdd_z8_pair();

/// Affine plane of order 3 as a GDD_1(2,3,9) of type 3^3 (parallel class
/// {0,1,2},{3,4,5},{6,7,8} as groups).
Gdd affine_plane_gdd();

/// The Type-I arrays OA_I(6,3,3,3)_1 (all permutations of 0,1,2) and
/// OA_I(3,2,3,1)_1 with rows (0,1),(1,2),(2,0).
SymbolArray type1_permutation_array();
SymbolArray type1_cyclic_array();

} // namespace pte
