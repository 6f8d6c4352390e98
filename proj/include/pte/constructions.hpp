#pragma once

#include "pte/bounds.hpp"
#include "pte/designs.hpp"
#include "pte/instance.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace pte {

struct BuildOptions {
    bool reverify = true;     // re-run verify() (and properness where claimed) on the output
    std::size_t threads = 1;
};

/// With reverify set, throws VerificationFailure unless the instance verifies
/// (and, when claims_proper, is proper); returns it unchanged.
PteInstance finish(PteInstance inst, const BuildOptions& opts, bool claims_proper);

/// Rows of two disjoint OA(l,r,s,t)_lambda with t >= 2 as the two classes of a
/// degree-t instance. Both arrays are verified at their declared strength.
PteInstance oa_to_pte(const OrthogonalArray& a, const OrthogonalArray& b, const BuildOptions& opts = {});

/// Characteristic vectors of the blocks of two disjoint GDDs with identical
/// parameters and k < g; degree t.
PteInstance gdd_to_pte(const Gdd& a, const Gdd& b, const BuildOptions& opts = {});

/// Same for two disjoint t-(r,k,lambda) designs with r > k.
PteInstance tdesign_to_pte(const Gdd& a, const Gdd& b, const BuildOptions& opts = {});

using LatPair = std::pair<Rational, Rational>;

struct LatGenerator {
    std::vector<LatPair> pairs;   // (phi_1, psi_1), (phi_2, psi_2), ...
    std::vector<Rational> thetas; // theta_2, ..., theta_k; missing entries are chosen automatically
};

struct LatResult {
    PteInstance instance;
    std::vector<Rational> thetas;  // theta_2..theta_k actually used
};

/// Recursive doubling in the plane: U_1 = {0, p_1 + p_2}, V_1 = {p_1, p_2},
/// U_{i+1} = V_i + (theta p_{i+1} + U_i), V_{i+1} = U_i + (theta p_{i+1} + V_i),
/// giving a degree-k instance of size 2^k. Needs max(2, k) pairs. Each theta
/// must make U_i, V_i, theta p + U_i, theta p + V_i pairwise disjoint (except
/// the unshifted pair, already disjoint); automatic thetas are the smallest
/// positive integers that do.
LatResult lat_construction(const LatGenerator& gen, unsigned k, const BuildOptions& opts = {});

/// (1,0), (0,1), (1,0), ... : count pairs.
std::vector<LatPair> default_lat_pairs(std::size_t count);

struct CertifiedInstance {
    PteInstance instance;
    BoundCertificate certificate;
};

/// tdesign_to_pte on paley(p)'s residue / nonresidue designs, with the bound
/// certificate over the binary sphere of weight (p-1)/2 at t = 1.
CertifiedInstance paley_tight(unsigned long p, const BuildOptions& opts = {});

PteInstance halving_instance(const BuildOptions& opts = {});
PteInstance parity_instance(std::size_t r, const BuildOptions& opts = {});
PteInstance fano_instance(const BuildOptions& opts = {});
PteInstance witt_instance(const BuildOptions& opts = {});
PteInstance gdd_z8_instance(const BuildOptions& opts = {});
/// The Type-I pair {(0,1),(1,2),(2,0)} / {(1,0),(2,1),(0,2)} at degree 2.
PteInstance type1_direct_instance(const BuildOptions& opts = {});

/// {0, ..., alpha^(m+1) - 1} split by base-alpha digit sum mod alpha into
/// alpha classes of size alpha^m, pairwise equal power sums up to degree m.
PteInstance prouhet_partition(unsigned alpha, unsigned m, const BuildOptions& opts = {});

} // namespace pte
