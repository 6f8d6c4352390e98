#pragma once

#include "pte/instance.hpp"
#include "pte/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace pte {

/// Finite evaluation domain: the binary hypercube {0,1}^r, the binary sphere
/// (0/1 vectors of weight k), or an explicit list of distinct points.
class DomainSpec {
public:
    enum class Kind { Hypercube, Sphere, Explicit };

    static DomainSpec hypercube(std::size_t r);
    /// Throws InvalidInput when k > r.
    static DomainSpec sphere(std::size_t r, std::size_t k);
    /// Throws InvalidInput on an empty list, mixed dimensions, or repeated points.
    static DomainSpec explicit_points(std::vector<Point> points);

    Kind kind() const { return kind_; }
    std::size_t dimension() const { return r_; }
    std::size_t weight() const { return k_; }
    bool binary() const { return kind_ != Kind::Explicit; }
    const std::vector<Point>& points() const { return points_; }
    bool contains(const Point& x) const;
    std::string describe() const;

private:
    Kind kind_ = Kind::Hypercube;
    std::size_t r_ = 0;
    std::size_t k_ = 0;
    std::vector<Point> points_;  // sorted; explicit domains only
};

/// Points of the domain in lexicographic order.
std::vector<Point> enumerate_domain(const DomainSpec& spec);

/// First monomials of degree <= t (constant first, then the multi-index
/// order) whose restrictions to the domain are linearly independent; a basis of
/// the polynomial functions of degree <= t on the domain.
std::vector<Exponent> poly_basis(const DomainSpec& spec, unsigned t);

/// dim of the space of polynomial functions of degree <= t on the domain.
std::size_t dim_poly_space(const DomainSpec& spec, unsigned t);

struct EvaluationMatrices {
    std::vector<Exponent> basis;
    RationalMatrix na;  // basis x n, columns follow the sorted first class
    RationalMatrix nb;
};

/// Evaluates the poly_basis monomials on both classes of a two-class
/// instance. Throws InvalidInput when a point lies outside the domain.
EvaluationMatrices build_evaluation_matrices(const PteInstance& instance, const DomainSpec& spec, unsigned t);

enum class BoundStatus { Holds, NotApplicable, Violated };
std::string to_string(BoundStatus s);

struct BoundCertificate {
    std::size_t n = 0;
    std::size_t dim = 0;
    std::size_t rank_a = 0;
    std::size_t rank_b = 0;
    std::size_t rank_joint = 0;
    bool proper = false;
    BoundStatus bound = BoundStatus::NotApplicable;  // n >= dim, judged only when rank_joint = dim
    bool tight = false;                              // n = rank_joint = dim
};

/// Re-verifies the instance at degree 2t (throws InvalidInput if that fails),
/// then fills the certificate.
BoundCertificate check_bound(const PteInstance& instance, const DomainSpec& spec, unsigned t, std::size_t threads = 1);

} // namespace pte
