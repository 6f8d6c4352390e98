#pragma once

#include "pte/matrix.hpp"
#include "pte/rational.hpp"

#include <cstddef>
#include <vector>

namespace pte {

/// Exponent vector (k_1, ..., k_r) of the monomial x_1^{k_1} ... x_r^{k_r}.
using Exponent = std::vector<unsigned>;

/// All exponent vectors k in Z_{>=0}^r with 1 <= |k| <= m, graded by total
/// degree and lexicographically decreasing inside a degree:
/// r=2, m=2 gives (1,0),(0,1),(2,0),(1,1),(0,2).
std::vector<Exponent> multi_indices(std::size_t dimension, unsigned degree);

/// Same enumeration for a single total degree d (d = 0 gives the zero vector).
std::vector<Exponent> exponents_of_degree(std::size_t dimension, unsigned degree);

/// prod_j x_j^{k_j} with 0^0 = 1.
Rational monomial(const Point& x, const Exponent& k);

/// A multiset of points of a common dimension, kept in canonical (sorted) order.
class PteClass {
public:
    PteClass() = default;
    /// Throws InvalidInput when the points disagree on dimension or a point is empty.
    explicit PteClass(std::vector<Point> points);

    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }

    /// Pointwise negation.
    PteClass negated() const;
    /// Each point restricted to the listed coordinates (0-based).
    PteClass project(const std::vector<std::size_t>& coordinates) const;
    /// The class as an n x r matrix (rows are points).
    RationalMatrix as_matrix() const;

    friend bool operator==(const PteClass&, const PteClass&) = default;

private:
    std::vector<Point> points_;
    std::size_t dimension_ = 0;
};

/// sum_{x in c} prod_j x_j^{k_j}. Throws InvalidInput on a dimension mismatch
/// or |k| = 0.
Rational class_power_sum(const PteClass& c, const Exponent& k);

/// Candidate solution: alpha >= 2 classes of equal size in dimension r with a
/// claimed degree m. Whether the classes really agree (and are disjoint) is the
/// business of verify(); construction only checks the shape.
class PteInstance {
public:
    PteInstance() = default;
    /// Throws InvalidInput unless dimension >= 1, degree >= 1, at least two
    /// classes, all classes of the given dimension and of one common size >= 1.
    PteInstance(std::size_t dimension, unsigned degree, std::vector<PteClass> classes);

    std::size_t dimension() const { return dimension_; }
    unsigned degree() const { return degree_; }
    std::size_t class_size() const { return classes_.front().size(); }
    std::size_t class_count() const { return classes_.size(); }
    const std::vector<PteClass>& classes() const { return classes_; }
    const PteClass& operator[](std::size_t i) const { return classes_[i]; }

    PteInstance with_degree(unsigned degree) const;
    /// Classes re-ordered lexicographically; the canonical form used for output.
    PteInstance canonical() const;

    friend bool operator==(const PteInstance&, const PteInstance&) = default;

private:
    std::size_t dimension_ = 0;
    unsigned degree_ = 0;
    std::vector<PteClass> classes_;
};

/// Applies x -> xM to every point of every class. The result keeps the degree.
PteInstance transform(const PteInstance& instance, const RationalMatrix& m);

} // namespace pte
