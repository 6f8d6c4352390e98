#include "pte/instance.hpp"

#include "pte/error.hpp"

#include <algorithm>
#include <numeric>

namespace pte {

namespace {

void fill_degree(std::size_t pos, unsigned remaining, Exponent& current, std::vector<Exponent>& out) {
    if (pos + 1 == current.size()) {
        current[pos] = remaining;
        out.push_back(current);
        return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
        current[pos] = v;
        fill_degree(pos + 1, remaining - v, current, out);
    }
    current[pos] = 0;
}

} // namespace

std::vector<Exponent> exponents_of_degree(std::size_t dimension, unsigned degree) {
    require(dimension >= 1, "dimension must be positive");
    std::vector<Exponent> out;
    Exponent current(dimension, 0);
    fill_degree(0, degree, current, out);
    return out;
}

std::vector<Exponent> multi_indices(std::size_t dimension, unsigned degree) {
    require(dimension >= 1, "dimension must be positive");
    std::vector<Exponent> out;
    for (unsigned d = 1; d <= degree; ++d) {
        auto layer = exponents_of_degree(dimension, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

Rational monomial(const Point& x, const Exponent& k) {
    require(x.size() == k.size(), "exponent length does not match point dimension");
    Rational v = 1;
    for (std::size_t j = 0; j < k.size(); ++j)
        if (k[j] != 0) v *= x[j].pow(k[j]);
    return v;
}

PteClass::PteClass(std::vector<Point> points) : points_(std::move(points)) {
    if (!points_.empty()) dimension_ = points_.front().size();
    for (const auto& p : points_) {
        require(!p.empty(), "points must have at least one coordinate");
        require(p.size() == dimension_, "points of one class disagree on dimension");
    }
    std::sort(points_.begin(), points_.end());
}

PteClass PteClass::negated() const {
    std::vector<Point> out = points_;
    for (auto& p : out)
        for (auto& x : p) x = -x;
    return PteClass(std::move(out));
}

PteClass PteClass::project(const std::vector<std::size_t>& coordinates) const {
    std::vector<Point> out;
    out.reserve(points_.size());
    for (const auto& p : points_) {
        Point q;
        for (auto c : coordinates) {
            require(c < dimension_, "projection coordinate out of range");
            q.push_back(p[c]);
        }
        out.push_back(std::move(q));
    }
    return PteClass(std::move(out));
}

RationalMatrix PteClass::as_matrix() const { return RationalMatrix::from_rows(points_); }

Rational class_power_sum(const PteClass& c, const Exponent& k) {
    require(k.size() == c.dimension(), "exponent length does not match class dimension");
    require(std::accumulate(k.begin(), k.end(), 0u) >= 1, "exponent vector must have positive degree");
    Rational sum;
    for (const auto& p : c.points()) sum += monomial(p, k);
    return sum;
}

PteInstance::PteInstance(std::size_t dimension, unsigned degree, std::vector<PteClass> classes)
    : dimension_(dimension), degree_(degree), classes_(std::move(classes)) {
    require(dimension_ >= 1, "instance dimension must be positive");
    require(degree_ >= 1, "instance degree must be positive");
    require(classes_.size() >= 2, "an instance needs at least two classes");
    const std::size_t n = classes_.front().size();
    require(n >= 1, "classes must be nonempty");
    for (const auto& c : classes_) {
        require(c.size() == n, "classes must all have the same size");
        require(c.dimension() == dimension_, "class dimension does not match instance dimension");
    }
}

PteInstance PteInstance::with_degree(unsigned degree) const {
    return PteInstance(dimension_, degree, classes_);
}

PteInstance PteInstance::canonical() const {
    auto sorted = classes_;
    std::sort(sorted.begin(), sorted.end(),
              [](const PteClass& a, const PteClass& b) { return a.points() < b.points(); });
    return PteInstance(dimension_, degree_, std::move(sorted));
}

PteInstance transform(const PteInstance& instance, const RationalMatrix& m) {
    std::vector<PteClass> out;
    for (const auto& c : instance.classes()) out.emplace_back(gl_transform(c.points(), m));
    return PteInstance(instance.dimension(), instance.degree(), std::move(out));
}

} // namespace pte
