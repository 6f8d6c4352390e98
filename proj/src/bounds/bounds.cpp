#include "pte/bounds.hpp"

#include "pte/error.hpp"
#include "pte/verify.hpp"

#include <algorithm>
#include <set>

namespace pte {

DomainSpec DomainSpec::hypercube(std::size_t r) {
    require(r >= 1, "hypercube dimension must be positive");
    DomainSpec d;
    d.kind_ = Kind::Hypercube;
    d.r_ = r;
    return d;
}

DomainSpec DomainSpec::sphere(std::size_t r, std::size_t k) {
    require(r >= 1, "sphere dimension must be positive");
    require(k <= r, "sphere weight k must not exceed r");
    DomainSpec d;
    d.kind_ = Kind::Sphere;
    d.r_ = r;
    d.k_ = k;
    return d;
}

DomainSpec DomainSpec::explicit_points(std::vector<Point> points) {
    require(!points.empty(), "explicit domain is empty");
    const std::size_t r = points.front().size();
    require(r >= 1, "explicit domain points need at least one coordinate");
    for (const auto& p : points) require(p.size() == r, "explicit domain points differ in dimension");
    std::sort(points.begin(), points.end());
    require(std::adjacent_find(points.begin(), points.end()) == points.end(), "explicit domain repeats a point");
    DomainSpec d;
    d.kind_ = Kind::Explicit;
    d.r_ = r;
    d.points_ = std::move(points);
    return d;
}

bool DomainSpec::contains(const Point& x) const {
    if (x.size() != r_) return false;
    if (kind_ == Kind::Explicit) return std::binary_search(points_.begin(), points_.end(), x);
    std::size_t w = 0;
    for (const auto& c : x) {
        if (c == 1) ++w;
        else if (!c.is_zero()) return false;
    }
    return kind_ == Kind::Hypercube || w == k_;
}

std::string DomainSpec::describe() const {
    switch (kind_) {
    case Kind::Hypercube: return "hypercube C^" + std::to_string(r_);
    case Kind::Sphere: return "sphere S_" + std::to_string(k_) + "^" + std::to_string(r_ - 1);
    case Kind::Explicit: return "explicit domain of " + std::to_string(points_.size()) + " points";
    }
    return {};
}

std::vector<Point> enumerate_domain(const DomainSpec& spec) {
    if (spec.kind() == DomainSpec::Kind::Explicit) return spec.points();
    const std::size_t r = spec.dimension();
    require(r <= 30, "binary domain too large to enumerate");
    std::vector<Point> out;
    for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
        // Bit r-1-j is coordinate j, so increasing masks are lexicographic.
        if (spec.kind() == DomainSpec::Kind::Sphere &&
            static_cast<std::size_t>(__builtin_popcountl(mask)) != spec.weight())
            continue;
        Point p(r);
        for (std::size_t j = 0; j < r; ++j) p[j] = static_cast<int>((mask >> (r - 1 - j)) & 1ul);
        out.push_back(std::move(p));
    }
    return out;
}

namespace {

std::vector<Exponent> candidate_monomials(const DomainSpec& spec, unsigned t) {
    const std::size_t r = spec.dimension();
    std::vector<Exponent> all{Exponent(r, 0)};
    for (auto& k : multi_indices(r, t)) all.push_back(std::move(k));
    if (!spec.binary()) return all;
    // On 0/1 points x_j^e = x_j, so only the first monomial per support matters.
    std::set<std::vector<bool>> seen;
    std::vector<Exponent> out;
    for (auto& k : all) {
        std::vector<bool> support(r);
        for (std::size_t j = 0; j < r; ++j) support[j] = k[j] != 0;
        if (seen.insert(support).second) out.push_back(std::move(k));
    }
    return out;
}

Integer binomial(std::size_t n, std::size_t k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// Gram matrix of the candidate monomials over the domain (sum over points of
// f_a * f_b), scaled to integers. Its principal minors decide independence of
// the monomials as functions on the domain.
std::vector<std::vector<Integer>> gram(const DomainSpec& spec, const std::vector<Exponent>& mons) {
    const std::size_t n = mons.size();
    const std::size_t r = spec.dimension();
    std::vector<std::vector<Integer>> g(n, std::vector<Integer>(n));
    if (spec.binary()) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a; b < n; ++b) {
                std::size_t u = 0;
                for (std::size_t j = 0; j < r; ++j) u += (mons[a][j] != 0 || mons[b][j] != 0);
                Integer v;
                if (spec.kind() == DomainSpec::Kind::Hypercube) mpz_ui_pow_ui(v.get_mpz_t(), 2, r - u);
                else v = u <= spec.weight() ? binomial(r - u, spec.weight() - u) : Integer(0);
                g[a][b] = g[b][a] = v;
            }
    } else {
        // Scaling coordinate j by the lcm of its denominators multiplies each
        // monomial by a nonzero constant, which does not change independence.
        std::vector<Integer> scale(r, 1);
        for (const auto& p : spec.points())
            for (std::size_t j = 0; j < r; ++j)
                mpz_lcm(scale[j].get_mpz_t(), scale[j].get_mpz_t(), p[j].raw().get_den_mpz_t());
        std::vector<std::vector<Integer>> values(n, std::vector<Integer>(spec.points().size()));
        for (std::size_t i = 0; i < spec.points().size(); ++i) {
            const auto& p = spec.points()[i];
            for (std::size_t a = 0; a < n; ++a) {
                Integer v = 1, x, pw;
                for (std::size_t j = 0; j < r; ++j) {
                    if (mons[a][j] == 0) continue;
                    x = p[j].raw().get_num() * (scale[j] / p[j].raw().get_den());
                    mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), mons[a][j]);
                    v *= pw;
                }
                values[a][i] = v;
            }
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a; b < n; ++b) {
                Integer s = 0;
                for (std::size_t i = 0; i < values[a].size(); ++i) mpz_addmul(s.get_mpz_t(), values[a][i].get_mpz_t(), values[b][i].get_mpz_t());
                g[a][b] = g[b][a] = s;
            }
    }
    Integer d = 0;
    for (const auto& row : g)
        for (const auto& x : row) mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), x.get_mpz_t());
    if (d > 1)
        for (auto& row : g)
            for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return g;
}

// Greedy selection on a positive semidefinite integer matrix: index i is kept
// iff it is independent of the indices kept before it. Fraction-free symmetric
// elimination; a zero pivot means the whole Schur-complement row vanishes, so
// the index is dropped without touching the rest.
std::vector<std::size_t> greedy_independent(std::vector<std::vector<Integer>> w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> kept;
    Integer prev = 1, tmp;
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i][i] == 0) continue;
        kept.push_back(i);
        const Integer& p = w[i][i];
        for (std::size_t a = i + 1; a < n; ++a)
            for (std::size_t b = a; b < n; ++b) {
                tmp = p * w[a][b];
                mpz_submul(tmp.get_mpz_t(), w[a][i].get_mpz_t(), w[i][b].get_mpz_t());
                mpz_divexact(w[a][b].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
                if (b != a) w[b][a] = w[a][b];
            }
        prev = p;
    }
    return kept;
}

} // namespace

std::vector<Exponent> poly_basis(const DomainSpec& spec, unsigned t) {
    require(t >= 1, "degree t must be positive");
    if (spec.kind() == DomainSpec::Kind::Explicit) require(!spec.points().empty(), "empty domain");
    const auto mons = candidate_monomials(spec, t);
    std::vector<Exponent> basis;
    for (auto i : greedy_independent(gram(spec, mons))) basis.push_back(mons[i]);
    require(!basis.empty(), "empty domain");
    return basis;
}

std::size_t dim_poly_space(const DomainSpec& spec, unsigned t) { return poly_basis(spec, t).size(); }

EvaluationMatrices build_evaluation_matrices(const PteInstance& instance, const DomainSpec& spec, unsigned t) {
    require(instance.class_count() == 2, "evaluation matrices need exactly two classes");
    require(instance.dimension() == spec.dimension(), "instance and domain dimensions differ");
    for (const auto& c : instance.classes())
        for (const auto& p : c.points()) {
            if (!spec.contains(p)) {
                std::string s;
                for (const auto& x : p) s += (s.empty() ? "" : ",") + x.str();
                throw InvalidInput("point (" + s + ") lies outside the " + spec.describe());
            }
        }
    EvaluationMatrices out;
    out.basis = poly_basis(spec, t);
    const std::size_t n = instance.class_size();
    out.na = RationalMatrix(out.basis.size(), n);
    out.nb = RationalMatrix(out.basis.size(), n);
    for (std::size_t i = 0; i < out.basis.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out.na(i, j) = monomial(instance[0].points()[j], out.basis[i]);
            out.nb(i, j) = monomial(instance[1].points()[j], out.basis[i]);
        }
    return out;
}

std::string to_string(BoundStatus s) {
    switch (s) {
    case BoundStatus::Holds: return "holds";
    case BoundStatus::NotApplicable: return "not applicable";
    case BoundStatus::Violated: return "violated";
    }
    return {};
}

BoundCertificate check_bound(const PteInstance& instance, const DomainSpec& spec, unsigned t, std::size_t threads) {
    require(t >= 1, "degree t must be positive");
    const auto report = verify(instance.with_degree(2 * t), threads);
    if (!report.holds)
        throw InvalidInput("instance does not verify at degree " + std::to_string(2 * t) + ": " +
                           report.first_failure->describe());
    const auto mats = build_evaluation_matrices(instance, spec, t);
    BoundCertificate c;
    c.n = instance.class_size();
    c.dim = mats.basis.size();
    c.rank_a = rank(mats.na);
    c.rank_b = rank(mats.nb);
    c.rank_joint = rank(mats.na.hconcat(mats.nb));
    c.proper = is_proper(instance);
    if (c.rank_joint == c.dim) c.bound = c.n >= c.dim ? BoundStatus::Holds : BoundStatus::Violated;
    c.tight = c.n == c.rank_joint && c.rank_joint == c.dim;
    return c;
}

} // namespace pte
