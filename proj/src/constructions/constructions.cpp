#include "pte/constructions.hpp"

#include "pte/error.hpp"
#include "pte/verify.hpp"

#include <algorithm>
#include <set>

namespace pte {

PteInstance finish(PteInstance inst, const BuildOptions& opts, bool claims_proper) {
    if (!opts.reverify) return inst;
    const auto report = verify(inst, opts.threads);
    if (!report.holds)
        throw VerificationFailure("constructed instance failed verification: " + report.first_failure->describe());
    if (claims_proper && !is_proper(inst)) throw VerificationFailure("constructed instance is not proper");
    return inst;
}

namespace {

PteInstance designs_to_pte(const Gdd& a, const Gdd& b, const BuildOptions& opts) {
    for (const auto* d : {&a, &b}) {
        const auto check = verify_gdd(*d);
        require(check.holds, "input design does not verify: " + check.reason);
    }
    require(a.point_count == b.point_count && a.groups == b.groups && a.t == b.t && a.k == b.k &&
                a.lambda == b.lambda,
            "the two designs have different parameters");
    require(a.k < a.group_count(), "block size k must be smaller than the number of groups g");
    require(a.t >= 1, "strength must be positive");
    require(designs_disjoint(a, b), "the two designs share a block");
    std::vector<Point> pa, pb;
    for (const auto& blk : a.blocks) pa.push_back(char_vector(blk, a.point_count));
    for (const auto& blk : b.blocks) pb.push_back(char_vector(blk, b.point_count));
    return finish(PteInstance(a.point_count, a.t, {PteClass(std::move(pa)), PteClass(std::move(pb))}), opts, true);
}

} // namespace

PteInstance oa_to_pte(const OrthogonalArray& a, const OrthogonalArray& b, const BuildOptions& opts) {
    require(a.strength == b.strength, "the two arrays have different strengths");
    const unsigned t = a.strength;
    require(t >= 2, "strength must be at least 2");
    const auto ca = verify_oa(a.rows, t);
    const auto cb = verify_oa(b.rows, t);
    require(ca.holds, "first array is not an orthogonal array of strength " + std::to_string(t));
    require(cb.holds, "second array is not an orthogonal array of strength " + std::to_string(t));
    require(a.rows.size() == b.rows.size() && a.rows.front().size() == b.rows.front().size() && ca.index == cb.index,
            "the two arrays have different parameters");
    const auto sa = symbols_of(a.rows);
    require(sa == symbols_of(b.rows), "the two arrays use different symbol sets");
    require(sa.size() >= 2, "arrays need at least two symbols");
    require(oas_disjoint(a.rows, b.rows), "the two arrays share a row");
    return finish(PteInstance(a.rows.front().size(), t, {PteClass(a.rows), PteClass(b.rows)}), opts, true);
}

PteInstance gdd_to_pte(const Gdd& a, const Gdd& b, const BuildOptions& opts) { return designs_to_pte(a, b, opts); }

PteInstance tdesign_to_pte(const Gdd& a, const Gdd& b, const BuildOptions& opts) {
    require(a.group_size() == 1 && b.group_size() == 1, "t-designs must have singleton groups");
    require(a.point_count > a.k, "need r > k");
    return designs_to_pte(a, b, opts);
}

std::vector<LatPair> default_lat_pairs(std::size_t count) {
    std::vector<LatPair> out;
    for (std::size_t i = 0; i < count; ++i)
        out.emplace_back(i % 2 == 0 ? LatPair{1, 0} : LatPair{0, 1});
    return out;
}

namespace {

using PointSet = std::vector<Point>;

PointSet shifted(const PointSet& s, const Point& d) {
    PointSet out = s;
    for (auto& p : out)
        for (std::size_t j = 0; j < p.size(); ++j) p[j] += d[j];
    return out;
}

bool meet(const PointSet& a, const PointSet& b) {
    std::set<Point> sa(a.begin(), a.end());
    return std::any_of(b.begin(), b.end(), [&](const Point& p) { return sa.count(p) > 0; });
}

bool theta_ok(const PointSet& u, const PointSet& v, const Point& shift) {
    const auto su = shifted(u, shift), sv = shifted(v, shift);
    return !meet(v, su) && !meet(u, sv) && !meet(u, su) && !meet(v, sv);
}

} // namespace

LatResult lat_construction(const LatGenerator& gen, unsigned k, const BuildOptions& opts) {
    require(k >= 1, "degree k must be positive");
    require(gen.pairs.size() >= std::max<std::size_t>(2, k),
            "need at least " + std::to_string(std::max<unsigned>(2, k)) + " generator pairs");
    require(gen.thetas.size() <= k - 1, "more thetas than steps");
    const auto pt = [](const LatPair& p) { return Point{p.first, p.second}; };
    const Point p1 = pt(gen.pairs[0]), p2 = pt(gen.pairs[1]);
    PointSet u{Point{0, 0}, Point{p1[0] + p2[0], p1[1] + p2[1]}};
    PointSet v{p1, p2};
    require(!meet(u, v), "degenerate generator: U_1 and V_1 intersect");

    LatResult res;
    for (unsigned i = 1; i < k; ++i) {
        const Point p = pt(gen.pairs[i]);
        require(!(p[0].is_zero() && p[1].is_zero()), "generator pair " + std::to_string(i + 1) + " is zero");
        Rational theta;
        if (i - 1 < gen.thetas.size()) {
            theta = gen.thetas[i - 1];
            require(theta_ok(u, v, {theta * p[0], theta * p[1]}),
                    "theta_" + std::to_string(i + 1) + " = " + theta.str() + " violates the disjointness conditions");
        } else {
            // Each bad theta equals a difference of two points along p, so
            // there are at most 4|U|^2 of them.
            const long limit = 4 * static_cast<long>(u.size() * u.size()) + 2;
            long cand = 1;
            while (cand <= limit && !theta_ok(u, v, {Rational(cand) * p[0], Rational(cand) * p[1]})) ++cand;
            require(cand <= limit, "no admissible theta found");
            theta = cand;
        }
        res.thetas.push_back(theta);
        const Point d{theta * p[0], theta * p[1]};
        PointSet nu = v, nv = u;
        for (auto& q : shifted(u, d)) nu.push_back(std::move(q));
        for (auto& q : shifted(v, d)) nv.push_back(std::move(q));
        u = std::move(nu);
        v = std::move(nv);
    }
    res.instance = finish(PteInstance(2, k, {PteClass(u), PteClass(v)}), opts, false);
    return res;
}

CertifiedInstance paley_tight(unsigned long p, const BuildOptions& opts) {
    const auto d = paley(p);
    CertifiedInstance out{tdesign_to_pte(d.residues, d.nonresidues, opts), {}};
    out.certificate = check_bound(out.instance, DomainSpec::sphere(p, (p - 1) / 2), 1, opts.threads);
    if (opts.reverify && !out.certificate.tight)
        throw VerificationFailure("Paley instance for p = " + std::to_string(p) + " is not tight");
    return out;
}

PteInstance halving_instance(const BuildOptions& opts) { return parity_instance(3, opts); }

PteInstance parity_instance(std::size_t r, const BuildOptions& opts) {
    require(r >= 3, "parity instance needs r >= 3 (degree r - 1 >= 2)");
    const auto [even, odd] = parity_split(r);
    return oa_to_pte(even, odd, opts);
}

PteInstance fano_instance(const BuildOptions& opts) {
    const auto [a, b] = fano_pair();
    return tdesign_to_pte(a, b, opts);
}

PteInstance witt_instance(const BuildOptions& opts) {
    const auto [a, b] = witt_pair();
    return tdesign_to_pte(a, b, opts);
}

PteInstance gdd_z8_instance(const BuildOptions& opts) {
    const auto [a, b] = gdd_z8_pair();
    return gdd_to_pte(a, b, opts);
}

PteInstance type1_direct_instance(const BuildOptions& opts) {
    const auto a = type1_cyclic_array();
    SymbolArray b;
    for (const auto& row : a) b.push_back({row[1], row[0]});
    return finish(PteInstance(2, 2, {PteClass(a), PteClass(b)}), opts, false);
}

PteInstance prouhet_partition(unsigned alpha, unsigned m, const BuildOptions& opts) {
    require(alpha >= 2, "need alpha >= 2");
    require(m >= 1, "need m >= 1");
    unsigned long total = 1;
    for (unsigned i = 0; i <= m; ++i) {
        require(total <= 2000000ul / alpha, "alpha^(m+1) too large");
        total *= alpha;
    }
    std::vector<std::vector<Point>> classes(alpha);
    for (unsigned long x = 0; x < total; ++x) {
        unsigned long s = 0;
        for (unsigned long y = x; y > 0; y /= alpha) s += y % alpha;
        classes[s % alpha].push_back({Rational(static_cast<long>(x))});
    }
    std::vector<PteClass> cs;
    for (auto& c : classes) cs.emplace_back(std::move(c));
    return finish(PteInstance(1, m, std::move(cs)), opts, false);
}

} // namespace pte
