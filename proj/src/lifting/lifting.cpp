#include "pte/lifting.hpp"

#include "pte/error.hpp"
#include "pte/verify.hpp"

#include <algorithm>
#include <set>

namespace pte {

namespace {

Rational power_sum(const std::vector<Rational>& xs, unsigned k) {
    Rational s = 0;
    for (const auto& x : xs) s += x.pow(k);
    return s;
}

Rational sum(const std::vector<Rational>& xs) { return power_sum(xs, 1); }

struct Labelled {
    std::string label;
    Rational value;
};

std::vector<Labelled> signed_values(const std::vector<Rational>& xs, const std::string& name) {
    std::vector<Labelled> out;
    for (std::size_t i = 0; i < xs.size(); ++i) out.push_back({name + "_" + std::to_string(i + 1), xs[i]});
    for (std::size_t i = 0; i < xs.size(); ++i) out.push_back({"-" + name + "_" + std::to_string(i + 1), -xs[i]});
    return out;
}

std::string multiset_str(std::vector<Rational> xs) {
    std::sort(xs.begin(), xs.end());
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ",") + x.str();
    return "{" + s + "}";
}

// Throws on the first coincidence among +-A_i, +-B_i: inside A, inside B,
// whole-multiset equality, then across.
void require_distinct(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    const auto sa = signed_values(a, "A"), sb = signed_values(b, "B");
    std::vector<Rational> va, vb;
    for (const auto& x : sa) va.push_back(x.value);
    for (const auto& x : sb) vb.push_back(x.value);
    const auto inside = [](const std::vector<Labelled>& v, const std::string& name) {
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                if (v[i].value == v[j].value)
                    throw InvalidInput("degenerate parameters: repeated value " + v[i].value.str() + " inside " + name +
                                       " (" + v[i].label + " = " + v[j].label + ")");
    };
    inside(sa, "A");
    inside(sb, "B");
    if (multiset_str(va) == multiset_str(vb))
        throw InvalidInput("degenerate parameters: A and B coincide as multisets " + multiset_str(va));
    for (const auto& x : sa)
        for (const auto& y : sb)
            if (x.value == y.value)
                throw InvalidInput("degenerate parameters: value " + x.value.str() + " occurs in both A and B (" +
                                   x.label + " = " + y.label + ")");
}

Point negated(Point p) {
    for (auto& x : p) x = -x;
    return p;
}

PteClass signed_class(std::vector<Point> pts) {
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) pts.push_back(negated(pts[i]));
    return PteClass(std::move(pts));
}

PteInstance substitute(const SymbolArray& rows, const SignedBase& base, unsigned m) {
    require(m >= 2 && m % 2 == 0, "lifting degree m must be even and >= 2");
    const auto symbols = symbols_of(rows);
    const std::size_t s = symbols.size();
    require(base.a.size() == s, "base has " + std::to_string(base.a.size()) + " values but the array has " +
                                    std::to_string(s) + " symbols");
    require(s >= m + 1, "need s >= m + 1 (s = " + std::to_string(s) + ", m = " + std::to_string(m) + ")");
    check_signed_base(base, m);
    const auto lift = [&](const std::vector<Rational>& values) {
        std::vector<Point> pts;
        for (const auto& row : rows) {
            Point p;
            for (const auto& x : row)
                p.push_back(values[std::lower_bound(symbols.begin(), symbols.end(), x) - symbols.begin()]);
            pts.push_back(std::move(p));
        }
        return signed_class(std::move(pts));
    };
    return PteInstance(rows.front().size(), m + 3, {lift(base.a), lift(base.b)});
}

LiftResult with_ranks(PteInstance inst) {
    LiftResult r;
    r.ranks = class_ranks(inst);
    r.proper = is_proper(inst);
    r.instance = std::move(inst);
    return r;
}

} // namespace

void check_signed_base(const SignedBase& base, unsigned m) {
    require(!base.a.empty() && base.a.size() == base.b.size(), "base needs two nonempty lists of equal length");
    require_distinct(base.a, base.b);
    require(sum(base.a).is_zero() && sum(base.b).is_zero(), "base sums must vanish (sum A = " + sum(base.a).str() +
                                                                ", sum B = " + sum(base.b).str() + ")");
    for (unsigned k = 2; k <= m + 2; ++k) {
        if (k == m + 1) continue;
        const auto pa = power_sum(base.a, k), pb = power_sum(base.b, k);
        require(pa == pb, "base power sums differ at exponent " + std::to_string(k) + ": " + pa.str() + " vs " +
                              pb.str());
    }
}

PteInstance oa_lift(const OrthogonalArray& oa, const SignedBase& base, unsigned m, const BuildOptions& opts) {
    require(!oa.rows.empty(), "empty array");
    const std::size_t r = oa.rows.front().size();
    require(oa.strength == r, "OA lifting needs strength equal to the number of columns r = " + std::to_string(r));
    require(verify_oa(oa.rows, oa.strength).holds, "array is not an orthogonal array of strength " + std::to_string(r));
    auto inst = finish(substitute(oa.rows, base, m), opts, true);
    if (opts.reverify && !is_symmetric(inst)) throw VerificationFailure("lifted classes are not symmetric");
    return inst;
}

LiftResult type1_oa_lift(const SymbolArray& rows, const SignedBase& base, unsigned m, const BuildOptions& opts) {
    require(!rows.empty(), "empty array");
    const std::size_t r = rows.front().size();
    const std::size_t s = symbols_of(rows).size();
    require(s <= r, "Type-I lifting needs strength s <= r (s = " + std::to_string(s) + ", r = " + std::to_string(r) + ")");
    require(verify_type1_oa(rows, static_cast<unsigned>(s)).holds,
            "array is not a Type-I orthogonal array of strength s = " + std::to_string(s));
    return with_ranks(finish(substitute(rows, base, m), opts, false));
}

std::pair<Triple, Triple> borwein_triples(const Rational& a, const Rational& b) {
    const Rational ab = a * b;
    return {Triple{2 * a + 2 * b, -ab - b - a + 3, ab - b - a - 3},
            Triple{2 * b - 2 * a, ab - b + a + 3, -ab - b + a - 3}};
}

PteInstance borwein1d(const Rational& a, const Rational& b, const BuildOptions& opts) {
    const auto [ta, tb] = borwein_triples(a, b);
    const std::vector<Rational> va(ta.begin(), ta.end()), vb(tb.begin(), tb.end());
    require_distinct(va, vb);
    const auto cls = [](const std::vector<Rational>& v) {
        std::vector<Point> pts;
        for (const auto& x : v) pts.push_back({x});
        return signed_class(std::move(pts));
    };
    return finish(PteInstance(1, 5, {cls(va), cls(vb)}), opts, false);
}

PteInstance borwein2d(const Rational& a, const Rational& b, const BuildOptions& opts) {
    const auto [ta, tb] = borwein_triples(a, b);
    require_distinct({ta.begin(), ta.end()}, {tb.begin(), tb.end()});
    const auto cls = [](const Triple& t) {
        return signed_class({{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}});
    };
    return finish(PteInstance(2, 5, {cls(ta), cls(tb)}), opts, true);
}

PteInstance borwein3d(const Triple& a, const Triple& b, const BuildOptions& opts) {
    const std::vector<Rational> va(a.begin(), a.end()), vb(b.begin(), b.end());
    require(sum(va).is_zero() && sum(vb).is_zero(), "zero-sum hypothesis fails: A_1 + A_2 + A_3 = " + sum(va).str() +
                                                        ", B_1 + B_2 + B_3 = " + sum(vb).str());
    require(power_sum(va, 2) == power_sum(vb, 2), "degree-2 equality fails: " + power_sum(va, 2).str() + " vs " +
                                                       power_sum(vb, 2).str());
    require(power_sum(va, 4) == power_sum(vb, 4), "fourth-power equality fails: " + power_sum(va, 4).str() + " vs " +
                                                       power_sum(vb, 4).str());
    const auto cls = [](const Triple& t) {
        return signed_class({{t[0], t[1], t[2]}, {t[1], t[2], t[0]}, {t[2], t[0], t[1]}});
    };
    const PteClass x = cls(a), y = cls(b);
    const std::set<Point> sx(x.points().begin(), x.points().end());
    for (const auto& p : y.points())
        require(sx.count(p) == 0, "disjointness fails: both classes contain a vector built from the same triple entries");
    return finish(PteInstance(3, 5, {x, y}), opts, false);
}

LiftResult cartesian_lift(const PteInstance& s, const PteInstance& t, const std::vector<std::vector<int>>& latin,
                          const BuildOptions& opts) {
    const std::size_t l = latin.size();
    require(verify_latin(latin), "index array is not a Latin square on symbols 1..l");
    require(s.class_count() == l && t.class_count() == l,
            "Latin square order " + std::to_string(l) + " does not match the class counts (" +
                std::to_string(s.class_count()) + ", " + std::to_string(t.class_count()) + ")");
    for (const auto& [name, inst] : {std::pair<const char*, const PteInstance*>{"S", &s}, {"T", &t}}) {
        const auto report = verify(*inst, opts.threads);
        if (!report.holds)
            throw InvalidInput(std::string(name) + " classes do not verify: " + report.first_failure->describe());
    }
    std::vector<PteClass> out;
    for (std::size_t a = 0; a < l; ++a) {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < l; ++i)
            for (const auto& x : s[i].points())
                for (const auto& y : t[static_cast<std::size_t>(latin[a][i]) - 1].points()) {
                    Point p = x;
                    p.insert(p.end(), y.begin(), y.end());
                    pts.push_back(std::move(p));
                }
        out.emplace_back(std::move(pts));
    }
    return with_ranks(finish(PteInstance(s.dimension() + t.dimension(), s.degree() + t.degree() + 1, std::move(out)),
                             opts, false));
}

PteInstance jacroux_reduce(const PteInstance& u, unsigned long alpha, unsigned long n_s, const BuildOptions& opts) {
    require(u.dimension() == 2, "Jacroux reduction needs two-dimensional classes");
    require(alpha >= 1 && n_s >= 1, "alpha and n_S must be positive");
    const Rational width(static_cast<long>(alpha * n_s));
    std::vector<PteClass> out;
    for (std::size_t c = 0; c < u.class_count(); ++c) {
        std::vector<Point> pts;
        for (const auto& p : u[c].points()) {
            const auto where = "point (" + p[0].str() + "," + p[1].str() + ") of class " + std::to_string(c);
            require(p[0].is_integer() && p[1].is_integer(), where + " has a non-integer coordinate");
            require(p[0] >= 1 && p[0] <= width, where + ": first coordinate outside [1, " + width.str() + "]");
            require(p[1] >= 1, where + ": second coordinate below 1");
            pts.push_back({p[0] + (p[1] - 1) * width});
        }
        out.emplace_back(std::move(pts));
    }
    return finish(PteInstance(1, u.degree(), std::move(out)), opts, false);
}

} // namespace pte
