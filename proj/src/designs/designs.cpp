#include "pte/designs.hpp"

#include "pte/error.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>

namespace pte {

std::vector<Rational> symbols_of(const SymbolArray& rows) {
    std::set<Rational> s;
    for (const auto& row : rows) s.insert(row.begin(), row.end());
    return {s.begin(), s.end()};
}

namespace {

// Column selections of size t in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t t = c.size();
    for (std::size_t i = t; i-- > 0;) {
        if (c[i] < n - t + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t t) {
    std::vector<std::size_t> c(t);
    for (std::size_t i = 0; i < t; ++i) c[i] = i;
    return c;
}

std::vector<std::size_t> decode(std::uint64_t code, std::size_t s, std::size_t t) {
    std::vector<std::size_t> digits(t);
    for (std::size_t i = t; i-- > 0;) {
        digits[i] = code % s;
        code /= s;
    }
    return digits;
}

bool all_distinct(const std::vector<std::size_t>& d) {
    std::set<std::size_t> s(d.begin(), d.end());
    return s.size() == d.size();
}

OaCheck check_array(const SymbolArray& rows, unsigned t, bool distinct_only) {
    require(!rows.empty(), "array has no rows");
    const std::size_t r = rows.front().size();
    for (const auto& row : rows) require(row.size() == r, "array rows differ in length");
    require(t >= 1 && t <= r, "strength must satisfy 1 <= t <= number of columns");
    const auto syms = symbols_of(rows);
    const std::size_t s = syms.size();
    if (distinct_only) require(t <= s, "strength exceeds the number of symbols");

    std::uint64_t space = 1;
    for (unsigned i = 0; i < t; ++i) {
        require(space <= (std::uint64_t{1} << 62) / s, "tuple space too large to enumerate");
        space *= s;
    }
    std::vector<std::vector<std::size_t>> idx(rows.size(), std::vector<std::size_t>(r));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < r; ++j)
            idx[i][j] = static_cast<std::size_t>(std::lower_bound(syms.begin(), syms.end(), rows[i][j]) - syms.begin());

    auto required = [&](std::uint64_t code) { return !distinct_only || all_distinct(decode(code, s, t)); };

    OaCheck out;
    std::optional<std::size_t> lambda;
    auto cols = first_combination(t);
    do {
        std::unordered_map<std::uint64_t, std::size_t> counts;
        for (const auto& row : idx) {
            std::uint64_t code = 0;
            for (auto c : cols) code = code * s + row[c];
            ++counts[code];
        }
        if (!lambda) {
            std::uint64_t first = 0;
            while (!required(first)) ++first;
            lambda = counts.count(first) ? counts[first] : 0;
        }
        // Every required tuple needs count lambda (> 0), every other tuple 0.
        std::size_t seen_required = 0;
        bool ok = *lambda > 0;
        for (const auto& [code, cnt] : counts) {
            if (!required(code) || cnt != *lambda) ok = false;
            else ++seen_required;
        }
        if (ok) {
            std::uint64_t needed = 0;
            if (distinct_only) {
                needed = 1;
                for (unsigned i = 0; i < t; ++i) needed *= s - i;
            } else {
                needed = space;
            }
            ok = seen_required == needed;
        }
        if (!ok) {
            for (std::uint64_t code = 0; code < space; ++code) {
                const auto it = counts.find(code);
                const std::size_t cnt = it == counts.end() ? 0 : it->second;
                const std::size_t want = required(code) ? *lambda : 0;
                if (cnt != want || (want == 0 && required(code))) {
                    out.columns = cols;
                    for (auto d : decode(code, s, t)) out.tuple.push_back(syms[d]);
                    out.count = cnt;
                    return out;
                }
            }
        }
    } while (next_combination(cols, r));
    out.holds = true;
    out.index = *lambda;
    return out;
}

} // namespace

OaCheck verify_oa(const SymbolArray& rows, unsigned t) { return check_array(rows, t, false); }

OaCheck verify_type1_oa(const SymbolArray& rows, unsigned t) { return check_array(rows, t, true); }

Integer oa_regular_index(const Integer& lambda, unsigned s, unsigned t, unsigned t2) {
    require(t2 >= 1 && t2 <= t, "need 1 <= t' <= t");
    Integer f;
    mpz_ui_pow_ui(f.get_mpz_t(), s, t - t2);
    return lambda * f;
}

OrthogonalArray trivial_oa(unsigned s, std::size_t r) {
    require(s >= 2 && r >= 1, "trivial array needs s >= 2 and r >= 1");
    OrthogonalArray oa;
    oa.levels = s;
    oa.strength = static_cast<unsigned>(r);
    oa.index = 1;
    std::vector<long> digits(r, 0);
    while (true) {
        oa.rows.emplace_back(digits.begin(), digits.end());
        std::size_t i = r;
        while (i > 0 && digits[i - 1] == static_cast<long>(s) - 1) digits[--i] = 0;
        if (i == 0) break;
        ++digits[i - 1];
    }
    return oa;
}

std::pair<OrthogonalArray, OrthogonalArray> parity_split(std::size_t r) {
    require(r >= 2, "parity split needs r >= 2");
    const auto cube = trivial_oa(2, r);
    OrthogonalArray even, odd;
    for (auto* half : {&even, &odd}) {
        half->levels = 2;
        half->strength = static_cast<unsigned>(r - 1);
        half->index = 1;
    }
    for (const auto& row : cube.rows) {
        std::size_t w = 0;
        for (const auto& x : row) w += x.is_zero() ? 0 : 1;
        (w % 2 == 0 ? even : odd).rows.push_back(row);
    }
    return {even, odd};
}

std::vector<SymbolArray> linear_oa_cosets(const std::vector<std::vector<int>>& generators) {
    require(!generators.empty(), "need at least one generator row");
    const std::size_t r = generators.front().size();
    require(r >= 1 && r <= 24, "generator length must be between 1 and 24");
    std::vector<std::uint32_t> gens;
    for (const auto& g : generators) {
        require(g.size() == r, "generator rows differ in length");
        std::uint32_t v = 0;
        for (int x : g) {
            require(x == 0 || x == 1, "generator entries must be 0 or 1");
            v = (v << 1) | static_cast<std::uint32_t>(x);
        }
        gens.push_back(v);
    }
    // Gaussian elimination over GF(2) detects dependence.
    std::vector<std::uint32_t> basis;
    for (auto v : gens) {
        for (auto b : basis) v = std::min(v, v ^ b);
        require(v != 0, "generator rows are linearly dependent over GF(2)");
        basis.push_back(v);
        std::sort(basis.rbegin(), basis.rend());
    }
    std::vector<std::uint32_t> span{0};
    for (auto g : gens) {
        const std::size_t n = span.size();
        for (std::size_t i = 0; i < n; ++i) span.push_back(span[i] ^ g);
    }
    std::sort(span.begin(), span.end());
    const std::uint32_t total = std::uint32_t{1} << r;
    std::vector<bool> covered(total, false);
    std::vector<SymbolArray> out;
    for (std::uint32_t rep = 0; rep < total; ++rep) {
        if (covered[rep]) continue;
        std::vector<std::uint32_t> coset;
        for (auto v : span) coset.push_back(v ^ rep);
        std::sort(coset.begin(), coset.end());
        SymbolArray rows;
        for (auto v : coset) {
            covered[v] = true;
            std::vector<Rational> row(r);
            for (std::size_t j = 0; j < r; ++j) row[j] = static_cast<int>((v >> (r - 1 - j)) & 1u);
            rows.push_back(std::move(row));
        }
        out.push_back(std::move(rows));
    }
    return out;
}

bool oas_disjoint(const SymbolArray& a, const SymbolArray& b) {
    std::set<std::vector<Rational>> sa(a.begin(), a.end());
    return std::none_of(b.begin(), b.end(), [&](const auto& row) { return sa.count(row) > 0; });
}

bool verify_latin(const std::vector<std::vector<int>>& grid) {
    const std::size_t l = grid.size();
    if (l == 0) return false;
    for (const auto& row : grid)
        if (row.size() != l) return false;
    for (std::size_t i = 0; i < l; ++i) {
        std::vector<bool> in_row(l + 1, false), in_col(l + 1, false);
        for (std::size_t j = 0; j < l; ++j) {
            const int a = grid[i][j], b = grid[j][i];
            if (a < 1 || a > static_cast<int>(l) || b < 1 || b > static_cast<int>(l)) return false;
            if (in_row[a] || in_col[b]) return false;
            in_row[a] = in_col[b] = true;
        }
    }
    return true;
}

Gdd Gdd::make(std::size_t point_count, std::vector<std::vector<std::size_t>> groups,
              std::vector<std::vector<std::size_t>> blocks, unsigned t, std::size_t k, std::size_t lambda) {
    Gdd d;
    d.point_count = point_count;
    for (auto& g : groups) std::sort(g.begin(), g.end());
    std::sort(groups.begin(), groups.end());
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    d.groups = std::move(groups);
    d.blocks = std::move(blocks);
    d.t = t;
    d.k = k;
    d.lambda = lambda;
    return d;
}

Gdd Gdd::t_design(std::size_t r, std::vector<std::vector<std::size_t>> blocks, unsigned t, std::size_t k,
                  std::size_t lambda) {
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < r; ++i) groups.push_back({i});
    return make(r, std::move(groups), std::move(blocks), t, k, lambda);
}

namespace {

std::uint64_t subset_code(const std::vector<std::size_t>& pts, std::size_t n) {
    std::uint64_t code = 0;
    for (auto p : pts) code = code * n + p;
    return code;
}

// Calls f on every t-subset of `items` (sorted input gives sorted subsets, in
// lexicographic order).
template <typename F>
void for_each_subset(const std::vector<std::size_t>& items, std::size_t t, F&& f) {
    if (t > items.size()) return;
    auto c = first_combination(t);
    std::vector<std::size_t> sub(t);
    do {
        for (std::size_t i = 0; i < t; ++i) sub[i] = items[c[i]];
        f(sub);
    } while (next_combination(c, items.size()));
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

} // namespace

GddCheck verify_gdd(const Gdd& d) {
    const std::size_t n = d.point_count;
    require(n >= 1, "design has no points");
    require(!d.groups.empty(), "design has no groups");
    const std::size_t v = d.groups.front().size();
    std::vector<std::size_t> group_of(n, n);
    for (std::size_t gi = 0; gi < d.groups.size(); ++gi) {
        require(d.groups[gi].size() == v && v >= 1, "groups must be nonempty and of equal size");
        for (auto p : d.groups[gi]) {
            require(p < n, "group point out of range");
            require(group_of[p] == n, "groups overlap");
            group_of[p] = gi;
        }
    }
    for (std::size_t p = 0; p < n; ++p) require(group_of[p] != n, "groups do not cover every point");
    const std::size_t g = d.groups.size();
    require(d.t >= 1 && d.t <= d.k && d.k <= g, "parameters must satisfy 1 <= t <= k <= g");
    require(n <= 255, "too many points for exhaustive verification");

    GddCheck out;
    std::unordered_map<std::uint64_t, std::size_t> counts;
    for (const auto& b : d.blocks) {
        if (b.size() != d.k) {
            out.reason = "block " + join(b) + " does not have size " + std::to_string(d.k);
            out.witness = b;
            return out;
        }
        std::set<std::size_t> seen_groups;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] >= n || (i > 0 && b[i] == b[i - 1])) {
                out.reason = "block " + join(b) + " has repeated or out-of-range points";
                out.witness = b;
                return out;
            }
            if (!seen_groups.insert(group_of[b[i]]).second) {
                out.reason = "block " + join(b) + " meets a group twice";
                out.witness = b;
                return out;
            }
        }
        for_each_subset(b, d.t, [&](const std::vector<std::size_t>& s) { ++counts[subset_code(s, n)]; });
    }
    // Transversal t-subsets in lexicographic order.
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    bool ok = true;
    for_each_subset(all, d.t, [&](const std::vector<std::size_t>& s) {
        if (!ok) return;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (group_of[s[i]] == group_of[s[j]]) return;
        const auto it = counts.find(subset_code(s, n));
        const std::size_t c = it == counts.end() ? 0 : it->second;
        if (c != d.lambda) {
            ok = false;
            out.reason = "transversal subset " + join(s) + " lies in " + std::to_string(c) + " blocks, expected " +
                         std::to_string(d.lambda);
            out.witness = s;
        }
    });
    out.holds = ok;
    return out;
}

Rational gdd_lambda_s(std::size_t lambda, unsigned t, std::size_t k, std::size_t g, std::size_t v, unsigned s) {
    require(s >= 1 && s <= t && t <= k && k <= g, "need 1 <= s <= t <= k <= g");
    Integer a, b, w;
    mpz_bin_uiui(a.get_mpz_t(), g - s, t - s);
    mpz_bin_uiui(b.get_mpz_t(), k - s, t - s);
    mpz_ui_pow_ui(w.get_mpz_t(), v, t - s);
    return Rational(Integer(static_cast<unsigned long>(lambda)) * a * w, b);
}

std::size_t blocks_through(const Gdd& design, const std::vector<std::size_t>& subset) {
    std::size_t c = 0;
    for (const auto& b : design.blocks)
        if (std::all_of(subset.begin(), subset.end(),
                        [&](std::size_t p) { return std::binary_search(b.begin(), b.end(), p); }))
            ++c;
    return c;
}

Point char_vector(const std::vector<std::size_t>& block, std::size_t r) {
    Point x(r);
    for (auto p : block) {
        require(p < r, "block point " + std::to_string(p) + " outside 0.." + std::to_string(r - 1));
        x[p] = 1;
    }
    return x;
}

bool designs_disjoint(const Gdd& a, const Gdd& b) {
    std::set<std::vector<std::size_t>> sa(a.blocks.begin(), a.blocks.end());
    return std::none_of(b.blocks.begin(), b.blocks.end(), [&](const auto& blk) { return sa.count(blk) > 0; });
}

bool is_hadamard(const HadamardMatrix& h) {
    const std::size_t n = h.size();
    if (n == 0) return false;
    for (const auto& row : h) {
        if (row.size() != n) return false;
        for (int x : row)
            if (x != 1 && x != -1) return false;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long dot = 0;
            for (std::size_t k = 0; k < n; ++k) dot += h[i][k] * h[j][k];
            if (dot != (i == j ? static_cast<long>(n) : 0)) return false;
        }
    return true;
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int legendre(long a, unsigned long p) {
    const long m = static_cast<long>(p);
    long x = ((a % m) + m) % m;
    if (x == 0) return 0;
    // Euler's criterion.
    unsigned long e = (p - 1) / 2, base = static_cast<unsigned long>(x), acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return acc == 1 ? 1 : -1;
}

namespace {

std::vector<std::vector<std::size_t>> develop(const std::vector<std::vector<std::size_t>>& bases, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& base : bases)
        for (std::size_t a = 0; a < n; ++a) {
            std::vector<std::size_t> b;
            for (auto x : base) b.push_back((x + a) % n);
            out.push_back(std::move(b));
        }
    return out;
}

} // namespace

PaleyDesigns paley(unsigned long p) {
    require(is_prime(p), "p = " + std::to_string(p) + " is not prime");
    require(p % 4 == 3, "p = " + std::to_string(p) + " is not congruent to 3 mod 4");
    require(p >= 7, "p must be at least 7");
    require(p <= 1000, "p too large for this construction");
    PaleyDesigns out;
    const std::size_t h = p + 1;
    out.hadamard.assign(h, std::vector<int>(h, 1));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            out.hadamard[i + 1][j + 1] = i == j ? -1 : legendre(static_cast<long>(i) - static_cast<long>(j), p);

    std::vector<std::size_t> qr, nqr;
    std::set<std::size_t> squares;
    for (std::size_t x = 1; x < p; ++x) squares.insert(x * x % p);
    for (auto q : squares) {
        qr.push_back(q);
        nqr.push_back(p - q);
    }
    const std::size_t k = (p - 1) / 2, lambda = (p - 3) / 4;
    out.residues = Gdd::t_design(p, develop({qr}, p), 2, k, lambda);
    out.nonresidues = Gdd::t_design(p, develop({nqr}, p), 2, k, lambda);
    return out;
}

std::pair<Gdd, Gdd> fano_pair() {
    return {Gdd::t_design(7, develop({{0, 1, 3}}, 7), 2, 3, 1), Gdd::t_design(7, develop({{0, 2, 3}}, 7), 2, 3, 1)};
}

std::pair<Gdd, Gdd> witt_pair() {
    const std::vector<std::vector<std::size_t>> bases{
        {0, 1, 2, 3, 5, 14, 17},  {0, 1, 2, 6, 7, 19, 21},  {0, 1, 2, 8, 11, 12, 18}, {0, 1, 2, 9, 10, 15, 20},
        {0, 1, 3, 4, 11, 19, 20}, {0, 1, 3, 6, 8, 10, 13},  {0, 1, 3, 7, 9, 16, 18},  {0, 1, 4, 6, 9, 12, 17},
        {0, 1, 4, 10, 14, 18, 21}, {0, 1, 5, 9, 11, 13, 21}, {0, 1, 5, 10, 12, 16, 19}};
    auto blocks = develop(bases, 23);
    auto reversed = blocks;
    for (auto& b : reversed)
        for (auto& x : b) x = 22 - x;
    return {Gdd::t_design(23, std::move(blocks), 4, 7, 1), Gdd::t_design(23, std::move(reversed), 4, 7, 1)};
}

std::pair<Gdd, Gdd> gdd_z8_pair() {
    const std::vector<std::vector<std::size_t>> groups{{0, 4}, {1, 5}, {2, 6}, {3, 7}};
    return {Gdd::make(8, groups, develop({{0, 1, 3}}, 8), 2, 3, 1),
            Gdd::make(8, groups, develop({{0, 1, 6}}, 8), 2, 3, 1)};
}

Gdd affine_plane_gdd() {
    return Gdd::make(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}},
                     {{0, 3, 6}, {0, 4, 7}, {0, 5, 8}, {1, 5, 7}, {1, 3, 8}, {1, 4, 6}, {2, 4, 8}, {2, 5, 6}, {2, 3, 7}},
                     2, 3, 1);
}

SymbolArray type1_permutation_array() {
    return {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
}

SymbolArray type1_cyclic_array() { return {{0, 1}, {1, 2}, {2, 0}}; }

} // namespace pte
