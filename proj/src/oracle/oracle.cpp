#include "pte/oracle.hpp"

#include "pte/error.hpp"
#include "pte/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <thread>

namespace pte {

namespace {

__extension__ typedef __int128 i128;

using Key = std::vector<std::vector<std::vector<long>>>;  // classes of points

double binom(double n, double k) {
    double v = 1;
    for (double i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

bool disjoint(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else return false;
    }
    return true;
}

} // namespace

std::vector<PteInstance> brute_search(const SearchSpec& spec, std::size_t limit) {
    const std::size_t r = spec.dimension, n = spec.size, alpha = spec.classes;
    const unsigned m = spec.degree;
    require(r >= 1 && m >= 1 && n >= 1, "dimension, degree and size must be positive");
    require(alpha >= 2, "need at least two classes");
    require(spec.lo <= spec.hi, "empty coordinate range (lo > hi)");
    require(!spec.translate || r == 1, "translation normalization is only defined for r = 1");

    const double side = static_cast<double>(spec.hi) - static_cast<double>(spec.lo) + 1;
    const double point_count = std::pow(side, static_cast<double>(r));
    const double multisets = binom(point_count + static_cast<double>(n) - 1, static_cast<double>(n));
    const double space = binom(multisets, static_cast<double>(alpha));
    if (!(space <= spec.ceiling))
        throw InvalidInput("search space of about " + std::to_string(space) + " class tuples exceeds the ceiling of " +
                           std::to_string(spec.ceiling) + "; use a smaller range, size or dimension");
    const double b = std::max(std::abs(static_cast<double>(spec.lo)), std::abs(static_cast<double>(spec.hi)));
    require(std::log2(static_cast<double>(n)) + m * std::log2(std::max(b, 1.0)) < 118,
            "coordinates too large for exact 128-bit power sums");

    std::vector<std::vector<long>> points;
    {
        std::vector<long> p(r, spec.lo);
        while (true) {
            points.push_back(p);
            std::size_t j = r;
            while (j > 0 && p[j - 1] == spec.hi) p[--j] = spec.lo;
            if (j == 0) break;
            ++p[j - 1];
        }
    }
    const auto exps = multi_indices(r, m);
    std::vector<std::vector<i128>> mono(points.size(), std::vector<i128>(exps.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t e = 0; e < exps.size(); ++e) {
            i128 v = 1;
            for (std::size_t j = 0; j < r; ++j)
                for (unsigned k = 0; k < exps[e][j]; ++k) v *= points[i][j];
            mono[i][e] = v;
        }

    // Non-decreasing index sequences = multisets, in lexicographic order.
    std::vector<std::vector<std::uint32_t>> sets;
    {
        std::vector<std::uint32_t> idx(n, 0);
        const auto last = static_cast<std::uint32_t>(points.size() - 1);
        while (true) {
            sets.push_back(idx);
            std::size_t j = n;
            while (j > 0 && idx[j - 1] == last) --j;
            if (j == 0) break;
            const std::uint32_t v = idx[j - 1] + 1;
            for (std::size_t q = j - 1; q < n; ++q) idx[q] = v;
        }
    }

    std::vector<std::vector<i128>> sig(sets.size(), std::vector<i128>(exps.size(), 0));
    const auto work = [&](std::size_t from, std::size_t to) {
        for (std::size_t s = from; s < to; ++s)
            for (auto i : sets[s])
                for (std::size_t e = 0; e < exps.size(); ++e) sig[s][e] += mono[i][e];
    };
    const std::size_t threads = std::clamp<std::size_t>(spec.threads, 1, std::max<std::size_t>(1, sets.size()));
    {
        std::vector<std::thread> pool;
        const std::size_t chunk = (sets.size() + threads - 1) / threads;
        for (std::size_t t = 1; t < threads; ++t)
            pool.emplace_back(work, std::min(sets.size(), t * chunk), std::min(sets.size(), (t + 1) * chunk));
        work(0, std::min(sets.size(), chunk));
        for (auto& th : pool) th.join();
    }

    std::map<std::vector<i128>, std::vector<std::size_t>> groups;
    for (std::size_t s = 0; s < sets.size(); ++s) groups[sig[s]].push_back(s);

    std::set<Key> found;
    std::vector<std::size_t> chosen;
    const auto emit = [&] {
        Key key;
        for (auto s : chosen) {
            std::vector<std::vector<long>> c;
            for (auto i : sets[s]) c.push_back(points[i]);
            key.push_back(std::move(c));
        }
        if (spec.translate) {
            long lo = key[0][0][0];
            for (const auto& c : key) lo = std::min(lo, c.front()[0]);
            for (auto& c : key)
                for (auto& p : c) p[0] -= lo;
        }
        std::sort(key.begin(), key.end());
        found.insert(std::move(key));
    };
    for (const auto& [s, members] : groups) {
        if (members.size() < alpha) continue;
        const auto dfs = [&](auto&& self, std::size_t from) -> void {
            if (chosen.size() == alpha) {
                emit();
                return;
            }
            for (std::size_t q = from; q < members.size(); ++q) {
                const auto cand = members[q];
                if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return disjoint(sets[c], sets[cand]); })) {
                    chosen.push_back(cand);
                    self(self, q + 1);
                    chosen.pop_back();
                }
            }
        };
        dfs(dfs, 0);
    }

    std::vector<PteInstance> out;
    for (const auto& key : found) {
        if (limit != 0 && out.size() == limit) break;
        std::vector<PteClass> classes;
        for (const auto& c : key) {
            std::vector<Point> pts;
            for (const auto& p : c) pts.emplace_back(p.begin(), p.end());
            classes.emplace_back(std::move(pts));
        }
        out.emplace_back(r, m, std::move(classes));
    }
    return out;
}

IdealLinearityReport ideal_linearity_check(const PteInstance& instance) {
    require(instance.dimension() == 1, "ideal linearity check needs a one-dimensional instance");
    require(instance.class_count() == 2, "ideal linearity check needs exactly two classes");
    const std::size_t n = instance.class_size();
    require(is_ideal(instance), "not ideal: n = " + std::to_string(n) + " but m + 1 = " +
                                    std::to_string(instance.degree() + 1));
    const auto report = verify(instance);
    if (!report.holds) throw InvalidInput("instance does not verify: " + report.first_failure->describe());
    IdealLinearityReport out;
    for (const auto& p : instance[0].points()) {
        out.sum_x += p[0];
        out.power_x += p[0].pow(static_cast<unsigned>(n + 1));
    }
    for (const auto& p : instance[1].points()) out.power_y += p[0].pow(static_cast<unsigned>(n + 1));
    out.sum_zero = out.sum_x.is_zero();
    out.powers_equal = out.power_x == out.power_y;
    out.equivalent = out.sum_zero == out.powers_equal;
    return out;
}

} // namespace pte
