#include "pte/verify.hpp"

#include "pte/error.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace pte {

namespace {

__extension__ typedef __int128 i128;

struct Term {
    std::size_t coord;
    unsigned power;
};

std::vector<std::vector<Term>> supports(const std::vector<Exponent>& indices) {
    std::vector<std::vector<Term>> out;
    out.reserve(indices.size());
    for (const auto& k : indices) {
        std::vector<Term> s;
        for (std::size_t j = 0; j < k.size(); ++j)
            if (k[j] != 0) s.push_back({j, k[j]});
        out.push_back(std::move(s));
    }
    return out;
}

// Every coordinate j is multiplied by the lcm of its denominators over all
// classes. Each power sum x^k then scales by the same factor in every class,
// so equality of power sums is unaffected.
std::vector<std::vector<std::vector<Integer>>> integerize(const PteInstance& inst) {
    const std::size_t r = inst.dimension();
    std::vector<Integer> scale(r, 1);
    for (const auto& c : inst.classes())
        for (const auto& p : c.points())
            for (std::size_t j = 0; j < r; ++j)
                mpz_lcm(scale[j].get_mpz_t(), scale[j].get_mpz_t(), p[j].raw().get_den_mpz_t());
    std::vector<std::vector<std::vector<Integer>>> out;
    for (const auto& c : inst.classes()) {
        std::vector<std::vector<Integer>> pts;
        for (const auto& p : c.points()) {
            std::vector<Integer> q(r);
            for (std::size_t j = 0; j < r; ++j)
                q[j] = p[j].raw().get_num() * (scale[j] / p[j].raw().get_den());
            pts.push_back(std::move(q));
        }
        out.push_back(std::move(pts));
    }
    return out;
}

// Power tables pw[(point * r + coord) * (m + 1) + e] = x_coord^e.
template <typename T>
struct Tables {
    std::size_t r = 0;
    unsigned m = 0;
    std::vector<std::vector<T>> per_class;
    std::vector<std::size_t> sizes;
};

template <typename T>
T convert(const Integer& x);

template <>
i128 convert<i128>(const Integer& x) {
    // |x| < 2^120 is guaranteed by the caller.
    Integer a = abs(x);
    const Integer lo = a & Integer("18446744073709551615");
    const Integer hi = a >> 64;
    i128 v = (static_cast<i128>(hi.get_ui()) << 64) | static_cast<i128>(lo.get_ui());
    return sgn(x) < 0 ? -v : v;
}

template <>
Integer convert<Integer>(const Integer& x) { return x; }

template <typename T>
Tables<T> build_tables(const std::vector<std::vector<std::vector<Integer>>>& ints, std::size_t r, unsigned m) {
    Tables<T> t;
    t.r = r;
    t.m = m;
    for (const auto& cls : ints) {
        std::vector<T> tab(cls.size() * r * (m + 1));
        for (std::size_t p = 0; p < cls.size(); ++p)
            for (std::size_t j = 0; j < r; ++j) {
                T* row = &tab[(p * r + j) * (m + 1)];
                const T x = convert<T>(cls[p][j]);
                row[0] = 1;
                for (unsigned e = 1; e <= m; ++e) row[e] = row[e - 1] * x;
            }
        t.per_class.push_back(std::move(tab));
        t.sizes.push_back(cls.size());
    }
    return t;
}

template <typename T>
T class_sum(const Tables<T>& t, std::size_t c, const std::vector<Term>& support) {
    const auto& tab = t.per_class[c];
    const std::size_t stride = t.m + 1;
    T sum = 0;
    T prod;
    for (std::size_t p = 0; p < t.sizes[c]; ++p) {
        const std::size_t base = p * t.r;
        prod = tab[(base + support[0].coord) * stride + support[0].power];
        for (std::size_t s = 1; s < support.size(); ++s)
            prod *= tab[(base + support[s].coord) * stride + support[s].power];
        sum += prod;
    }
    return sum;
}

struct Mismatch {
    std::size_t index;
    std::size_t other_class;
};

template <typename T>
std::optional<Mismatch> scan(const Tables<T>& t, const std::vector<std::vector<Term>>& sup, std::size_t threads) {
    const std::size_t total = sup.size();
    const std::size_t classes = t.per_class.size();
    std::atomic<std::size_t> best{total};

    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (i >= best.load(std::memory_order_relaxed)) return;
            const T s0 = class_sum(t, 0, sup[i]);
            for (std::size_t c = 1; c < classes; ++c) {
                if (class_sum(t, c, sup[i]) != s0) {
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {}
                    return;
                }
            }
        }
    };

    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(total, 1));
    if (threads == 1) {
        work(0, total);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (total + threads - 1) / threads;
        for (std::size_t w = 0; w < threads; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(total, lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    const std::size_t idx = best.load();
    if (idx == total) return std::nullopt;
    const T s0 = class_sum(t, 0, sup[idx]);
    for (std::size_t c = 1; c < classes; ++c)
        if (class_sum(t, c, sup[idx]) != s0) return Mismatch{idx, c};
    return Mismatch{idx, 1};
}

bool fits_int128(const std::vector<std::vector<std::vector<Integer>>>& ints, unsigned m) {
    Integer bound = 1;
    std::size_t n = 0;
    for (const auto& cls : ints) {
        n = std::max(n, cls.size());
        for (const auto& p : cls)
            for (const auto& x : p)
                if (abs(x) > bound) bound = abs(x);
    }
    Integer total;
    mpz_pow_ui(total.get_mpz_t(), bound.get_mpz_t(), m);
    total *= static_cast<unsigned long>(n);
    return mpz_sizeinbase(total.get_mpz_t(), 2) < 120;
}

std::optional<IdentityFailure> first_shared_point(const PteInstance& inst) {
    const auto& cs = inst.classes();
    for (std::size_t a = 0; a < cs.size(); ++a)
        for (std::size_t b = a + 1; b < cs.size(); ++b) {
            const auto& x = cs[a].points();
            const auto& y = cs[b].points();
            std::size_t i = 0, j = 0;
            while (i < x.size() && j < y.size()) {
                if (x[i] < y[j]) ++i;
                else if (y[j] < x[i]) ++j;
                else {
                    IdentityFailure f;
                    f.kind = IdentityFailure::Kind::SharedPoint;
                    f.first_class = a;
                    f.second_class = b;
                    f.shared_point = x[i];
                    return f;
                }
            }
        }
    return std::nullopt;
}

std::string point_str(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].str();
    return s + ")";
}

} // namespace

std::string IdentityFailure::describe() const {
    std::ostringstream os;
    if (kind == Kind::SharedPoint) {
        os << "classes " << first_class << " and " << second_class << " share the point " << point_str(shared_point);
    } else {
        os << "power sum for exponent (";
        for (std::size_t i = 0; i < exponent.size(); ++i) os << (i ? "," : "") << exponent[i];
        os << ") differs: class " << first_class << " gives " << first_value << ", class " << second_class
           << " gives " << second_value;
    }
    return os.str();
}

std::size_t default_threads() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

VerificationReport verify(const PteInstance& instance, std::size_t threads) {
    if (threads == 0) threads = default_threads();
    VerificationReport report;
    if (auto shared = first_shared_point(instance)) {
        report.first_failure = std::move(shared);
        return report;
    }
    const auto indices = multi_indices(instance.dimension(), instance.degree());
    const auto sup = supports(indices);
    const auto ints = integerize(instance);
    std::optional<Mismatch> miss;
    if (fits_int128(ints, instance.degree()))
        miss = scan(build_tables<i128>(ints, instance.dimension(), instance.degree()), sup, threads);
    else
        miss = scan(build_tables<Integer>(ints, instance.dimension(), instance.degree()), sup, threads);
    if (!miss) {
        report.holds = true;
        return report;
    }
    IdentityFailure f;
    f.kind = IdentityFailure::Kind::PowerSum;
    f.first_class = 0;
    f.second_class = miss->other_class;
    f.exponent = indices[miss->index];
    f.first_value = class_power_sum(instance[0], f.exponent);
    f.second_value = class_power_sum(instance[f.second_class], f.exponent);
    report.first_failure = std::move(f);
    return report;
}

unsigned max_verified_degree(const PteInstance& instance, unsigned cap, std::size_t threads) {
    require(cap >= 1, "degree cap must be positive");
    const auto report = verify(instance.with_degree(cap), threads);
    if (report.holds) return cap;
    const auto& f = *report.first_failure;
    if (f.kind == IdentityFailure::Kind::SharedPoint) return 0;
    unsigned d = 0;
    for (auto e : f.exponent) d += e;
    return d - 1;
}

std::vector<std::size_t> class_ranks(const PteInstance& instance) {
    std::vector<std::size_t> out;
    for (const auto& c : instance.classes()) out.push_back(rank(c.as_matrix()));
    return out;
}

bool is_proper(const PteInstance& instance) {
    for (auto r : class_ranks(instance))
        if (r != instance.dimension()) return false;
    return true;
}

std::size_t joint_rank(const PteInstance& instance) {
    std::vector<Point> all;
    for (const auto& c : instance.classes()) all.insert(all.end(), c.points().begin(), c.points().end());
    return rank(RationalMatrix::from_rows(all));
}

bool is_symmetric(const PteClass& c) { return c.negated() == c; }

bool is_symmetric(const PteInstance& instance) {
    return std::all_of(instance.classes().begin(), instance.classes().end(),
                       [](const PteClass& c) { return is_symmetric(c); });
}

namespace {

bool all_zero(const std::vector<Point>& sums) {
    for (const auto& s : sums)
        for (const auto& x : s)
            if (!x.is_zero()) return false;
    return true;
}

// Depth-first walk over index sets in lexicographic order of their sorted
// index sequences; `sums[c]` holds the running total of class c.
bool search_subsets(const PteInstance& inst, std::size_t next, std::vector<Point>& sums,
                    std::vector<std::size_t>& chosen, std::vector<std::size_t>& found) {
    const std::size_t n = inst.class_size();
    for (std::size_t i = next; i < n; ++i) {
        for (std::size_t c = 0; c < inst.class_count(); ++c)
            for (std::size_t j = 0; j < inst.dimension(); ++j) sums[c][j] += inst[c].points()[i][j];
        chosen.push_back(i);
        if (all_zero(sums)) {
            found = chosen;
            return true;
        }
        if (search_subsets(inst, i + 1, sums, chosen, found)) return true;
        chosen.pop_back();
        for (std::size_t c = 0; c < inst.class_count(); ++c)
            for (std::size_t j = 0; j < inst.dimension(); ++j) sums[c][j] -= inst[c].points()[i][j];
    }
    return false;
}

} // namespace

LinearityResult is_linear(const PteInstance& instance, const LinearityOptions& options) {
    LinearityResult result;
    const std::size_t n = instance.class_size();
    const std::size_t r = instance.dimension();
    std::vector<Point> totals(instance.class_count(), Point(r));
    for (std::size_t c = 0; c < instance.class_count(); ++c)
        for (const auto& p : instance[c].points())
            for (std::size_t j = 0; j < r; ++j) totals[c][j] += p[j];
    if (all_zero(totals)) {
        result.status = LinearityResult::Status::Linear;
        for (std::size_t i = 0; i < n; ++i) result.subset.push_back(i);
        return result;
    }
    if (!options.exhaustive || n > options.exhaustive_limit) {
        result.status = LinearityResult::Status::NotChecked;
        return result;
    }
    std::vector<Point> sums(instance.class_count(), Point(r));
    std::vector<std::size_t> chosen;
    if (search_subsets(instance, 0, sums, chosen, result.subset))
        result.status = LinearityResult::Status::Linear;
    else
        result.status = LinearityResult::Status::NotLinear;
    return result;
}

bool is_ideal(const PteInstance& instance) { return instance.class_size() == instance.degree() + 1; }

} // namespace pte
