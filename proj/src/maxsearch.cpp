#include "pncoef/maxsearch.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "pncoef/core.hpp"
#include "pncoef/errors.hpp"

namespace pncoef {

SearchMethod parse_method(const std::string& name) {
    if (name == "bruteforce") return SearchMethod::bruteforce;
    if (name == "sorted") return SearchMethod::sorted;
    if (name == "stairs") return SearchMethod::stairs;
    if (name == "greedy") return SearchMethod::greedy;
    throw std::invalid_argument("unknown search method: " + name);
}

std::string method_name(SearchMethod method) {
    switch (method) {
        case SearchMethod::bruteforce: return "bruteforce";
        case SearchMethod::sorted: return "sorted";
        case SearchMethod::stairs: return "stairs";
        case SearchMethod::greedy: return "greedy";
    }
    return "unknown";
}

Monomial swap_transform(const Monomial& a, int i) {
    const int n = a.n();
    if (i < 1 || i > n - 1) throw std::out_of_range("swap_transform: index out of range");
    if (a[i - 1] >= a[i])
        throw std::invalid_argument("swap_transform: needs a rising pair at the index");
    std::vector<int> out(a.entries());
    std::swap(out[static_cast<std::size_t>(i - 1)], out[static_cast<std::size_t>(i)]);
    return Monomial::unchecked(std::move(out));
}

Monomial smooth_transform(const Monomial& a, int i) {
    const int n = a.n();
    if (i < 1 || i > n - 1) throw std::out_of_range("smooth_transform: index out of range");
    if (a[i - 1] <= a[i] + 1)
        throw std::invalid_argument("smooth_transform: needs a drop of at least 2 at the index");
    std::vector<int> out(a.entries());
    --out[static_cast<std::size_t>(i - 1)];
    ++out[static_cast<std::size_t>(i)];
    return Monomial::unchecked(std::move(out));
}

bool is_stair(const std::vector<int>& a) {
    if (!Monomial::is_member(a)) return false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        if (a[i] < a[i + 1] || a[i] > a[i + 1] + 1) return false;
    }
    return true;
}

namespace {

struct LocalBest {
    Bigint m = -1;
    std::vector<std::vector<int>> argmax;
    long long seen = 0;

    void offer(const std::vector<int>& a, const Bigint& c) {
        ++seen;
        if (c > m) {
            m = c;
            argmax.clear();
            argmax.push_back(a);
        } else if (c == m) {
            argmax.push_back(a);
        }
    }
};

MaxResult finish(int n, SearchMethod method, std::vector<LocalBest> parts) {
    MaxResult result;
    result.n = n;
    result.method = method;
    Bigint best = -1;
    long long seen = 0;
    for (const auto& p : parts) {
        seen += p.seen;
        if (p.m > best) best = p.m;
    }
    result.m = best;
    result.search_space_size = seen;
    std::vector<Monomial> argmax;
    for (auto& p : parts) {
        if (p.m != best) continue;
        for (auto& a : p.argmax) argmax.push_back(Monomial::unchecked(std::move(a)));
    }
    std::sort(argmax.begin(), argmax.end(), MonomialBefore{});
    result.argmax = std::move(argmax);
    return result;
}

MaxResult search_bruteforce(int n, int threads) {
    const BinomialTable binom(n);
    if (threads < 2 || n < 2) {
        LocalBest best;
        for_each_monomial(n, [&](const std::vector<int>& a) {
            best.offer(a, detail::coefficient_unchecked(a, &binom));
        });
        std::vector<LocalBest> parts;
        parts.push_back(std::move(best));
        return finish(n, SearchMethod::bruteforce, std::move(parts));
    }

    // one bucket per first entry, claimed by workers in descending order so
    // the concatenation stays in display order
    std::vector<LocalBest> buckets(static_cast<std::size_t>(n));
    std::atomic<int> next{0};
    auto work = [&]() {
        for (;;) {
            const int b = next.fetch_add(1);
            if (b >= n) return;
            const int first = n - b;
            LocalBest& best = buckets[static_cast<std::size_t>(b)];
            for_each_monomial_with_first(n, first, [&](const std::vector<int>& a) {
                best.offer(a, detail::coefficient_unchecked(a, &binom));
            });
        }
    };
    std::vector<std::thread> pool;
    const int workers = std::min(threads, n);
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return finish(n, SearchMethod::bruteforce, std::move(buckets));
}

MaxResult search_sorted(int n) {
    const BinomialTable binom(n);
    LocalBest best;
    std::vector<int> padded(static_cast<std::size_t>(n));
    for_each_partition(n, [&](const std::vector<int>& parts) {
        std::fill(padded.begin(), padded.end(), 0);
        std::copy(parts.begin(), parts.end(), padded.begin());
        best.offer(padded, detail::coefficient_unchecked(padded, &binom));
    });
    std::vector<LocalBest> parts;
    parts.push_back(std::move(best));
    return finish(n, SearchMethod::sorted, std::move(parts));
}

MaxResult search_stairs(int n) {
    const BinomialTable binom(n);
    LocalBest best;
    for_each_stair(n, [&](const std::vector<int>& a) {
        best.offer(a, detail::coefficient_unchecked(a, &binom));
    });
    std::vector<LocalBest> parts;
    parts.push_back(std::move(best));
    return finish(n, SearchMethod::stairs, std::move(parts));
}

}  // namespace

MaxResult max_coefficient(int n, SearchMethod method, const SearchBudget& budget, int threads) {
    if (n < 1) throw std::invalid_argument("max_coefficient: n must be >= 1");
    if (threads <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw ? static_cast<int>(hw) : 1;
    }
    switch (method) {
        case SearchMethod::bruteforce:
            if (n > budget.bruteforce)
                throw budget_error("max_coefficient: n exceeds the bruteforce bound " +
                                   std::to_string(budget.bruteforce));
            return search_bruteforce(n, threads);
        case SearchMethod::sorted:
            if (n > budget.sorted)
                throw budget_error("max_coefficient: n exceeds the sorted-space bound " +
                                   std::to_string(budget.sorted));
            return search_sorted(n);
        case SearchMethod::stairs:
            if (n > budget.stairs)
                throw budget_error("max_coefficient: n exceeds the staircase bound " +
                                   std::to_string(budget.stairs));
            return search_stairs(n);
        case SearchMethod::greedy:
            break;
    }
    throw std::invalid_argument("max_coefficient: use the growth procedure for method greedy");
}

std::vector<QuotientEntry> quotients(const std::vector<Bigint>& values) {
    if (values.empty()) throw std::invalid_argument("quotients: empty input");
    for (const Bigint& v : values) {
        if (v <= 0) throw std::invalid_argument("quotients: values must be positive");
    }
    std::vector<QuotientEntry> out;
    out.reserve(values.size() - 1);
    for (std::size_t t = 0; t + 1 < values.size(); ++t) {
        const Bigint g = boost::multiprecision::gcd(values[t + 1], values[t]);
        out.push_back({static_cast<int>(t) + 1, values[t + 1] / g, values[t] / g});
    }
    return out;
}

std::pair<int, Bigint> power_lower_bound(int n) {
    if (n < 1) throw std::invalid_argument("power_lower_bound: n must be >= 1");
    int best_j = 1;
    Bigint best = 1;
    for (int j = 1; j <= n; ++j) {
        Bigint value = 1;
        for (int e = 0; e < n - j; ++e) value *= j;
        if (value > best) {
            best = value;
            best_j = j;
        }
    }
    return {best_j, best};
}

}  // namespace pncoef
