#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pncoef/bigint.hpp"
#include "pncoef/monomial.hpp"
#include "pncoef/partitions.hpp"

namespace pncoef {

/// Search spaces for the maximal coefficient, from largest to smallest:
/// every exponent vector, only nonincreasing ones (padded partitions), only
/// staircase ones (nonincreasing with consecutive drops <= 1).  greedy tags
/// results produced by the growth procedure instead of a search.
enum class SearchMethod { bruteforce, sorted, stairs, greedy };

SearchMethod parse_method(const std::string& name);
std::string method_name(SearchMethod method);

struct SearchBudget {
    int bruteforce = 14;
    int sorted = 60;
    int stairs = 100;
};

struct MaxResult {
    int n = 0;
    Bigint m;
    std::vector<Monomial> argmax;  // every maximizer in the space, display order
    SearchMethod method = SearchMethod::bruteforce;
    Bigint search_space_size;     // members actually enumerated
};

/// Exchanges entries i and i+1 (1-based) when a_i < a_{i+1}.  The result is a
/// member and its coefficient is strictly larger.
Monomial swap_transform(const Monomial& a, int i);

/// Moves one unit right, a_i -> a_i - 1 and a_{i+1} -> a_{i+1} + 1, when
/// a_i > a_{i+1} + 1.  The result is a member and its coefficient does not
/// decrease.
Monomial smooth_transform(const Monomial& a, int i);

/// Whether the entries form a staircase member: nonincreasing, consecutive
/// drops at most 1, and exponent-vector membership.
bool is_stair(const std::vector<int>& a);

/// Visits every staircase member of size n exactly once, produced by
/// conjugating the distinct-part partitions of n and padding with zeros.
/// Visit order follows the partition enumeration, not the display order.
template <typename F>
bool for_each_stair(int n, F&& f) {
    if (n < 1) throw std::invalid_argument("for_each_stair: n must be >= 1");
    std::vector<int> padded(static_cast<std::size_t>(n));
    return for_each_distinct_partition(n, [&](const std::vector<int>& parts) {
        const Partition conj = conjugate(parts);
        std::fill(padded.begin(), padded.end(), 0);
        std::copy(conj.begin(), conj.end(), padded.begin());
        return detail::invoke_visitor(f, padded);
    });
}

/// Maximal coefficient over the chosen space, with every attaining monomial.
/// threads <= 0 means use the machine's parallelism (bruteforce splits by
/// first entry; the reduced spaces are cheap enough sequentially).
MaxResult max_coefficient(int n, SearchMethod method, const SearchBudget& budget = {},
                          int threads = 0);

/// Consecutive quotient in lowest terms: entry n holds value(n+1)/value(n).
struct QuotientEntry {
    int n = 0;
    Bigint numerator;
    Bigint denominator;
};

std::vector<QuotientEntry> quotients(const std::vector<Bigint>& values);

/// Largest pure power j^(n-j) over 1 <= j <= n, found by direct scan;
/// returns (smallest maximizing j, value).  The value never exceeds the
/// maximal coefficient of row n.
std::pair<int, Bigint> power_lower_bound(int n);

}  // namespace pncoef
