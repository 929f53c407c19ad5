#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace pncoef {

/// Exact arbitrary-precision integer. Every coefficient path uses this type;
/// the values reached by the sequence generators exceed 10^120.
using Bigint = boost::multiprecision::cpp_int;

Bigint factorial(int n);

/// Exact binomial coefficient; 0 when k < 0 or k > n.
Bigint binomial(int n, int k);

/// Catalan number C_n = binom(2n, n) / (n + 1), exact. Defined for n >= 0.
Bigint catalan(int n);

/// Precomputed Pascal triangle. Immutable after construction, so a single
/// table may be shared across search threads.
class BinomialTable {
public:
    explicit BinomialTable(int max_n);

    /// binom(n, k) for 0 <= n <= max_n; 0 outside 0 <= k <= n.
    const Bigint& operator()(int n, int k) const;

    int max_n() const { return max_n_; }

private:
    int max_n_;
    std::vector<std::vector<Bigint>> rows_;
    Bigint zero_;
};

}  // namespace pncoef
