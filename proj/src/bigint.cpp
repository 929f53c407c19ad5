#include "pncoef/bigint.hpp"

#include <stdexcept>

namespace pncoef {

Bigint factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
    Bigint r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Bigint binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Bigint r = 1;
    // r stays integral at every step: after the i-th iteration r = binom(n-k+i, i).
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Bigint catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
    return binomial(2 * n, n) / (n + 1);
}

BinomialTable::BinomialTable(int max_n) : max_n_(max_n), zero_(0) {
    if (max_n < 0) throw std::invalid_argument("BinomialTable: max_n must be >= 0");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        auto& row = rows_[static_cast<std::size_t>(n)];
        row.resize(static_cast<std::size_t>(n) + 1);
        row[0] = row[static_cast<std::size_t>(n)] = 1;
        for (int k = 1; k < n; ++k)
            row[static_cast<std::size_t>(k)] =
                rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
                rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
    }
}

const Bigint& BinomialTable::operator()(int n, int k) const {
    if (n < 0 || n > max_n_) throw std::out_of_range("BinomialTable: n out of range");
    if (k < 0 || k > n) return zero_;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace pncoef
