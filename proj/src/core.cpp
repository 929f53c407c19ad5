#include "pncoef/core.hpp"

#include <stdexcept>

namespace pncoef {

int compare(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compare: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

int compare(const Monomial& a, const Monomial& b) {
    return compare(a.entries(), b.entries());
}

namespace detail {

Bigint coefficient_unchecked(const std::vector<int>& a, const BinomialTable* binom) {
    const int n = static_cast<int>(a.size());
    Bigint c = 1;
    int suffix = 0;
    for (int j = n; j >= 1; --j) {
        const int aj = a[static_cast<std::size_t>(j - 1)];
        const int slots = n - j + 1 - suffix;
        if (binom)
            c *= (*binom)(slots, aj);
        else
            c *= binomial(slots, aj);
        suffix += aj;
    }
    return c;
}

}  // namespace detail

Bigint coefficient(const std::vector<int>& a) {
    if (!Monomial::is_member(a)) throw std::invalid_argument("coefficient: not a member vector");
    return detail::coefficient_unchecked(a, nullptr);
}

Bigint coefficient(const std::vector<int>& a, const BinomialTable& binom) {
    if (!Monomial::is_member(a)) throw std::invalid_argument("coefficient: not a member vector");
    return detail::coefficient_unchecked(a, &binom);
}

Bigint coefficient(const Monomial& a) {
    return detail::coefficient_unchecked(a.entries(), nullptr);
}

Bigint coefficient(const Monomial& a, const BinomialTable& binom) {
    return detail::coefficient_unchecked(a.entries(), &binom);
}

Bigint coefficient_factorial_form(const std::vector<int>& a) {
    if (!Monomial::is_member(a))
        throw std::invalid_argument("coefficient_factorial_form: not a member vector");
    const int n = static_cast<int>(a.size());
    Bigint numerator = 1;
    Bigint denominator = 1;
    int suffix = 0;
    for (int k = n - 1; k >= 1; --k) {
        suffix += a[static_cast<std::size_t>(k)];
        numerator *= n - k + 1 - suffix;
        denominator *= factorial(a[static_cast<std::size_t>(k - 1)]);
    }
    return numerator / denominator;
}

TriangleRow triangle_row(int n) {
    TriangleRow row;
    row.n = n;
    BinomialTable binom(n);
    for_each_monomial(n, [&](const std::vector<int>& a) {
        row.entries.emplace_back(Monomial::unchecked(a),
                                 detail::coefficient_unchecked(a, &binom));
    });
    return row;
}

}  // namespace pncoef
