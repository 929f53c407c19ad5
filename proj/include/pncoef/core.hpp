#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "pncoef/bigint.hpp"
#include "pncoef/detail/visit.hpp"
#include "pncoef/monomial.hpp"

namespace pncoef {

/// Three-way comparison in the display order.
/// Returns -1 if a comes first, 0 if equal, +1 if b comes first.
/// Throws std::invalid_argument on length mismatch.
int compare(const std::vector<int>& a, const std::vector<int>& b);
int compare(const Monomial& a, const Monomial& b);

/// Coefficient of the monomial with exponent vector a in the expansion of
/// x_1 (x_1+x_2) ... (x_1+...+x_n).
///
/// Primary computation: a product of binomial coefficients, one per position,
/// which never leaves the integers.  Walking j = n..1 with the running suffix
/// sum t = a_{j+1} + ... + a_n, each factor is binom(n-j+1-t, a_j).
Bigint coefficient(const std::vector<int>& a);
Bigint coefficient(const std::vector<int>& a, const BinomialTable& binom);
Bigint coefficient(const Monomial& a);
Bigint coefficient(const Monomial& a, const BinomialTable& binom);

/// Cross-check form: product of the factor sizes available at each position,
/// divided by the factorials of the entries.  The quotient is only integral
/// as a whole, so it is evaluated as one big division at the end.
Bigint coefficient_factorial_form(const std::vector<int>& a);

namespace detail {

/// a must already be a member; binom may be null (direct binomial evaluation).
Bigint coefficient_unchecked(const std::vector<int>& a, const BinomialTable* binom);

template <typename F>
bool enumerate_from(std::vector<int>& a, int pos, int prefix, F& f) {
    const int n = static_cast<int>(a.size());
    if (pos == n - 1) {
        a[static_cast<std::size_t>(pos)] = n - prefix;
        return invoke_visitor(f, a);
    }
    const int hi = n - prefix;
    const int lo = std::max(0, pos + 1 - prefix);
    for (int v = hi; v >= lo; --v) {
        a[static_cast<std::size_t>(pos)] = v;
        if (!enumerate_from(a, pos + 1, prefix + v, f)) return false;
    }
    return true;
}

}  // namespace detail

/// Visits every exponent vector of size n exactly once, in display order
/// (first entries descending).  The visitor receives a reused buffer; it must
/// copy if it wants to keep the vector.  A bool-returning visitor stops the
/// enumeration by returning false.  Returns false iff stopped early.
template <typename F>
bool for_each_monomial(int n, F&& f) {
    if (n < 1) throw std::invalid_argument("for_each_monomial: n must be >= 1");
    std::vector<int> a(static_cast<std::size_t>(n));
    return detail::enumerate_from(a, 0, 0, f);
}

/// Same, restricted to vectors with the given first entry (1 <= first <= n).
/// The buckets for first = n..1 partition the space and concatenate to the
/// display order, which is the splitting contract used by the searches.
template <typename F>
bool for_each_monomial_with_first(int n, int first, F&& f) {
    if (n < 1) throw std::invalid_argument("for_each_monomial_with_first: n must be >= 1");
    if (first < 1 || first > n)
        throw std::out_of_range("for_each_monomial_with_first: first entry out of range");
    std::vector<int> a(static_cast<std::size_t>(n));
    a[0] = first;
    if (n == 1) return detail::invoke_visitor(f, a);
    return detail::enumerate_from(a, 1, first, f);
}

/// All exponent vectors of size n paired with their coefficients, in display
/// order.  Row n has catalan(n) entries.
struct TriangleRow {
    int n;
    std::vector<std::pair<Monomial, Bigint>> entries;
};

TriangleRow triangle_row(int n);

}  // namespace pncoef
