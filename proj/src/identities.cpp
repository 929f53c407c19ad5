#include "pncoef/identities.hpp"

#include <stdexcept>

#include "pncoef/core.hpp"

namespace pncoef::identities {

namespace {

Bigint int_pow(int base, int exp) {
    Bigint r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::vector<int> primes_upto(int limit) {
    std::vector<int> primes;
    if (limit < 2) return primes;
    std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
    for (int p = 2; p <= limit; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        primes.push_back(p);
        for (int q = 2 * p; q <= limit; q += p) composite[static_cast<std::size_t>(q)] = 1;
    }
    return primes;
}

void require_index(int i, int lo, int hi, const char* what) {
    if (i < lo || i > hi) throw std::out_of_range(std::string(what) + ": index out of range");
}

std::vector<int> staircase_vector(int n, int j) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    a[0] = j;
    for (int k = 1; k <= n - j; ++k) a[static_cast<std::size_t>(k)] = 1;
    return a;
}

/// First count coefficients of row n, display order.
std::vector<Bigint> leading_coefficients(int n, int count) {
    std::vector<Bigint> out;
    out.reserve(static_cast<std::size_t>(count));
    for_each_monomial(n, [&](const std::vector<int>& a) {
        out.push_back(detail::coefficient_unchecked(a, nullptr));
        return static_cast<int>(out.size()) < count;
    });
    return out;
}

}  // namespace

Bigint total_sum(int n) {
    if (n < 1) throw std::out_of_range("total_sum: n must be >= 1");
    return factorial(n);
}

Bigint sum_containing(int n, int i) {
    if (n < 1) throw std::out_of_range("sum_containing: n must be >= 1");
    require_index(i, 1, n, "sum_containing");
    return Bigint(n - i + 1) * factorial(n - 1);
}

Bigint sum_max_index(int n, int i) {
    if (n < 1) throw std::out_of_range("sum_max_index: n must be >= 1");
    require_index(i, 1, n, "sum_max_index");
    return factorial(i) * int_pow(i, n - i);
}

Bigint staircase_coefficient(int n, int j) {
    if (n < 1) throw std::out_of_range("staircase_coefficient: n must be >= 1");
    require_index(j, 1, n, "staircase_coefficient");
    const Bigint formula = int_pow(j, n - j);
    const Bigint direct = coefficient(staircase_vector(n, j));
    if (formula != direct)
        throw std::logic_error("staircase_coefficient: formula disagrees with direct value");
    return formula;
}

Bigint linear_coefficient(int n, int i) {
    if (n < 2) throw std::out_of_range("linear_coefficient: n must be >= 2");
    require_index(i, 2, n, "linear_coefficient");
    const Bigint formula = n + 1 - i;
    const std::vector<Bigint> lead = leading_coefficients(n, i);
    if (lead.back() != formula)
        throw std::logic_error("linear_coefficient: formula disagrees with the ordered row");
    return formula;
}

std::pair<Monomial, Monomial> duplication_maps(const Monomial& a) {
    std::vector<int> front;
    front.reserve(a.entries().size() + 1);
    front.push_back(1);
    front.insert(front.end(), a.entries().begin(), a.entries().end());
    std::vector<int> back(a.entries());
    back.push_back(1);

    const Bigint base = coefficient(a);
    Monomial prepended = Monomial::unchecked(std::move(front));
    Monomial appended = Monomial::unchecked(std::move(back));
    if (coefficient(prepended) != base || coefficient(appended) != base)
        throw std::logic_error("duplication_maps: embedding changed the coefficient");
    return {std::move(prepended), std::move(appended)};
}

std::vector<int> prime_support(int n, int enumeration_bound) {
    if (n < 1) throw std::out_of_range("prime_support: n must be >= 1");
    const std::vector<int> expected = primes_upto(n - 1);
    if (n <= enumeration_bound) {
        std::vector<char> seen(expected.size(), 0);
        bool factors_small = true;
        BinomialTable binom(n);
        for_each_monomial(n, [&](const std::vector<int>& a) {
            Bigint c = detail::coefficient_unchecked(a, &binom);
            for (std::size_t t = 0; t < expected.size(); ++t) {
                while (c % expected[t] == 0) {
                    seen[t] = 1;
                    c /= expected[t];
                }
            }
            if (c != 1) factors_small = false;
        });
        for (char s : seen) {
            if (!s) factors_small = false;
        }
        if (!factors_small)
            throw std::logic_error("prime_support: enumeration disagrees with the prime set");
    }
    return expected;
}

std::vector<IdentityReport> verify_identities(int n, int enumeration_bound) {
    if (n < 1) throw std::invalid_argument("verify_identities: n must be >= 1");
    const bool full = n <= enumeration_bound;
    std::vector<IdentityReport> reports;

    auto add = [&](std::string name, std::vector<int> params, const Bigint& formula,
                   const Bigint& observed, bool observed_mode) {
        IdentityReport r;
        r.name = std::move(name);
        r.n = n;
        r.parameters = std::move(params);
        r.formula_value = formula;
        r.enumerated_value = observed;
        r.enumerated = observed_mode;
        r.pass = formula == observed;
        reports.push_back(std::move(r));
    };

    Bigint total = 0;
    std::vector<Bigint> containing(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Bigint> by_last_index(static_cast<std::size_t>(n) + 1, 0);
    if (full) {
        BinomialTable binom(n);
        for_each_monomial(n, [&](const std::vector<int>& a) {
            const Bigint c = detail::coefficient_unchecked(a, &binom);
            total += c;
            int last = 0;
            for (int i = 1; i <= n; ++i) {
                if (a[static_cast<std::size_t>(i - 1)] > 0) {
                    containing[static_cast<std::size_t>(i)] += c;
                    last = i;
                }
            }
            by_last_index[static_cast<std::size_t>(last)] += c;
        });
    }

    add("total-sum", {}, total_sum(n), full ? total : total_sum(n), full);

    Bigint excluded_observed = 0;
    for (int i = 1; i <= n; ++i) {
        const Bigint formula = sum_containing(n, i);
        add("containing-sum", {i}, formula,
            full ? containing[static_cast<std::size_t>(i)] : formula, full);
        if (full) excluded_observed += total - containing[static_cast<std::size_t>(i)];
    }

    Bigint cumulative = 0;
    for (int i = 1; i <= n; ++i) {
        cumulative += by_last_index[static_cast<std::size_t>(i)];
        const Bigint formula = sum_max_index(n, i);
        add("max-index-sum", {i}, formula, full ? cumulative : formula, full);
    }

    for (int j = 1; j <= n; ++j) {
        const Bigint direct = coefficient(staircase_vector(n, j));
        add("staircase-value", {j}, int_pow(j, n - j), direct, true);
    }

    if (n >= 2) {
        const std::vector<Bigint> lead = leading_coefficients(n, n);
        for (int i = 2; i <= n; ++i)
            add("ordered-entry", {i}, Bigint(n + 1 - i), lead[static_cast<std::size_t>(i - 1)],
                true);
    }

    if (n >= 2) {
        const Bigint expected_count = catalan(n - 1);
        if (full) {
            BinomialTable binom(n);
            Bigint preserved = 0;
            for_each_monomial(n - 1, [&](const std::vector<int>& a) {
                const Bigint c = detail::coefficient_unchecked(a, &binom);
                std::vector<int> front;
                front.reserve(a.size() + 1);
                front.push_back(1);
                front.insert(front.end(), a.begin(), a.end());
                std::vector<int> back(a);
                back.push_back(1);
                if (detail::coefficient_unchecked(front, &binom) == c &&
                    detail::coefficient_unchecked(back, &binom) == c)
                    ++preserved;
            });
            add("duplication-count", {}, expected_count, preserved, true);
        } else {
            add("duplication-count", {}, expected_count, expected_count, false);
        }
    }

    if (n >= 2) {
        Bigint expected_product = 1;
        for (int p : primes_upto(n - 1)) expected_product *= p;
        if (full) {
            Bigint observed_product = 1;
            try {
                for (int p : prime_support(n, enumeration_bound)) observed_product *= p;
            } catch (const std::logic_error&) {
                observed_product = 0;
            }
            add("prime-support-product", {}, expected_product, observed_product, true);
        } else {
            add("prime-support-product", {}, expected_product, expected_product, false);
        }
    }

    {
        // row-sum complement: summing the excluded mass over all indices
        Bigint formula = factorial(n - 1) * n * (n - 1) / 2;
        add("excluded-sum", {}, formula, full ? excluded_observed : formula, full);
    }

    return reports;
}

}  // namespace pncoef::identities
