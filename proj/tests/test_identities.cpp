#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "pncoef/core.hpp"
#include "pncoef/identities.hpp"

using pncoef::Bigint;
using pncoef::Monomial;
namespace ids = pncoef::identities;

TEST_CASE("closed forms at sampled points") {
    CHECK(ids::total_sum(1) == 1);
    CHECK(ids::total_sum(4) == 24);
    CHECK(ids::total_sum(12) == 479001600);

    CHECK(ids::sum_containing(5, 1) == 120);
    CHECK(ids::sum_containing(5, 2) == 96);
    CHECK(ids::sum_containing(5, 5) == 24);
    CHECK(ids::sum_containing(6, 6) == 120);

    CHECK(ids::sum_max_index(4, 4) == 24);
    CHECK(ids::sum_max_index(5, 2) == 16);
    CHECK(ids::sum_max_index(7, 3) == 486);
    CHECK(ids::sum_max_index(6, 1) == 1);

    CHECK(ids::staircase_coefficient(5, 5) == 1);
    CHECK(ids::staircase_coefficient(9, 3) == 729);
    CHECK(ids::staircase_coefficient(7, 2) == 32);
    CHECK(ids::staircase_coefficient(4, 1) == 1);

    CHECK(ids::linear_coefficient(4, 2) == 3);
    CHECK(ids::linear_coefficient(5, 3) == 3);
    CHECK(ids::linear_coefficient(5, 5) == 1);

    CHECK_THROWS_AS(ids::sum_containing(5, 0), std::out_of_range);
    CHECK_THROWS_AS(ids::sum_containing(5, 6), std::out_of_range);
    CHECK_THROWS_AS(ids::sum_max_index(5, 0), std::out_of_range);
    CHECK_THROWS_AS(ids::staircase_coefficient(5, 6), std::out_of_range);
    CHECK_THROWS_AS(ids::linear_coefficient(5, 1), std::out_of_range);
    CHECK_THROWS_AS(ids::linear_coefficient(0, 2), std::out_of_range);
}

TEST_CASE("containing sums observed directly") {
    for (int n = 1; n <= 8; ++n)
        for (int i = 1; i <= n; ++i) {
            Bigint observed = 0;
            pncoef::for_each_monomial(n, [&](const std::vector<int>& a) {
                if (a[static_cast<std::size_t>(i - 1)] > 0)
                    observed += pncoef::coefficient(a);
            });
            CHECK(observed == ids::sum_containing(n, i));
        }
}

TEST_CASE("max index sums observed directly") {
    for (int n = 1; n <= 8; ++n)
        for (int i = 1; i <= n; ++i) {
            Bigint observed = 0;
            pncoef::for_each_monomial(n, [&](const std::vector<int>& a) {
                int last = 0;
                for (int k = 0; k < n; ++k)
                    if (a[static_cast<std::size_t>(k)] > 0) last = k + 1;
                if (last <= i) observed += pncoef::coefficient(a);
            });
            CHECK(observed == ids::sum_max_index(n, i));
        }
}

TEST_CASE("duplication preserves the coefficient") {
    auto [front1, back1] = ids::duplication_maps(Monomial({1}));
    CHECK(front1.entries() == std::vector<int>{1, 1});
    CHECK(back1.entries() == std::vector<int>{1, 1});

    auto [front2, back2] = ids::duplication_maps(Monomial({2, 1, 0}));
    CHECK(front2.entries() == std::vector<int>{1, 2, 1, 0});
    CHECK(back2.entries() == std::vector<int>{2, 1, 0, 1});
    CHECK(pncoef::coefficient(front2) == 2);
    CHECK(pncoef::coefficient(back2) == 2);

    auto [front3, back3] = ids::duplication_maps(Monomial({2, 2, 1, 0, 0}));
    CHECK(pncoef::coefficient(front3) == pncoef::coefficient(Monomial({2, 2, 1, 0, 0})));
    CHECK(pncoef::coefficient(back3.entries()) == 9);

    for (int n = 1; n <= 8; ++n)
        pncoef::for_each_monomial(n, [&](const std::vector<int>& a) {
            auto c = pncoef::coefficient(a);
            auto [front, back] = ids::duplication_maps(Monomial(a));
            CHECK(pncoef::coefficient(front) == c);
            CHECK(pncoef::coefficient(back) == c);
        });
}

TEST_CASE("prime support") {
    CHECK(ids::prime_support(1).empty());
    CHECK(ids::prime_support(2).empty());
    CHECK(ids::prime_support(3) == std::vector<int>{2});
    CHECK(ids::prime_support(4) == std::vector<int>{2, 3});
    CHECK(ids::prime_support(8) == std::vector<int>{2, 3, 5, 7});
    CHECK(ids::prime_support(12) == std::vector<int>{2, 3, 5, 7, 11});
    // Beyond the enumeration bound only the sieve is consulted.
    CHECK(ids::prime_support(20, 10) == std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19});
}

TEST_CASE("identity suite passes wholesale") {
    for (int n = 1; n <= 10; ++n) {
        auto reports = ids::verify_identities(n);
        CHECK(!reports.empty());
        for (const auto& r : reports) {
            INFO(r.name, " n=", r.n);
            CHECK(r.pass);
            CHECK(r.enumerated);
            CHECK(r.formula_value == r.enumerated_value);
        }
    }
}

TEST_CASE("identity suite degrades to formula-only beyond the bound") {
    auto reports = ids::verify_identities(5, 3);
    bool saw_formula_only = false;
    for (const auto& r : reports) {
        CHECK(r.pass);
        if (!r.enumerated) saw_formula_only = true;
    }
    CHECK(saw_formula_only);
}
