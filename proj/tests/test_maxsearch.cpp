#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "pncoef/core.hpp"
#include "pncoef/errors.hpp"
#include "pncoef/maxsearch.hpp"
#include "pncoef/partitions.hpp"
#include "testutil.hpp"

using pncoef::Bigint;
using pncoef::Monomial;
using pncoef::SearchBudget;
using pncoef::SearchMethod;

TEST_CASE("swap transform raises the coefficient strictly") {
    auto r1 = pncoef::swap_transform(Monomial({1, 2, 0}), 1);
    CHECK(r1.entries() == std::vector<int>{2, 1, 0});
    CHECK(pncoef::coefficient(r1) == 2);
    CHECK(pncoef::coefficient({1, 2, 0}) == 1);

    CHECK(pncoef::swap_transform(Monomial({2, 0, 1, 1}), 2).entries() ==
          std::vector<int>{2, 1, 0, 1});
    CHECK(pncoef::swap_transform(Monomial({1, 1, 2, 0}), 2).entries() ==
          std::vector<int>{1, 2, 1, 0});

    CHECK_THROWS_AS(pncoef::swap_transform(Monomial({2, 1, 0}), 1), std::invalid_argument);
    CHECK_THROWS_AS(pncoef::swap_transform(Monomial({1, 1, 1}), 2), std::invalid_argument);
    CHECK_THROWS_AS(pncoef::swap_transform(Monomial({1, 2, 0}), 0), std::out_of_range);
    CHECK_THROWS_AS(pncoef::swap_transform(Monomial({1, 2, 0}), 3), std::out_of_range);

    for (int n = 2; n <= 8; ++n)
        pncoef::for_each_monomial(n, [&](const std::vector<int>& a) {
            for (int i = 1; i < n; ++i) {
                if (a[static_cast<std::size_t>(i - 1)] >= a[static_cast<std::size_t>(i)])
                    continue;
                auto b = pncoef::swap_transform(Monomial::unchecked(a), i);
                CHECK(Monomial::is_member(b.entries()));
                CHECK(pncoef::coefficient(b) > pncoef::coefficient(a));
            }
        });
}

TEST_CASE("smoothing transform never lowers the coefficient") {
    CHECK(pncoef::smooth_transform(Monomial({3, 0, 0}), 1).entries() ==
          std::vector<int>{2, 1, 0});
    CHECK(pncoef::smooth_transform(Monomial({4, 0, 0, 0}), 1).entries() ==
          std::vector<int>{3, 1, 0, 0});

    auto s = pncoef::smooth_transform(Monomial({2, 0, 1}), 1);
    CHECK(s.entries() == std::vector<int>{1, 1, 1});
    CHECK(pncoef::coefficient(s) == pncoef::coefficient({2, 0, 1}));

    CHECK_THROWS_AS(pncoef::smooth_transform(Monomial({1, 1, 1}), 1), std::invalid_argument);
    CHECK_THROWS_AS(pncoef::smooth_transform(Monomial({2, 1, 0}), 1), std::invalid_argument);
    CHECK_THROWS_AS(pncoef::smooth_transform(Monomial({3, 0, 0}), 3), std::out_of_range);

    for (int n = 2; n <= 8; ++n)
        pncoef::for_each_monomial(n, [&](const std::vector<int>& a) {
            for (int i = 1; i < n; ++i) {
                if (a[static_cast<std::size_t>(i - 1)] <= a[static_cast<std::size_t>(i)] + 1)
                    continue;
                auto b = pncoef::smooth_transform(Monomial::unchecked(a), i);
                CHECK(Monomial::is_member(b.entries()));
                CHECK(pncoef::coefficient(b) >= pncoef::coefficient(a));
            }
        });
}

TEST_CASE("partitions and conjugation") {
    CHECK(pncoef::conjugate({3, 2, 1}) == std::vector<int>{3, 2, 1});
    CHECK(pncoef::conjugate({4, 2}) == std::vector<int>{2, 2, 1, 1});
    CHECK(pncoef::conjugate({5}) == std::vector<int>{1, 1, 1, 1, 1});
    CHECK_THROWS_AS(pncoef::conjugate({1, 2}), std::invalid_argument);

    int count = 0;
    pncoef::for_each_partition(6, [&](const pncoef::Partition& p) {
        CHECK(pncoef::is_partition(p));
        CHECK(pncoef::conjugate(pncoef::conjugate(p)) == p);
        ++count;
    });
    CHECK(count == 11);
    CHECK(pncoef::partition_count(6) == 11);
    CHECK(pncoef::partition_count(60) == Bigint(966467));

    int distinct = 0;
    pncoef::for_each_distinct_partition(6, [&](const pncoef::Partition& p) {
        CHECK(pncoef::has_distinct_parts(p));
        ++distinct;
    });
    CHECK(distinct == 4);
    CHECK(pncoef::distinct_partition_count(6) == 4);
    CHECK(pncoef::distinct_partition_count(100) == Bigint(444793));
}

TEST_CASE("stair enumeration") {
    CHECK(pncoef::is_stair({2, 1, 0}));
    CHECK(pncoef::is_stair({1, 1, 1}));
    CHECK(pncoef::is_stair({3, 2, 1, 1, 0, 0, 0}));
    CHECK_FALSE(pncoef::is_stair({3, 0, 0}));      // drop of 3
    CHECK_FALSE(pncoef::is_stair({1, 2, 0}));      // increases
    CHECK_FALSE(pncoef::is_stair({2, 2, 0}));      // drop of 2

    // Visit order follows the distinct-part partition enumeration:
    // 3 conjugates to (1,1,1), then 2+1 conjugates to (2,1).
    std::vector<std::vector<int>> stairs3;
    pncoef::for_each_stair(3, [&](const std::vector<int>& a) { stairs3.push_back(a); });
    CHECK(stairs3 == std::vector<std::vector<int>>{{1, 1, 1}, {2, 1, 0}});

    std::vector<std::vector<int>> stairs1;
    pncoef::for_each_stair(1, [&](const std::vector<int>& a) { stairs1.push_back(a); });
    CHECK(stairs1 == std::vector<std::vector<int>>{{1}});

    for (int n = 1; n <= 40; ++n) {
        Bigint count = 0;
        bool all_stairs = true;
        pncoef::for_each_stair(n, [&](const std::vector<int>& a) {
            if (!pncoef::is_stair(a)) all_stairs = false;
            ++count;
        });
        CHECK(all_stairs);
        CHECK(count == pncoef::distinct_partition_count(n));
    }
}

TEST_CASE("the three search spaces agree on the maximum") {
    for (int n = 1; n <= 12; ++n) {
        auto brute = pncoef::max_coefficient(n, SearchMethod::bruteforce);
        auto sorted = pncoef::max_coefficient(n, SearchMethod::sorted);
        auto stairs = pncoef::max_coefficient(n, SearchMethod::stairs);
        CHECK(brute.m == sorted.m);
        CHECK(brute.m == stairs.m);
        CHECK(brute.search_space_size == pncoef::catalan(n));
        CHECK(sorted.search_space_size == pncoef::partition_count(n));
        CHECK(stairs.search_space_size == pncoef::distinct_partition_count(n));
        CHECK(!stairs.argmax.empty());
        for (const auto& m : stairs.argmax)
            CHECK(pncoef::coefficient(m) == stairs.m);
    }
}

TEST_CASE("argmax lists are exact and ordered") {
    auto five = pncoef::max_coefficient(5, SearchMethod::bruteforce);
    CHECK(five.m == 9);
    REQUIRE(five.argmax.size() == 2);
    CHECK(five.argmax[0].entries() == std::vector<int>{3, 1, 1, 0, 0});
    CHECK(five.argmax[1].entries() == std::vector<int>{2, 2, 1, 0, 0});

    auto two = pncoef::max_coefficient(2, SearchMethod::bruteforce);
    CHECK(two.m == 1);
    REQUIRE(two.argmax.size() == 2);
    CHECK(two.argmax[0].entries() == std::vector<int>{2, 0});
    CHECK(two.argmax[1].entries() == std::vector<int>{1, 1});

    auto seven = pncoef::max_coefficient(7, SearchMethod::stairs);
    CHECK(seven.m == 96);
    bool found = false;
    for (const auto& m : seven.argmax)
        if (m.entries() == std::vector<int>{3, 2, 1, 1, 0, 0, 0}) found = true;
    CHECK(found);

    std::set<std::vector<int>> expected12;
    for (const auto& [n, mono] : testutil::read_indexed_vectors("max_monomials.txt"))
        if (n == 12) expected12.insert(mono);
    for (const auto& [n, mono] : testutil::read_indexed_vectors("extra_max_monomials.txt"))
        if (n == 12) expected12.insert(mono);
    REQUIRE(expected12.size() == 3);
    auto twelve = pncoef::max_coefficient(12, SearchMethod::bruteforce);
    std::set<std::vector<int>> twelve_set;
    for (const auto& m : twelve.argmax) twelve_set.insert(m.entries());
    CHECK(twelve_set == expected12);

    // Threaded bruteforce must agree with the single-threaded pass.
    auto threaded = pncoef::max_coefficient(12, SearchMethod::bruteforce, SearchBudget{}, 4);
    CHECK(threaded.m == twelve.m);
    REQUIRE(threaded.argmax.size() == twelve.argmax.size());
    for (std::size_t i = 0; i < threaded.argmax.size(); ++i)
        CHECK(threaded.argmax[i] == twelve.argmax[i]);
}

TEST_CASE("known maxima against frozen data") {
    auto expected = testutil::read_indexed_values("a349404_values.txt");
    for (int n = 1; n <= 20; ++n) {
        auto res = pncoef::max_coefficient(n, SearchMethod::stairs);
        CHECK(res.m == expected.at(n));
    }
}

TEST_CASE("budgets turn into budget errors") {
    SearchBudget tight;
    tight.bruteforce = 5;
    tight.sorted = 6;
    tight.stairs = 7;
    CHECK_NOTHROW(pncoef::max_coefficient(5, SearchMethod::bruteforce, tight));
    CHECK_THROWS_AS(pncoef::max_coefficient(6, SearchMethod::bruteforce, tight),
                    pncoef::budget_error);
    CHECK_THROWS_AS(pncoef::max_coefficient(7, SearchMethod::sorted, tight),
                    pncoef::budget_error);
    CHECK_THROWS_AS(pncoef::max_coefficient(8, SearchMethod::stairs, tight),
                    pncoef::budget_error);
    CHECK_THROWS_AS(pncoef::max_coefficient(0, SearchMethod::stairs),
                    std::invalid_argument);
    CHECK_THROWS_AS(pncoef::max_coefficient(5, SearchMethod::greedy),
                    std::invalid_argument);
}

TEST_CASE("method names parse both ways") {
    CHECK(pncoef::parse_method("bruteforce") == SearchMethod::bruteforce);
    CHECK(pncoef::parse_method("sorted") == SearchMethod::sorted);
    CHECK(pncoef::parse_method("stairs") == SearchMethod::stairs);
    CHECK(pncoef::parse_method("greedy") == SearchMethod::greedy);
    CHECK_THROWS_AS(pncoef::parse_method("fancy"), std::invalid_argument);
    CHECK(pncoef::method_name(SearchMethod::sorted) == "sorted");
}

TEST_CASE("quotients of consecutive values") {
    std::vector<Bigint> values = {1, 1, 2, 4, 9};
    auto q = pncoef::quotients(values);
    REQUIRE(q.size() == 4);
    CHECK(q[0].numerator == 1);
    CHECK(q[0].denominator == 1);
    CHECK(q[2].numerator == 2);
    CHECK(q[2].denominator == 1);
    CHECK(q[3].numerator == 9);
    CHECK(q[3].denominator == 4);

    auto q2 = pncoef::quotients({Bigint(128), Bigint(625)});
    REQUIRE(q2.size() == 1);
    CHECK(q2[0].numerator == 625);
    CHECK(q2[0].denominator == 128);

    CHECK_THROWS_AS(pncoef::quotients({}), std::invalid_argument);
    CHECK_THROWS_AS(pncoef::quotients({Bigint(1), Bigint(0)}), std::invalid_argument);
}

TEST_CASE("highest pure power below the maximum") {
    CHECK(pncoef::power_lower_bound(1) == std::pair<int, Bigint>(1, Bigint(1)));
    CHECK(pncoef::power_lower_bound(7) == std::pair<int, Bigint>(3, Bigint(81)));
    CHECK(pncoef::power_lower_bound(9) == std::pair<int, Bigint>(4, Bigint(1024)));
    CHECK(pncoef::power_lower_bound(12) == std::pair<int, Bigint>(5, Bigint(78125)));
    CHECK_THROWS_AS(pncoef::power_lower_bound(0), std::invalid_argument);

    auto expected = testutil::read_indexed_values("a349404_values.txt");
    for (int n = 1; n <= 29; ++n)
        CHECK(pncoef::power_lower_bound(n).second <= expected.at(n));
}
