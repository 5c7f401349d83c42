#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "babai/errors.hpp"
#include "babai/numtheory.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace babai;

TEST_CASE("order in Z_n") {
    CHECK(order_in_zn(12, 4) == 3);
    CHECK(order_in_zn(10, 2) == 5);
    CHECK(order_in_zn(9, 3) == 3);
    CHECK_THROWS_AS(order_in_zn(9, 0), DomainError);
}

TEST_CASE("coset decomposition examples") {
    const auto c6 = coset_decomposition(6, 2);
    REQUIRE(c6.cosets.size() == 2);
    CHECK(c6.cosets[0] == std::vector<int>{0, 2, 4});
    CHECK(c6.cosets[1] == std::vector<int>{1, 3, 5});
    const auto c10 = coset_decomposition(10, 2);
    REQUIRE(c10.cosets.size() == 2);
    CHECK(c10.cosets[0].size() == 5);
    CHECK(coset_decomposition(5, 1).cosets == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
}

TEST_CASE("cosets partition Z_n and match the order, n <= 60") {
    for (int n = 2; n <= 60; ++n)
        for (int d = 1; d < n; ++d) {
            const auto cd = coset_decomposition(n, d);
            REQUIRE(static_cast<int>(cd.cosets.size()) == oracle::gcd(n, d));
            std::vector<int> all;
            for (const auto& c : cd.cosets) {
                REQUIRE(static_cast<int>(c.size()) == order_in_zn(n, d));
                for (std::size_t i = 1; i < c.size(); ++i) REQUIRE(c[i] == (c[i - 1] + d) % n);
                all.insert(all.end(), c.begin(), c.end());
            }
            REQUIRE(cd.cosets[0][0] == 0);
            std::sort(all.begin(), all.end());
            for (int i = 0; i < n; ++i) REQUIRE(all[static_cast<std::size_t>(i)] == i);
        }
}

TEST_CASE("non-multiple counts, examples") {
    // multiples of 3 in (3,10) are 6, 9: 6 integers in the interval, 4 non-multiples
    CHECK(count_nonmultiples(3, 10, CountInterval::OpenMToN) == 4);
    // multiples of 3 in [1,10) are 3, 6, 9
    CHECK(count_nonmultiples(3, 10, CountInterval::HalfOpen1ToN) == 6);
    CHECK(count_nonmultiples(4, 9, CountInterval::OpenMToN) == 3);
    CHECK_THROWS_AS(count_nonmultiples(1, 9, CountInterval::OpenMToN), DomainError);
    CHECK_THROWS_AS(count_nonmultiples(5, 5, CountInterval::OpenMToN), DomainError);
}

TEST_CASE("non-multiple counts agree with enumeration, 1 < m < n <= 200") {
    for (int n = 3; n <= 200; ++n)
        for (int m = 2; m < n; ++m) {
            int open = 0, half = 0;
            for (int x = m + 1; x < n; ++x) open += x % m != 0;
            for (int x = 1; x < n; ++x) half += x % m != 0;
            REQUIRE(count_nonmultiples(m, n, CountInterval::OpenMToN) == open);
            REQUIRE(count_nonmultiples(m, n, CountInterval::HalfOpen1ToN) == half);
        }
}

TEST_CASE("weak r-freeness examples") {
    CHECK(is_weakly_r_free(12, {1, 4}, 3));
    CHECK_FALSE(is_weakly_r_free(5, {1, 2}, 3));
    CHECK(is_weakly_r_free(6, {1, 3, 5}, 2));
    CHECK(is_weakly_r_free(9, {1, 4, 7}, 3));
    CHECK_THROWS_AS(is_weakly_r_free(6, {1}, 1), DomainError);
}

TEST_CASE("violations are genuine combinations") {
    for (int n = 2; n <= 16; ++n)
        for (int r = 2; r <= 5; ++r)
            for (int a = 1; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    const DistanceSet s{a, b};
                    const auto bad = weak_r_free_violation(n, s, r);
                    REQUIRE(bad.has_value() == !is_weakly_r_free(n, s, r));
                    if (!bad) continue;
                    const long long sum = (*bad)[0] * a + (*bad)[1] * b;
                    const long long csum = (*bad)[0] + (*bad)[1];
                    REQUIRE(((sum % n) + n) % n == 0);
                    REQUIRE(((csum % r) + r) % r != 0);
                }
}

TEST_CASE("closure decision matches bounded coefficient search, n <= 18") {
    // The acceptance binary runs the full n <= 40 sweep.
    for (int n = 2; n <= 18; ++n)
        for (int r = 2; r <= 5; ++r)
            for (int a = 1; a < n; ++a) {
                REQUIRE(is_weakly_r_free(n, {a}, r) == oracle::weakly_r_free_bounded(n, {a}, r));
                for (int b = a + 1; b < n; ++b) {
                    REQUIRE(is_weakly_r_free(n, {a, b}, r) == oracle::weakly_r_free_bounded(n, {a, b}, r));
                    for (int c = b + 1; c < n; ++c)
                        REQUIRE(is_weakly_r_free(n, {a, b, c}, r) == oracle::weakly_r_free_bounded(n, {a, b, c}, r));
                }
            }
}

TEST_CASE("frobenius 5/6 examples") {
    CHECK(frobenius_56(20) == std::make_pair(4, 0));
    CHECK_FALSE(frobenius_56(19).has_value());
    CHECK(frobenius_56(11) == std::make_pair(1, 1));
    CHECK(frobenius_56(0) == std::make_pair(0, 0));
}

TEST_CASE("frobenius 5/6 exceptional set and smallest lambda") {
    std::set<int> missing;
    for (int n = 1; n <= 500; ++n) {
        const auto rep = frobenius_56(n);
        bool exists = false;
        int best = -1;
        for (int l = 0; 5 * l <= n && !exists; ++l)
            if ((n - 5 * l) % 6 == 0) {
                exists = true;
                best = l;
            }
        REQUIRE(rep.has_value() == exists);
        if (rep) {
            CHECK(rep->first == best);
            CHECK(5 * rep->first + 6 * rep->second == n);
        } else {
            missing.insert(n);
        }
    }
    CHECK(missing == std::set<int>{1, 2, 3, 4, 7, 8, 9, 13, 14, 19});
}

TEST_CASE("spec interval examples") {
    CHECK(spec_interval_m(10, 9) == 9);
    CHECK(spec_interval_m(10, 6) == 2);
    CHECK(spec_interval_m(8, 5) == 2);
    CHECK(spec_interval_m(6, 5) == 5);
    CHECK(spec_interval_m(7, 4) == 2);
    CHECK_THROWS_AS(spec_interval_m(10, 5), DomainError);
    CHECK_THROWS_AS(spec_interval_m(10, 10), DomainError);
}

TEST_CASE("the intervals J(m) partition (n/2, n-1], 4 <= n <= 60") {
    for (int n = 4; n <= 60; ++n) {
        std::vector<int> owner(static_cast<std::size_t>(n), 0);
        for (int m = 2; m <= n - 1; ++m) {
            const int lo = n - (n + m - 1) / m;
            const int hi = n - (n + m) / (m + 1);
            for (int k = lo + 1; k <= hi; ++k) {
                REQUIRE(k > n / 2);
                REQUIRE(k <= n - 1);
                ++owner[static_cast<std::size_t>(k)];
            }
        }
        for (int k = n / 2 + 1; k <= n - 1; ++k) {
            REQUIRE(owner[static_cast<std::size_t>(k)] == 1);
            const int m = spec_interval_m(n, k);
            REQUIRE(n - (n + m - 1) / m < k);
            REQUIRE(k <= n - (n + m) / (m + 1));
        }
    }
}

TEST_CASE("factor stripping") {
    CHECK(strip_factor(54, 3) == std::make_pair(2LL, 3));
    CHECK(strip_factor(7, 2) == std::make_pair(7LL, 0));
    CHECK(is_power_of(27, 3));
    CHECK_FALSE(is_power_of(1, 3));
    CHECK_FALSE(is_power_of(18, 3));
    CHECK(is_power_of(32, 2));
    CHECK(ceil_div(10, 3) == 4);
}
