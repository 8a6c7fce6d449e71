#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "rpl/power.hpp"

using namespace rpl;

TEST_CASE("int_root examples") {
    CHECK(int_root(27, 3) == std::pair<mpz_class, bool>{3, true});
    CHECK(int_root(26, 3) == std::pair<mpz_class, bool>{2, false});

    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 60);
    mpz_class r12;
    mpz_ui_pow_ui(r12.get_mpz_t(), 10, 12);
    CHECK(int_root(big, 5) == std::pair<mpz_class, bool>{r12, true});
}

TEST_CASE("int_root bracket property") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 500; ++iter) {
        mpz_class s = mpz_class(rng() % (1ull << 52)) + 1;
        unsigned long q = 2 + rng() % 9;
        auto [r, exact] = int_root(s, q);
        mpz_class rq, r1q;
        mpz_pow_ui(rq.get_mpz_t(), r.get_mpz_t(), q);
        mpz_class r1 = r + 1;
        mpz_pow_ui(r1q.get_mpz_t(), r1.get_mpz_t(), q);
        CHECK(rq <= s);
        CHECK(s < r1q);
        CHECK(exact == (rq == s));
    }
}

TEST_CASE("perfect_power examples") {
    auto reprs = perfect_power(64);
    REQUIRE(reprs.size() == 3);
    CHECK(reprs[0] == PowerRepr{2, 6});
    CHECK(reprs[1] == PowerRepr{4, 3});
    CHECK(reprs[2] == PowerRepr{8, 2});

    auto r36 = perfect_power(36);
    REQUIRE(r36.size() == 1);
    CHECK(r36[0] == PowerRepr{6, 2});

    CHECK(perfect_power(12).empty());
}

TEST_CASE("perfect_power agrees with the naive map up to 20000") {
    auto naive = oracle::power_map(20000);
    for (long s = 4; s <= 20000; ++s) {
        auto reprs = perfect_power(s);
        auto it = naive.find(s);
        size_t expect = it == naive.end() ? 0 : it->second.size();
        REQUIRE(reprs.size() == expect);
        for (const auto& pr : reprs) {
            bool found = false;
            for (const auto& [x, q] : it->second)
                if (x == pr.base && q == pr.exponent) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("is_power_of examples and round trip") {
    CHECK(is_power_of(8, 2) == 3);
    CHECK(is_power_of(2, 2) == std::nullopt); // q = 1 excluded
    mpz_class p317;
    mpz_ui_pow_ui(p317.get_mpz_t(), 3, 17);
    CHECK(is_power_of(p317, 3) == 17);
    CHECK(is_power_of(10, 2) == std::nullopt);
    CHECK(is_power_of(1, 5) == std::nullopt);

    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 300; ++iter) {
        mpz_class x = 2 + rng() % 999;
        unsigned long q = 2 + rng() % 11;
        mpz_class s;
        mpz_pow_ui(s.get_mpz_t(), x.get_mpz_t(), q);
        auto got = is_power_of(s, x);
        REQUIRE(got.has_value());
        CHECK(*got == q);
    }
}
