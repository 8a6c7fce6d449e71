#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rpl/errors.hpp"
#include "rpl/interval.hpp"

using rpl::RInterval;

TEST_CASE("exact constructors give point intervals") {
    auto x = RInterval::from_long(7, 64);
    CHECK(x.lo_d() == 7.0);
    CHECK(x.hi_d() == 7.0);
    CHECK(x.rel_width() == 0.0);

    // 1/3 is not binary-representable; the interval must straddle it
    auto t = RInterval::from_mpq(mpq_class(1, 3), 64);
    CHECK(t.contains(mpq_class(1, 3)));
    CHECK(t.lo_d() < t.hi_d());
}

TEST_CASE("arithmetic contains the exact result") {
    auto third = RInterval::from_mpq(mpq_class(1, 3), 96);
    auto sixth = RInterval::from_mpq(mpq_class(1, 6), 96);
    CHECK((third + sixth).contains(mpq_class(1, 2)));
    CHECK((third - sixth).contains(mpq_class(1, 6)));
    CHECK((third * sixth).contains(mpq_class(1, 18)));
    CHECK((third / sixth).contains(mpq_class(2)));

    // signed multiplication candidates
    auto a = RInterval::from_endpoints(mpq_class(-2), mpq_class(3), 64);
    auto b = RInterval::from_endpoints(mpq_class(-5), mpq_class(7), 64);
    auto p = a * b;
    CHECK(p.contains(mpq_class(-14))); // -2 * 7
    CHECK(p.contains(mpq_class(21)));  // 3 * 7
    CHECK(p.contains(mpq_class(10)));  // -2 * -5
}

TEST_CASE("division by interval containing zero throws") {
    auto a = RInterval::from_long(1, 64);
    auto z = RInterval::from_endpoints(mpq_class(-1), mpq_class(1), 64);
    CHECK_THROWS_AS(a / z, rpl::InvalidInput);
}

TEST_CASE("sqrt and log enclose known algebraic relations") {
    auto five = RInterval::from_long(5, 128);
    auto s = five.sqrt();
    CHECK((s * s).contains(mpq_class(5)));
    CHECK_FALSE(s.contains(mpq_class(0)));

    auto two = RInterval::from_long(2, 128);
    auto l2 = two.log();
    CHECK(l2.exp().contains(mpq_class(2)));
    CHECK_THROWS_AS(RInterval::from_long(0, 64).log(), rpl::InvalidInput);
}

TEST_CASE("pow_ui equals repeated multiplication envelope") {
    auto x = RInterval::from_mpq(mpq_class(3, 2), 96);
    auto p = x.pow_ui(10);
    mpq_class exact(1);
    for (int i = 0; i < 10; ++i) exact *= mpq_class(3, 2);
    CHECK(p.contains(exact));
}

TEST_CASE("abs and max behave on straddling intervals") {
    auto a = RInterval::from_endpoints(mpq_class(-3), mpq_class(2), 64);
    auto ab = a.abs();
    CHECK(ab.contains(mpq_class(0)));
    CHECK(ab.contains(mpq_class(3)));
    CHECK(!ab.contains(mpq_class(-1)));

    auto m = RInterval::max(a, RInterval::from_long(1, 64));
    CHECK(m.contains(mpq_class(1)));
    CHECK(m.contains(mpq_class(2)));
    CHECK(!m.contains(mpq_class(-1)));
}

TEST_CASE("higher precision refines: result nested in coarse result") {
    auto coarse = (RInterval::from_long(2, 64).log() * RInterval::from_long(10, 64).sqrt())
                      .exp();
    auto fine = (RInterval::from_long(2, 256).log() * RInterval::from_long(10, 256).sqrt())
                    .exp();
    CHECK(fine.inside(coarse));
    CHECK(fine.rel_width() < coarse.rel_width());
}

TEST_CASE("ceil_upper is exact on big values") {
    auto x = RInterval::from_mpz(mpz_class("123456789012345678901234567890"), 128);
    CHECK(x.ceil_upper() == mpz_class("123456789012345678901234567890"));
    auto y = RInterval::from_mpq(mpq_class(7, 2), 64);
    CHECK(y.ceil_upper() == 4);
}
