#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rpl/errors.hpp"
#include "rpl/quad.hpp"

using rpl::QuadElem;

namespace {
mpq_class rnd_q(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    mpq_class r(num(rng), den(rng));
    r.canonicalize();
    return r;
}
} // namespace

TEST_CASE("field operations on a + b sqrt(5)") {
    mpz_class D = 5;
    QuadElem x(mpq_class(1, 2), mpq_class(1, 2), D); // golden ratio
    QuadElem y(mpq_class(1, 2), mpq_class(-1, 2), D);

    CHECK(x + y == QuadElem(mpq_class(1), mpq_class(0), D));
    CHECK(x * y == QuadElem(mpq_class(-1), mpq_class(0), D)); // alpha*beta = -Q
    CHECK(x.conj() == y);
    CHECK(x.norm() == mpq_class(-1));

    QuadElem inv = x.inverse();
    CHECK(x * inv == QuadElem::from_int(1, D));
    CHECK((x / y) * y == x);
}

TEST_CASE("pow matches repeated multiplication") {
    mpz_class D = 8;
    QuadElem a(mpq_class(1), mpq_class(1), D); // 1 + sqrt(8)
    QuadElem acc = QuadElem::from_int(1, D);
    for (unsigned long k = 0; k <= 12; ++k) {
        CHECK(a.pow(k) == acc);
        acc *= a;
    }
}

TEST_CASE("division by zero norm is rejected") {
    mpz_class D = 9; // perfect square: 3 + 1*sqrt(9) has norm 9 - 9 = 0
    QuadElem z(mpq_class(3), mpq_class(1), D);
    CHECK(z.norm() == 0);
    CHECK_THROWS_AS(z.inverse(), rpl::ZeroInput);
}

TEST_CASE("norm is multiplicative: (xy)conj(xy) = (x conj x)(y conj y)") {
    std::mt19937 rng(12345);
    mpz_class D = 13;
    for (int iter = 0; iter < 200; ++iter) {
        QuadElem x(rnd_q(rng), rnd_q(rng), D);
        QuadElem y(rnd_q(rng), rnd_q(rng), D);
        QuadElem xy = x * y;
        CHECK((xy * xy.conj()).rational_part() ==
              (x * x.conj()).rational_part() * (y * y.conj()).rational_part());
        CHECK((xy * xy.conj()).surd_part() == 0);
    }
}

TEST_CASE("mixed discriminants are rejected") {
    QuadElem a = QuadElem::from_int(1, mpz_class(5));
    QuadElem b = QuadElem::from_int(1, mpz_class(8));
    CHECK_THROWS_AS(a + b, rpl::InvalidInput);
}
