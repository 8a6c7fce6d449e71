#pragma once

#include <gmpxx.h>
#include <string>

namespace rpl {

// Element a + b*sqrt(D) of Q[X]/(X^2 - D), with exact rational parts.
// D > 0 may be a perfect square; the pair algebra is the same either way
// and every identity we rely on is a polynomial identity in this ring.
// Division requires an invertible element, i.e. norm != 0.
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(mpq_class rational_part, mpq_class surd_part, mpz_class disc);

    static QuadElem from_int(long v, const mpz_class& disc);
    static QuadElem sqrt_disc(const mpz_class& disc); // 0 + 1*sqrt(D)

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& surd_part() const { return b_; }
    const mpz_class& disc() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadElem conj() const;           // (a, b) -> (a, -b)
    mpq_class norm() const;          // a^2 - D b^2  (= x * conj(x))
    mpq_class trace() const;         // 2a           (= x + conj(x))
    QuadElem inverse() const;        // throws ZeroInput on norm() == 0
    QuadElem pow(unsigned long n) const;

    QuadElem operator-() const;
    QuadElem& operator+=(const QuadElem& o);
    QuadElem& operator-=(const QuadElem& o);
    QuadElem& operator*=(const QuadElem& o);
    QuadElem& operator/=(const QuadElem& o);

    friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
    friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
    friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
    friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }

    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    std::string str() const;

private:
    void check_same_disc(const QuadElem& o) const;

    mpq_class a_;
    mpq_class b_;
    mpz_class d_;
};

} // namespace rpl
