#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace rpl {

// Closed interval [lo, hi] with outward-directed rounding: every operation
// rounds lo toward -inf and hi toward +inf, so the exact real result is
// always contained. This is the substrate for every certified constant.
class RInterval {
public:
    explicit RInterval(mpfr_prec_t prec = 128);
    RInterval(const RInterval& o);
    RInterval(RInterval&& o) noexcept;
    RInterval& operator=(const RInterval& o);
    RInterval& operator=(RInterval&& o) noexcept;
    ~RInterval();

    static RInterval from_long(long v, mpfr_prec_t prec);
    static RInterval from_mpz(const mpz_class& v, mpfr_prec_t prec);
    static RInterval from_mpq(const mpq_class& v, mpfr_prec_t prec);
    // [lo, hi] from two rationals, lo <= hi.
    static RInterval from_endpoints(const mpq_class& lo, const mpq_class& hi,
                                    mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }

    RInterval operator+(const RInterval& o) const;
    RInterval operator-(const RInterval& o) const;
    RInterval operator*(const RInterval& o) const;
    // Divisor interval must not contain 0.
    RInterval operator/(const RInterval& o) const;
    RInterval operator-() const;

    RInterval abs() const;
    // Requires lo > 0.
    RInterval log() const;
    RInterval exp() const;
    // Requires lo >= 0.
    RInterval sqrt() const;
    // Base must satisfy lo >= 0.
    RInterval pow_ui(unsigned long e) const;

    static RInterval max(const RInterval& x, const RInterval& y);
    static RInterval min(const RInterval& x, const RInterval& y);
    // max(x, 0): the positive part, used for log^+ style constants.
    RInterval pos_part() const;

    bool contains_zero() const;
    bool is_positive() const;       // lo > 0
    bool definitely_lt(const RInterval& o) const; // hi < o.lo
    bool contains(const mpq_class& v) const;
    bool contains_mpz(const mpz_class& v) const;
    // true if [lo,hi] is inside [o.lo, o.hi] (refinement check).
    bool inside(const RInterval& o) const;

    // exact integer z < hi?  (strict, on the upper endpoint)
    bool upper_exceeds_mpz(const mpz_class& z) const;

    double lo_d() const; // rounded down
    double hi_d() const; // rounded up
    double mid_d() const;
    // (hi - lo) / max(|mid|, tiny); 0 for exact point intervals.
    double rel_width() const;

    // ceil(hi) as an exact integer.
    mpz_class ceil_upper() const;

    std::string lo_str(int digits = 24) const;
    std::string hi_str(int digits = 24) const;

    const mpfr_t& lo_raw() const { return lo_; }
    const mpfr_t& hi_raw() const { return hi_; }

private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

} // namespace rpl
