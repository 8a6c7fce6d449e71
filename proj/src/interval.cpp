#include "rpl/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "rpl/errors.hpp"

namespace rpl {

RInterval::RInterval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RInterval::RInterval(const RInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RInterval::RInterval(RInterval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

RInterval& RInterval::operator=(const RInterval& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.prec_);
        mpfr_set_prec(hi_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

RInterval& RInterval::operator=(RInterval&& o) noexcept {
    if (this != &o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}

RInterval::~RInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RInterval RInterval::from_long(long v, mpfr_prec_t prec) {
    RInterval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

RInterval RInterval::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
    RInterval r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

RInterval RInterval::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
    RInterval r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

RInterval RInterval::from_endpoints(const mpq_class& lo, const mpq_class& hi,
                                    mpfr_prec_t prec) {
    if (lo > hi) throw InvalidInput("RInterval: lo > hi");
    RInterval r(prec);
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

RInterval RInterval::operator+(const RInterval& o) const {
    RInterval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

RInterval RInterval::operator-(const RInterval& o) const {
    RInterval r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

RInterval RInterval::operator*(const RInterval& o) const {
    RInterval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_t* xs[2] = {&lo_, &hi_};
    const mpfr_t* ys[2] = {&o.lo_, &o.hi_};
    bool first = true;
    for (auto* x : xs)
        for (auto* y : ys) {
            mpfr_mul(t, *x, *y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, *x, *y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

RInterval RInterval::operator/(const RInterval& o) const {
    if (o.contains_zero())
        throw InvalidInput("RInterval: division by interval containing 0");
    RInterval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_t* xs[2] = {&lo_, &hi_};
    const mpfr_t* ys[2] = {&o.lo_, &o.hi_};
    bool first = true;
    for (auto* x : xs)
        for (auto* y : ys) {
            mpfr_div(t, *x, *y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_div(t, *x, *y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

RInterval RInterval::operator-() const {
    RInterval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

RInterval RInterval::abs() const {
    RInterval r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    // straddles zero
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    if (mpfr_cmp(hi_, r.hi_) > 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInterval RInterval::log() const {
    if (mpfr_sgn(lo_) <= 0)
        throw InvalidInput("RInterval: log of interval with lo <= 0");
    RInterval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInterval RInterval::exp() const {
    RInterval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInterval RInterval::sqrt() const {
    if (mpfr_sgn(lo_) < 0)
        throw InvalidInput("RInterval: sqrt of interval with lo < 0");
    RInterval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInterval RInterval::pow_ui(unsigned long e) const {
    if (mpfr_sgn(lo_) < 0)
        throw InvalidInput("RInterval: pow_ui of interval with lo < 0");
    RInterval r(prec_);
    mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
    return r;
}

RInterval RInterval::max(const RInterval& x, const RInterval& y) {
    RInterval r(std::max(x.prec_, y.prec_));
    mpfr_max(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
    return r;
}

RInterval RInterval::min(const RInterval& x, const RInterval& y) {
    RInterval r(std::max(x.prec_, y.prec_));
    mpfr_min(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
    return r;
}

RInterval RInterval::pos_part() const {
    return max(*this, from_long(0, prec_));
}

bool RInterval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool RInterval::is_positive() const {
    return mpfr_sgn(lo_) > 0;
}

bool RInterval::definitely_lt(const RInterval& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}

bool RInterval::contains(const mpq_class& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool RInterval::contains_mpz(const mpz_class& v) const {
    return mpfr_cmp_z(lo_, v.get_mpz_t()) <= 0 &&
           mpfr_cmp_z(hi_, v.get_mpz_t()) >= 0;
}

bool RInterval::inside(const RInterval& o) const {
    return mpfr_cmp(lo_, o.lo_) >= 0 && mpfr_cmp(hi_, o.hi_) <= 0;
}

bool RInterval::upper_exceeds_mpz(const mpz_class& z) const {
    return mpfr_cmp_z(hi_, z.get_mpz_t()) > 0;
}

double RInterval::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RInterval::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double RInterval::mid_d() const {
    return 0.5 * (lo_d() + hi_d());
}

double RInterval::rel_width() const {
    mpfr_t w, m;
    mpfr_init2(w, prec_);
    mpfr_init2(m, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_add(m, hi_, lo_, MPFR_RNDN);
    mpfr_abs(m, m, MPFR_RNDN);
    mpfr_mul_2si(m, m, -1, MPFR_RNDN);
    double width = mpfr_get_d(w, MPFR_RNDU);
    double mid = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(w);
    mpfr_clear(m);
    if (width == 0.0) return 0.0;
    return width / std::max(mid, 1e-300);
}

mpz_class RInterval::ceil_upper() const {
    mpfr_t c;
    mpfr_init2(c, std::max<mpfr_prec_t>(prec_, mpfr_get_exp(hi_) + 8));
    mpfr_ceil(c, hi_);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), c, MPFR_RNDN); // exact: c is an integer
    mpfr_clear(c);
    return z;
}

namespace {
std::string fmt(const mpfr_t& v, int digits, mpfr_rnd_t rnd) {
    char buf[512];
    std::string f = "%." + std::to_string(digits) + "R*g";
    mpfr_snprintf(buf, sizeof buf, f.c_str(), rnd, v);
    return buf;
}
} // namespace

std::string RInterval::lo_str(int digits) const { return fmt(lo_, digits, MPFR_RNDD); }
std::string RInterval::hi_str(int digits) const { return fmt(hi_, digits, MPFR_RNDU); }

} // namespace rpl
