#include "rpl/quad.hpp"

#include <sstream>
#include <utility>

#include "rpl/errors.hpp"

namespace rpl {

QuadElem::QuadElem(mpq_class rational_part, mpq_class surd_part, mpz_class disc)
    : a_(std::move(rational_part)), b_(std::move(surd_part)), d_(std::move(disc)) {
    a_.canonicalize();
    b_.canonicalize();
}

QuadElem QuadElem::from_int(long v, const mpz_class& disc) {
    return QuadElem(mpq_class(v), mpq_class(0), disc);
}

QuadElem QuadElem::sqrt_disc(const mpz_class& disc) {
    return QuadElem(mpq_class(0), mpq_class(1), disc);
}

void QuadElem::check_same_disc(const QuadElem& o) const {
    if (d_ != o.d_)
        throw InvalidInput("QuadElem: mixed discriminants " + d_.get_str() +
                           " and " + o.d_.get_str());
}

QuadElem QuadElem::conj() const {
    return QuadElem(a_, -b_, d_);
}

mpq_class QuadElem::trace() const {
    return 2 * a_;
}

mpq_class QuadElem::norm() const {
    return a_ * a_ - mpq_class(d_) * b_ * b_;
}

QuadElem QuadElem::inverse() const {
    mpq_class n = norm();
    if (n == 0)
        throw ZeroInput("QuadElem: inverse of element with zero norm");
    return QuadElem(a_ / n, -b_ / n, d_);
}

QuadElem QuadElem::operator-() const {
    return QuadElem(-a_, -b_, d_);
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
    check_same_disc(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
    check_same_disc(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
    check_same_disc(o);
    // (a + b s)(c + e s) = (ac + be D) + (ae + bc) s
    mpq_class na = a_ * o.a_ + b_ * o.b_ * mpq_class(d_);
    mpq_class nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
    return *this *= o.inverse();
}

QuadElem QuadElem::pow(unsigned long n) const {
    QuadElem result = from_int(1, d_);
    QuadElem base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

std::string QuadElem::str() const {
    std::ostringstream os;
    os << a_.get_str();
    if (b_ != 0)
        os << (b_ > 0 ? " + " : " - ") << abs(b_).get_str() << "*sqrt(" << d_.get_str() << ")";
    return os.str();
}

} // namespace rpl
