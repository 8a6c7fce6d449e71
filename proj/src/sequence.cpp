#include "rpl/sequence.hpp"

#include <array>
#include <sstream>

#include "rpl/errors.hpp"

namespace rpl {

namespace {

// 2x2 matrices over Z, row-major.
using Mat2 = std::array<mpz_class, 4>;

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Mat2 mat_pow(Mat2 base, unsigned long n) {
    Mat2 result = {1, 0, 0, 1};
    while (n > 0) {
        if (n & 1) result = mat_mul(result, base);
        base = mat_mul(base, base);
        n >>= 1;
    }
    return result;
}

// S_n for any sequence satisfying the recurrence, from its seeds:
// (S_{n+1}, S_n)^T = M^n (S_1, S_0)^T with M = [[P, Q], [1, 0]].
mpz_class linrec_term(const mpz_class& P, const mpz_class& Q,
                      const mpz_class& s0, const mpz_class& s1,
                      unsigned long n) {
    if (n == 0) return s0;
    Mat2 m = mat_pow({P, Q, 1, 0}, n - 1);
    return m[0] * s1 + m[1] * s0;
}

void check_n_cap(const RecurrenceSequence& seq, unsigned long n) {
    if (n > seq.n_max_hard) {
        std::ostringstream os;
        os << "index " << n << " exceeds n_max_hard = " << seq.n_max_hard;
        throw InvalidInput(os.str());
    }
}

} // namespace

std::string RecurrenceSequence::descriptor() const {
    return P.get_str() + "," + Q.get_str() + "," + U0.get_str() + "," + U1.get_str();
}

RecurrenceSequence make_sequence(const mpz_class& P, const mpz_class& Q,
                                 const mpz_class& U0, const mpz_class& U1,
                                 unsigned long n_max_hard) {
    if (P == 0 || Q == 0)
        throw DegenerateSequence("PQ = 0");
    if (U0 == 0 && U1 == 0)
        throw DegenerateSequence("|U0| + |U1| = 0");

    mpz_class D = P * P + 4 * Q;
    if (D == 0)
        throw DegenerateSequence("D = 0 (double root)");
    if (D < 0)
        throw DegenerateSequence("D = " + D.get_str() + " < 0 (complex roots)");

    // With sqrt(D) = alpha - beta > 0 fixed, alpha > |beta| holds iff
    // alpha + beta = P > 0. P < 0 admits no valid labeling; reject.
    if (P < 0)
        throw DegenerateSequence("P < 0: no dominant root with alpha > |beta|");

    // alpha > 1  <=>  P + sqrt(D) > 2  <=>  P >= 2 or D > (2-P)^2.
    if (P < 2) {
        mpz_class gap = 2 - P;
        if (D <= gap * gap)
            throw DegenerateSequence("alpha <= 1");
    }

    mpz_class a1a2 = U1 * U1 - P * U0 * U1 - Q * U0 * U0;
    if (a1a2 == 0)
        throw DegenerateSequence("a1*a2 = 0 (degenerate Binet form)");

    RecurrenceSequence seq;
    seq.P = P;
    seq.Q = Q;
    seq.U0 = U0;
    seq.U1 = U1;
    seq.D = D;
    mpq_class half_p(P, 2), half(1, 2);
    half_p.canonicalize();
    seq.alpha = QuadElem(half_p, half, D);
    seq.beta = QuadElem(half_p, -half, D);
    QuadElem u1q(mpq_class(U1), mpq_class(0), D);
    QuadElem u0q(mpq_class(U0), mpq_class(0), D);
    seq.a1 = u1q - u0q * seq.beta;
    seq.a2 = u1q - u0q * seq.alpha;
    seq.a1a2_int = a1a2;
    seq.n_max_hard = n_max_hard;
    return seq;
}

mpz_class term(const RecurrenceSequence& seq, unsigned long n) {
    check_n_cap(seq, n);
    return linrec_term(seq.P, seq.Q, seq.U0, seq.U1, n);
}

mpz_class companion_term(const RecurrenceSequence& seq, unsigned long n) {
    check_n_cap(seq, n);
    // W satisfies the same recurrence; seeds W_0 = 2U1 - P U0,
    // W_1 = P U1 + 2 Q U0.
    mpz_class w0 = 2 * seq.U1 - seq.P * seq.U0;
    mpz_class w1 = seq.P * seq.U1 + 2 * seq.Q * seq.U0;
    return linrec_term(seq.P, seq.Q, w0, w1, n);
}

std::vector<mpz_class> term_table(const RecurrenceSequence& seq, unsigned long n_max) {
    check_n_cap(seq, n_max);
    std::vector<mpz_class> t;
    t.reserve(n_max + 1);
    t.push_back(seq.U0);
    if (n_max >= 1) t.push_back(seq.U1);
    for (unsigned long n = 2; n <= n_max; ++n)
        t.push_back(seq.P * t[n - 1] + seq.Q * t[n - 2]);
    return t;
}

std::vector<mpz_class> companion_table(const RecurrenceSequence& seq, unsigned long n_max) {
    check_n_cap(seq, n_max);
    std::vector<mpz_class> t;
    t.reserve(n_max + 1);
    t.push_back(2 * seq.U1 - seq.P * seq.U0);
    if (n_max >= 1) t.push_back(seq.P * seq.U1 + 2 * seq.Q * seq.U0);
    for (unsigned long n = 2; n <= n_max; ++n)
        t.push_back(seq.P * t[n - 1] + seq.Q * t[n - 2]);
    return t;
}

bool ValidationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

ValidationReport check_nondegenerate(const mpz_class& P, const mpz_class& Q,
                                     const mpz_class& U0, const mpz_class& U1) {
    ValidationReport rep;
    auto add = [&rep](std::string name, bool pass, std::string detail) {
        rep.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    bool pq = (P != 0 && Q != 0);
    add("PQ != 0", pq, "P = " + P.get_str() + ", Q = " + Q.get_str());

    bool seeds = !(U0 == 0 && U1 == 0);
    add("|U0| + |U1| > 0", seeds, "U0 = " + U0.get_str() + ", U1 = " + U1.get_str());

    mpz_class D = P * P + 4 * Q;
    bool dpos = D > 0;
    add("D > 0", dpos, "D = P^2 + 4Q = " + D.get_str());

    bool dominant = P > 0 && dpos;
    add("dominant root alpha > |beta|", dominant,
        dominant ? "alpha + beta = P > 0 and sqrt(D) = alpha - beta > 0"
                 : "requires P > 0 with D > 0");

    bool alpha_gt_1 = dominant;
    if (dominant && P < 2) {
        mpz_class gap = 2 - P;
        alpha_gt_1 = D > gap * gap;
    }
    add("alpha > 1", alpha_gt_1,
        "alpha > 1 iff P + sqrt(D) > 2, checked exactly on integers");

    mpz_class a1a2 = U1 * U1 - P * U0 * U1 - Q * U0 * U0;
    add("a1*a2 != 0", a1a2 != 0, "a1*a2 = " + a1a2.get_str());

    bool unity_ok = pq && dpos;
    add("alpha/beta not a root of unity", unity_ok,
        unity_ok ? "with D > 0 the ratio is real, so only +-1 qualify; "
                   "alpha = beta needs D = 0 and alpha = -beta needs P = 0, "
                   "both already excluded"
                 : "not evaluated (earlier hypothesis failed)");

    return rep;
}

mpz_class chebyshev_eval(unsigned long n, const mpz_class& x) {
    // Same companion recurrence with P = x, Q = -1, seeds 2 and x.
    return linrec_term(x, mpz_class(-1), mpz_class(2), x, n);
}

Condition17 condition_17(const RecurrenceSequence& seq, Parity n_parity,
                         unsigned long m) {
    if (seq.a1a2_int == 0)
        throw ZeroProduct("a1*a2 = 0");
    mpz_class um = term(seq, m);
    mpz_class lhs = seq.D * um * um;
    if (n_parity == Parity::even) lhs = -lhs; // (-1)^(n+1) with n even
    return lhs == 4 * seq.a1a2_int ? Condition17::fails : Condition17::holds;
}

} // namespace rpl
