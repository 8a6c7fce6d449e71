#include "rpl/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "rpl/errors.hpp"

namespace rpl {

namespace {

mpq_class kSixteenHundredths() { return mpq_class(4, 25); } // 0.16 exactly

RInterval iv(long v, mpfr_prec_t p) { return RInterval::from_long(v, p); }

RInterval eval_quad(const QuadElem& x, const RInterval& sqrt_disc, mpfr_prec_t p) {
    return RInterval::from_mpq(x.rational_part(), p) +
           RInterval::from_mpq(x.surd_part(), p) * sqrt_disc;
}

RInterval rational_height(const mpq_class& r, mpfr_prec_t p) {
    mpz_class num = abs(r.get_num());
    mpz_class den = r.get_den(); // > 0, canonical
    mpz_class m = num > den ? num : den;
    if (m == 1) return iv(0, p);
    return RInterval::from_mpz(m, p).log();
}

} // namespace

const RInterval& EffectiveBounds::find(const std::string& name) const {
    for (const auto& e : trace)
        if (e.name == name) return e.value;
    throw InvalidInput("no trace entry named " + name);
}

RInterval height_quadratic(const QuadElem& x, mpfr_prec_t prec) {
    if (x.is_zero()) throw ZeroInput("height of 0 is undefined");

    // Rational cases: b = 0, or a perfect-square discriminant.
    if (x.is_rational())
        return rational_height(x.rational_part(), prec);
    if (mpz_perfect_square_p(x.disc().get_mpz_t())) {
        mpz_class e;
        mpz_sqrt(e.get_mpz_t(), x.disc().get_mpz_t());
        mpq_class val = x.rational_part() + x.surd_part() * mpq_class(e);
        if (val == 0) throw ZeroInput("height of 0 is undefined");
        return rational_height(val, prec);
    }

    // Genuine quadratic: minimal polynomial a0 X^2 + a1 X + a2 is the
    // primitive integral multiple of X^2 - trace(x) X + norm(x); it is
    // irreducible because its discriminant 4 b^2 D is not a rational
    // square. h = (1/2)(log a0 + log^+|x| + log^+|x'|).
    mpq_class tr = x.trace();
    mpq_class nm = x.norm();
    mpz_class a0 = lcm(tr.get_den(), nm.get_den());
    mpz_class a1 = -(tr.get_num() * (a0 / tr.get_den()));
    mpz_class a2 = nm.get_num() * (a0 / nm.get_den());
    mpz_class g = gcd(a0, gcd(a1, a2));
    a0 /= g;

    RInterval sqrt_disc = RInterval::from_mpz(x.disc(), prec).sqrt();
    RInterval one = iv(1, prec);
    RInterval ax = eval_quad(x, sqrt_disc, prec).abs();
    RInterval axc = eval_quad(x.conj(), sqrt_disc, prec).abs();
    RInterval h = RInterval::from_mpz(a0, prec).log() +
                  RInterval::max(ax, one).log() +
                  RInterval::max(axc, one).log();
    return h / iv(2, prec);
}

RInterval matveev_bound(const MatveevInput& in) {
    if (in.t < 1 || in.dL < 1)
        throw InvalidInput("matveev_bound: t and dL must be >= 1");
    if (in.A.size() != in.t)
        throw InvalidInput("matveev_bound: need exactly t values A_j");
    mpfr_prec_t p = in.B.precision();
    mpq_class floor016 = kSixteenHundredths();
    for (const auto& a : in.A) {
        if (mpfr_cmp_q(a.lo_raw(), floor016.get_mpq_t()) < 0)
            throw InvalidInput("matveev_bound: A_j must be >= 0.16");
        p = std::max(p, a.precision());
    }
    if (mpfr_cmp_si(in.B.lo_raw(), 1) < 0)
        throw InvalidInput("matveev_bound: B must be >= 1");

    mpz_class pow30;
    mpz_ui_pow_ui(pow30.get_mpz_t(), 30, in.t + 3);
    mpz_class t4 = mpz_class(in.t);
    t4 = t4 * t4 * t4 * t4;

    RInterval one = iv(1, p);
    RInterval e = RInterval::from_mpq(mpq_class(7, 5), p); // 1.4 exactly
    e = e * RInterval::from_mpz(pow30, p);
    // t^4.5 = t^4 sqrt(t)
    e = e * RInterval::from_mpz(t4, p) * RInterval::from_long(in.t, p).sqrt();
    e = e * iv(long(in.dL) * long(in.dL), p);
    e = e * (one + RInterval::from_long(in.dL, p).log());
    e = e * (one + in.B.log());
    for (const auto& a : in.A) e = e * a;
    return e;
}

EffectiveBounds derive_constants(const RecurrenceSequence& seq, mpfr_prec_t prec) {
    const mpfr_prec_t p = prec;
    EffectiveBounds eb;
    eb.precision_bits = p;
    auto put = [&eb](const char* name, const char* formula, const RInterval& v) -> const RInterval& {
        eb.trace.push_back({name, formula, v});
        return eb.trace.back().value;
    };
    auto need_pos = [&](const RInterval& v, const char* what) {
        if (!v.is_positive())
            throw InvalidInput(std::string("derive_constants: ") + what +
                               " not resolvable at this precision");
    };

    RInterval one = iv(1, p);
    RInterval two = iv(2, p);
    RInterval log2 = two.log();
    RInterval log3 = iv(3, p).log();

    // Base data.
    RInterval sqrtD = RInterval::from_mpz(seq.D, p).sqrt();
    put("sqrtD", "sqrt(D)", sqrtD);
    RInterval alpha = eval_quad(seq.alpha, sqrtD, p);
    need_pos(alpha - one, "alpha - 1");
    put("alpha", "(P + sqrt(D))/2", alpha);
    RInterval beta_abs = eval_quad(seq.beta, sqrtD, p).abs();
    put("beta_abs", "|P - sqrt(D)|/2", beta_abs);
    RInterval a1_abs = eval_quad(seq.a1, sqrtD, p).abs();
    RInterval a2_abs = eval_quad(seq.a2, sqrtD, p).abs();
    need_pos(a1_abs, "|a1|");
    need_pos(a2_abs, "|a2|");
    put("a1_abs", "|U1 - U0*beta|", a1_abs);
    put("a2_abs", "|U1 - U0*alpha|", a2_abs);
    RInterval log_alpha = alpha.log();
    put("log_alpha", "log(alpha)", log_alpha);

    RInterval h_alpha = height_quadratic(seq.alpha, p);
    put("h_alpha", "h(alpha)", h_alpha);
    RInterval h_a1 = height_quadratic(seq.a1, p);
    put("h_a1", "h(a1)", h_a1);
    RInterval h_sqrtD = height_quadratic(QuadElem::sqrt_disc(seq.D), p);
    put("h_sqrtD", "h(sqrt(D))", h_sqrtD);

    // Decay rate of both linear-form comparisons:
    // |Lambda| <= const * (max{1,|beta|}/alpha)^k, so
    // L = log alpha - log^+ |beta| = log min{alpha, alpha/|beta|}.
    RInterval L = log_alpha - RInterval::max(beta_abs, one).log();
    need_pos(L, "decay rate L");
    put("L", "log(alpha) - log(max{1,|beta|})", L);

    // Paper chain: upper-bound lemma.
    eb.c0 = (a1_abs + a2_abs) / sqrtD;
    put("c0", "(|a1|+|a2|)/sqrt(D)", eb.c0);
    eb.c1 = two * eb.c0;
    put("c1", "2*c0", eb.c1);
    eb.d1 = two * log_alpha;
    put("d1", "2*log(alpha)", eb.d1);
    eb.d2 = (eb.c1.log() / log_alpha).pos_part();
    put("d2", "max{0, log(c1)/log(alpha)}", eb.d2);

    // Lambda_2 = 0 exclusion; num/L equals the paper's max over the
    // |beta| <= 1 and |beta| > 1 cases.
    RInterval c4num = (two * (a1_abs + a2_abs) / a1_abs).log();
    eb.c4 = c4num / L;
    put("c4", "log(2(|a1|+|a2|)/|a1|) / L", eb.c4);

    RInterval b_f = RInterval::max(one, eb.d1 / log2);
    put("b_f", "max{1, d1/log(2)}: B <= b_f * n", b_f);

    // Gap lemma, split at g0. For n - m > g0 there is no cancellation:
    // |U_n + U_m| >= |U_n| - |U_m| >= (|a1|/(4 sqrt(D))) alpha^n once
    // n >= n2, which yields k = floor(n/q) <= n/q <= (2/log alpha) log x.
    eb.g0 = (iv(4, p) * sqrtD * eb.c0 / a1_abs).log() / log_alpha;
    put("g0", "log(4*sqrt(D)*c0/|a1|)/log(alpha)", eb.g0);
    RInterval d4r = a1_abs / (iv(4, p) * sqrtD);
    put("d4_res", "|a1|/(4*sqrt(D)): |U_n+U_m| >= d4_res*alpha^n for n-m > g0, n >= n2", d4r);
    RInterval n1 = (two * a2_abs / a1_abs).log().pos_part() / L;
    put("n1", "log^+(2|a2|/|a1|)/L: |U_n| >= |a1| alpha^n/(2 sqrt(D)) from here", n1);
    eb.n2 = RInterval::max(n1, two * (one / d4r).log().pos_part() / log_alpha);
    put("n2", "max{n1, 2*log^+(1/d4_res)/log(alpha)}", eb.n2);
    eb.c4gap = (a2_abs / a1_abs).log().pos_part() / L;
    put("c4gap", "log^+(|a2|/|a1|)/L: Lambda_1 = 0 forces n <= c4gap", eb.c4gap);
    RInterval d5r = two / log_alpha;
    put("d5_res", "2/log(alpha): n/q <= d5_res*log(x) in the split range", d5r);

    // Matveev data for Lambda_1 = (x/alpha^k)^q alpha^(-r) (sqrt(D)/a1) - 1,
    // with b = (q, -r, 1) so B = q. A1 = a1f * log x with
    // a1f >= max{2(1 + d5_res h(alpha)), 2, 0.16/log 2}.
    mpz_class pow30_6;
    mpz_ui_pow_ui(pow30_6.get_mpz_t(), 30, 6);
    RInterval kappa = RInterval::from_mpq(mpq_class(7, 5), p) *
                      RInterval::from_mpz(pow30_6, p) *
                      iv(81, p) * iv(3, p).sqrt() * // 3^4.5
                      iv(4, p) * (one + log2);      // dL^2 (1 + log dL)
    put("kappa", "1.4*30^6*3^4.5*dL^2*(1+log dL), t=3, dL=2", kappa);

    RInterval a1f = RInterval::max(
        RInterval::max(two * (one + d5r * h_alpha), two),
        RInterval::from_mpq(kSixteenHundredths(), p) / log2);
    put("a1f", "A1 = a1f*log(x), a1f = max{2(1+d5_res*h(alpha)), 2, 0.16/log2}", a1f);
    RInterval A2 = RInterval::max(two * h_alpha,
                                  RInterval::from_mpq(kSixteenHundredths(), p));
    put("A2", "max{2*h(alpha), 0.16}", A2);
    RInterval labs0 = (sqrtD / a1_abs).log().abs();
    RInterval A3g = RInterval::max(RInterval::max(two * (h_sqrtD + h_a1), labs0),
                                   RInterval::from_mpq(kSixteenHundredths(), p));
    put("A3_gap", "max{2(h(sqrtD)+h(a1)), |log(sqrtD/|a1|)|, 0.16}", A3g);
    RInterval K_gap = eb.c0 * sqrtD / a1_abs + a2_abs / a1_abs;
    put("K_gap", "c0*sqrt(D)/|a1| + |a2|/|a1|", K_gap);

    // (1 + log q) <= (1 + 1/log 2) log q for q >= 2.
    RInterval qfold = one + one / log2;
    eb.c2 = (qfold * kappa * a1f * A2 * A3g +
             K_gap.log().pos_part() / (log2 * log2)) / L;
    put("c2", "((1+1/log2)*kappa*a1f*A2*A3_gap + log^+(K_gap)/log2^2)/L", eb.c2);

    eb.ghat = RInterval::max(RInterval::max(eb.g0, eb.n2), eb.c4gap) / (log2 * log2) + eb.c2;
    put("ghat", "max{g0,n2,c4gap}/log2^2 + c2: n-m <= ghat*log(q)*log(x) always", eb.ghat);

    // Main chain (Lambda_2, n > m, n > C2): A3 <= c5 log q log x.
    RInterval H0m = h_sqrtD + h_a1 + log2;
    RInterval A3m_const = RInterval::max(RInterval::max(two * H0m, labs0 + log2),
                                         RInterval::from_mpq(kSixteenHundredths(), p));
    put("A3_main_const", "max{2(h(sqrtD)+h(a1)+log2), |log(sqrtD/|a1|)|+log2, 0.16}", A3m_const);
    RInterval c5 = A3m_const / (log2 * log2) + two * h_alpha * eb.ghat;
    put("c5", "A3_main_const/log2^2 + 2*h(alpha)*ghat: A3 <= c5*log(q)*log(x)", c5);
    RInterval c6a = one + (one + b_f.log().pos_part()) / log3;
    put("c6a", "1 + (1+log^+(b_f))/log(3): 1+log(B) <= c6a*log(n) for n >= 3", c6a);
    RInterval c6 = two * kappa * c6a * A2 * c5;
    put("c6", "2*kappa*c6a*A2*c5: Matveev exponent <= c6*log(n)*(log x)^2*log(q)", c6);
    RInterval c7 = (two * a2_abs / a1_abs).log().pos_part();
    put("c7", "log^+(2|a2|/|a1|): additive term in n*L <= E + c7", c7);
    RInterval c8 = one + (eb.d1 / log2).log().pos_part() / log3;
    put("c8", "1 + log^+(d1/log2)/log(3): log q <= c8 log n for n >= 3 (threshold n0 = 3)", c8);
    RInterval c9 = c7 / (log3 * log2);
    put("c9", "c7/(log3*log2): c7 <= c9*log(n)*log(x)", c9);
    RInterval c10 = c6 * c8;
    put("c10", "c6*c8", c10);
    RInterval c11 = c9 / (log3 * log2) + c10;
    put("c11", "c9/(log3*log2) + c10: n*L <= c11*(log n)^2*(log x)^2", c11);
    RInterval sl_floor = RInterval::from_mpq(mpq_class(4097), p) / (log2 * log2);
    RInterval c12 = RInterval::max(c11 / L, sl_floor);
    put("c12", "max{c11/L, 4097/log2^2}: n/(log n)^2 < c12 (log x)^2, T > 4096", c12);

    // Sanchez-Luca with m = 2, then divide (log T)^2 through by (log x)^2.
    // The quotient (log c12 + 2 log log x)^2/(log x)^2 is decreasing in x
    // for log c12 + 2 log log 2 >= 2, guaranteed by the c12 floor, so its
    // sup over x >= 2 is attained at x = 2.
    RInterval loglog2 = log2.log(); // negative
    RInterval peak2 = c12.log() + two * loglog2;
    need_pos(peak2, "Case II collection peak");
    RInterval C1_caseII = iv(4, p) * c12 * peak2.pow_ui(2) / (log2 * log2);
    put("C1_caseII", "4*c12*(log c12 + 2*log log 2)^2/(log 2)^2", C1_caseII);

    // Case I (n = m): 2 U_n = x^q via Lambda_3 = x^q sqrt(D)/(2 a1) alpha^(-n) - 1,
    // then Sanchez-Luca with m = 1.
    RInterval cI = (two * kappa * c6a * A2 * A3m_const + c9) / L;
    cI = RInterval::max(cI, iv(8, p) / log2);
    put("cI", "max{(2*kappa*c6a*A2*A3_main_const + c9)/L, 8/log2}: n/log n <= cI log x when n = m", cI);
    RInterval peak1 = cI.log() + loglog2;
    need_pos(peak1, "Case I collection peak");
    RInterval C1_caseI = two * cI * peak1 / log2;
    put("C1_caseI", "2*cI*(log cI + log log 2)/log 2", C1_caseI);

    // q < d1 n / log x is covered by the b_f factor.
    eb.C1 = RInterval::max(C1_caseII, C1_caseI) * b_f;
    put("C1", "max{C1_caseII, C1_caseI} * b_f", eb.C1);
    eb.C2 = RInterval::max(RInterval::max(eb.d2, eb.c4), iv(3, p));
    put("C2", "max{d2, c4, 3}", eb.C2);

    return eb;
}

EffectiveBounds derive_constants_refined(const RecurrenceSequence& seq,
                                         mpfr_prec_t start_prec,
                                         double target_rel_width,
                                         mpfr_prec_t max_prec) {
    for (mpfr_prec_t p = start_prec; p <= max_prec; p *= 2) {
        EffectiveBounds eb;
        try {
            eb = derive_constants(seq, p);
        } catch (const InvalidInput&) {
            continue; // precision too low to separate a sign; double and retry
        }
        bool ok = true;
        for (const auto& e : eb.trace)
            if (e.value.rel_width() >= target_rel_width) {
                ok = false;
                break;
            }
        if (ok) return eb;
    }
    throw InvalidInput("derive_constants_refined: max precision reached");
}

mpz_class search_bound(const RecurrenceSequence& seq, const mpz_class& x,
                       const EffectiveBounds& eb) {
    (void)seq;
    if (x < 2) throw InvalidInput("search_bound: x must be >= 2");
    mpfr_prec_t p = eb.precision_bits;
    RInterval lx = RInterval::from_mpz(x, p).log();
    RInterval n_bound = RInterval::max(eb.C2, eb.C1 * lx.pow_ui(4));
    return n_bound.ceil_upper();
}

mpz_class search_bound(const RecurrenceSequence& seq, const mpz_class& x,
                       mpfr_prec_t prec) {
    return search_bound(seq, x, derive_constants_refined(seq, prec));
}

mpz_class gap_bound(const RecurrenceSequence& seq, const mpz_class& x,
                    unsigned long q, const EffectiveBounds& eb) {
    (void)seq;
    if (x < 2) throw InvalidInput("gap_bound: x must be >= 2");
    if (q < 2) throw InvalidInput("gap_bound: q must be >= 2");
    mpfr_prec_t p = eb.precision_bits;
    RInterval lx = RInterval::from_mpz(x, p).log();
    RInterval lq = RInterval::from_long(long(q), p).log();
    RInterval g = RInterval::max(
        RInterval::max(eb.g0, eb.n2),
        RInterval::max(eb.c4gap, eb.c2 * lq * lx));
    return g.ceil_upper();
}

mpz_class gap_bound(const RecurrenceSequence& seq, const mpz_class& x,
                    unsigned long q) {
    return gap_bound(seq, x, q, derive_constants_refined(seq));
}

double invert_log_power(unsigned m, double T) {
    if (m < 1) throw InvalidInput("invert_log_power: m must be >= 1");
    mpfr_prec_t p = 128;
    // threshold (4 m^2)^m, exact integer
    mpz_class thr;
    mpz_ui_pow_ui(thr.get_mpz_t(), 4ul * m * m, m);
    RInterval Ti = RInterval::from_mpq(mpq_class(T), p);
    if (!(RInterval::from_mpz(thr, p).definitely_lt(Ti)))
        throw HypothesisViolated("invert_log_power: need T > (4m^2)^m = " + thr.get_str());
    mpz_class two_m;
    mpz_ui_pow_ui(two_m.get_mpz_t(), 2, m);
    RInterval r = RInterval::from_mpz(two_m, p) * Ti * Ti.log().pow_ui(m);
    return r.hi_d();
}

RInterval binet_eval(const RecurrenceSequence& seq, unsigned long n,
                     mpfr_prec_t prec) {
    const mpfr_prec_t p = prec;
    RInterval sqrtD = RInterval::from_mpz(seq.D, p).sqrt();
    RInterval alpha = eval_quad(seq.alpha, sqrtD, p);
    RInterval beta_abs = eval_quad(seq.beta, sqrtD, p).abs();
    RInterval a1 = eval_quad(seq.a1, sqrtD, p);
    RInterval a2 = eval_quad(seq.a2, sqrtD, p);
    RInterval bpow = beta_abs.pow_ui(n);
    // beta < 0 exactly when Q > 0
    if (seq.Q > 0 && (n & 1)) bpow = -bpow;
    return (a1 * alpha.pow_ui(n) - a2 * bpow) / sqrtD;
}

RInterval sum_envelope(const RecurrenceSequence& seq, unsigned long n,
                       const EffectiveBounds& eb) {
    mpfr_prec_t p = eb.precision_bits;
    RInterval sqrtD = RInterval::from_mpz(seq.D, p).sqrt();
    RInterval alpha = eval_quad(seq.alpha, sqrtD, p);
    return eb.c1 * alpha.pow_ui(n);
}

} // namespace rpl
