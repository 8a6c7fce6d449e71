#include "rpl/abc.hpp"

#include <algorithm>
#include <cmath>

#include "rpl/errors.hpp"
#include "rpl/factor.hpp"

namespace rpl {

namespace {

// 4 a1 a2 (-Q)^n (1 + alpha^(m-n)) (1 + beta^(m-n)) evaluated exactly in
// Q[X]/(X^2 - D). alpha^(m-n) = beta^(n-m)/(-Q)^(n-m) avoids inversions.
QuadElem closed_form_y_exact(const RecurrenceSequence& seq, unsigned long n,
                             unsigned long m) {
    const mpz_class& D = seq.D;
    unsigned long k = n - m;
    QuadElem one = QuadElem::from_int(1, D);
    mpz_class negq_k, negq_n;
    mpz_class negQ = -seq.Q;
    mpz_pow_ui(negq_k.get_mpz_t(), negQ.get_mpz_t(), k);
    mpz_pow_ui(negq_n.get_mpz_t(), negQ.get_mpz_t(), n);
    QuadElem inv_negq_k(mpq_class(1) / mpq_class(negq_k), mpq_class(0), D);

    QuadElem alpha_mn = seq.beta.pow(k) * inv_negq_k;  // alpha^(m-n)
    QuadElem beta_mn = seq.alpha.pow(k) * inv_negq_k;  // beta^(m-n)
    QuadElem a1a2(mpq_class(seq.a1a2_int), mpq_class(0), D);
    QuadElem scale(mpq_class(4 * negq_n), mpq_class(0), D);
    return scale * a1a2 * (one + alpha_mn) * (one + beta_mn);
}

// log of a big integer without overflowing double range
double log_mpz(const mpz_class& v) {
    signed long e;
    double d = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(std::fabs(d)) + double(e) * std::log(2.0);
}

double quality_of(const mpz_class& A, const mpz_class& B, const mpz_class& C,
                  const mpz_class& rad) {
    mpz_class mx = abs(A);
    if (abs(B) > mx) mx = abs(B);
    if (abs(C) > mx) mx = abs(C);
    if (rad < 2) return 0.0; // cannot happen for a genuine triple; guard anyway
    return log_mpz(mx) / log_mpz(rad);
}

} // namespace

XYRecord xy_pair(const RecurrenceSequence& seq, unsigned long n, unsigned long m) {
    if (m > n) throw InvalidInput("xy_pair: need n >= m");
    XYRecord r;
    r.n = n;
    r.m = m;
    r.X = companion_term(seq, n) + companion_term(seq, m);
    r.S = term(seq, n) + term(seq, m);
    mpz_class x2 = r.X * r.X;
    mpz_class ds2 = seq.D * r.S * r.S;
    r.Y = x2 - ds2;
    r.d = gcd(x2, ds2); // gcd(t, 0) = t, so d = X^2 when S = 0

    QuadElem closed = closed_form_y_exact(seq, n, m);
    if (closed.surd_part() != 0 || closed.rational_part() != mpq_class(r.Y))
        throw Error("xy_pair: closed form disagrees with X^2 - D S^2 at (" +
                    std::to_string(n) + "," + std::to_string(m) + ")");
    return r;
}

RInterval closed_form_y(const RecurrenceSequence& seq, unsigned long n,
                        unsigned long m, mpfr_prec_t prec) {
    if (m > n) throw InvalidInput("closed_form_y: need n >= m");
    const mpfr_prec_t p = prec;
    unsigned long k = n - m;
    RInterval one = RInterval::from_long(1, p);
    RInterval sqrtD = RInterval::from_mpz(seq.D, p).sqrt();
    RInterval alpha = RInterval::from_mpq(seq.alpha.rational_part(), p) +
                      RInterval::from_mpq(seq.alpha.surd_part(), p) * sqrtD;
    RInterval beta_abs = (RInterval::from_mpq(seq.beta.rational_part(), p) +
                          RInterval::from_mpq(seq.beta.surd_part(), p) * sqrtD)
                             .abs();
    RInterval alpha_mn = one / alpha.pow_ui(k);
    RInterval beta_mn = one / beta_abs.pow_ui(k);
    if (seq.Q > 0 && (k & 1)) beta_mn = -beta_mn; // sign of beta^(m-n)
    mpz_class negq_n;
    mpz_class negQ = -seq.Q;
    mpz_pow_ui(negq_n.get_mpz_t(), negQ.get_mpz_t(), n);
    RInterval scale = RInterval::from_mpz(4 * negq_n * seq.a1a2_int, p);
    return scale * (one + alpha_mn) * (one + beta_mn);
}

AbcTriple triple(const RecurrenceSequence& seq, unsigned long n, unsigned long m,
                 bool enforce_coprime, long factor_budget_ms) {
    XYRecord r = xy_pair(seq, n, m);
    if (r.Y == 0)
        throw ZeroTerm("triple: Y = 0 at (" + std::to_string(n) + "," +
                       std::to_string(m) + ")");
    if (r.S == 0 || r.X == 0)
        throw ZeroTerm("triple: degenerate leg (S or X vanishes) at (" +
                       std::to_string(n) + "," + std::to_string(m) + ")");

    AbcTriple t;
    t.A = r.Y / r.d;
    t.B = seq.D * r.S * r.S / r.d;
    t.C = r.X * r.X / r.d;
    if (enforce_coprime) {
        mpz_class g = gcd(t.A, t.B);
        if (g > 1) {
            t.A /= g;
            t.B /= g;
            t.C /= g;
        }
        t.residual_gcd = g;
        t.reduced = true;
    }

    // radical of |A*B*C| = union of the primes of the three legs
    long each = factor_budget_ms / 3 + 1;
    Factorization fa = factorize(abs(t.A), each);
    Factorization fb = factorize(abs(t.B), each);
    Factorization fc = factorize(abs(t.C), each);
    t.complete_factorization = fa.complete() && fb.complete() && fc.complete();
    std::vector<mpz_class> primes;
    for (const auto* f : {&fa, &fb, &fc}) {
        for (const auto& [pp, e] : f->prime_factors) primes.push_back(pp);
        for (const auto& c : f->unfactored) primes.push_back(c); // upper bound
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    t.rad = 1;
    for (const auto& pp : primes) t.rad *= pp;
    t.quality = quality_of(t.A, t.B, t.C, t.rad);
    return t;
}

namespace {

QualityReport scan_common(const RecurrenceSequence& seq, unsigned long n_max,
                          std::size_t top_k, bool enforce_coprime,
                          long factor_budget_ms, bool parallel) {
    std::vector<std::vector<QualityEntry>> per_n(n_max + 1);
    std::vector<unsigned long> skipped(n_max + 1, 0);

    auto scan_row = [&](unsigned long n) {
        for (unsigned long m = 0; m <= n; ++m) {
            try {
                QualityEntry e;
                e.n = n;
                e.m = m;
                e.record = xy_pair(seq, n, m);
                e.trip = triple(seq, n, m, enforce_coprime, factor_budget_ms);
                per_n[n].push_back(std::move(e));
            } catch (const ZeroTerm&) {
                ++skipped[n];
            }
        }
    };

    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long n = 0; n <= long(n_max); ++n) scan_row((unsigned long)n);
    } else {
        for (unsigned long n = 0; n <= n_max; ++n) scan_row(n);
    }

    QualityReport rep;
    rep.sequence = seq.descriptor();
    rep.n_max = n_max;
    for (unsigned long n = 0; n <= n_max; ++n) {
        rep.skipped_degenerate += skipped[n];
        rep.entries.insert(rep.entries.end(), per_n[n].begin(), per_n[n].end());
    }
    std::stable_sort(rep.entries.begin(), rep.entries.end(),
                     [](const QualityEntry& a, const QualityEntry& b) {
                         if (a.trip.quality != b.trip.quality)
                             return a.trip.quality > b.trip.quality;
                         if (a.n != b.n) return a.n < b.n;
                         return a.m < b.m;
                     });
    if (rep.entries.size() > top_k) rep.entries.resize(top_k);
    return rep;
}

} // namespace

QualityReport scan_quality(const RecurrenceSequence& seq, unsigned long n_max,
                           std::size_t top_k, bool enforce_coprime,
                           long factor_budget_ms) {
    return scan_common(seq, n_max, top_k, enforce_coprime, factor_budget_ms, true);
}

QualityReport scan_quality_serial(const RecurrenceSequence& seq, unsigned long n_max,
                                  std::size_t top_k, bool enforce_coprime,
                                  long factor_budget_ms) {
    return scan_common(seq, n_max, top_k, enforce_coprime, factor_budget_ms, false);
}

LowerConstEstimate estimate_lower_constants(const RecurrenceSequence& seq,
                                            unsigned long n_min, unsigned long n_max,
                                            mpfr_prec_t prec) {
    if (n_min >= n_max)
        throw InvalidInput("estimate_lower_constants: need n_min < n_max");
    const mpfr_prec_t p = prec;
    std::vector<mpz_class> t = term_table(seq, n_max);

    RInterval sqrtD = RInterval::from_mpz(seq.D, p).sqrt();
    RInterval alpha = RInterval::from_mpq(seq.alpha.rational_part(), p) +
                      RInterval::from_mpq(seq.alpha.surd_part(), p) * sqrtD;

    LowerConstEstimate est;
    est.d3_emp = n_min;
    bool first = true;
    for (unsigned long n = n_min; n <= n_max; ++n) {
        RInterval apow = alpha.pow_ui(n);
        for (unsigned long m = n_min; m <= n; ++m) {
            mpz_class s = t[n] + t[m];
            if (s == 0)
                throw ZeroEncountered(long(n), long(m),
                                      "U_n + U_m = 0 at (" + std::to_string(n) +
                                          "," + std::to_string(m) + ")");
            RInterval ratio = RInterval::from_mpz(abs(s), p) / apow;
            if (first || mpfr_cmp(ratio.lo_raw(), est.d4_emp.lo_raw()) < 0) {
                est.d4_emp = ratio;
                first = false;
            }
        }
    }

    // From d4 alpha^n < x^q: n/q < log x / (log alpha + log(d4)/n), and the
    // denominator is smallest at n = n_min when d4 < 1.
    RInterval denom = alpha.log() +
                      est.d4_emp.log() / RInterval::from_long(long(n_min), p);
    if (denom.is_positive())
        est.d5_emp = RInterval::from_long(1, p) / denom;
    est.rigorous = false;
    return est;
}

} // namespace rpl
