#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "rpl/interval.hpp"
#include "rpl/quad.hpp"
#include "rpl/sequence.hpp"

namespace rpl {

struct TraceEntry {
    std::string name;
    std::string formula;
    RInterval value;
};

// The derived constant chain for one sequence, as rigorous intervals.
// Every downstream entry is computed only from upstream entries; the
// trace records the chain in derivation order.
struct EffectiveBounds {
    mpfr_prec_t precision_bits = 128;

    // paper-named constants
    RInterval c0;   // (|a1| + |a2|) / sqrt(D)
    RInterval c1;   // 2 c0
    RInterval d1;   // 2 log alpha
    RInterval d2;   // max{0, log c1 / log alpha}
    RInterval c4;   // zero-linear-form exclusion bound
    RInterval c2;   // gap constant: n - m <= c2 log q log x (Matveev branch)
    RInterval C1;   // n < C1 (log x)^4 for n > C2
    RInterval C2;   // max{d2, c4, 3}

    // auxiliaries needed by gap_bound
    RInterval g0;     // gap split: no cancellation once n - m > g0
    RInterval n2;     // index floor for the restricted lower bound
    RInterval c4gap;  // Lambda_1 = 0 exclusion
    RInterval ghat;   // unconditional gap coefficient: n - m <= ghat log q log x

    std::vector<TraceEntry> trace;

    const RInterval& find(const std::string& name) const;
};

// Matveev's lower bound |Lambda| >= exp(-E) for a linear form in t
// logarithms over a degree-dL real field.
struct MatveevInput {
    unsigned t = 1;
    unsigned dL = 1;
    RInterval B;               // >= max|b_i|, >= 1
    std::vector<RInterval> A;  // size t, each >= 0.16
};

// Absolute logarithmic height of a (possibly rational) quadratic element.
// For rational p/q in lowest terms this is log max{|p|, q}, with outward
// rounding. Throws ZeroInput on x = 0.
RInterval height_quadratic(const QuadElem& x, mpfr_prec_t prec = 128);

// E = 1.4 * 30^(t+3) * t^4.5 * dL^2 (1 + log dL)(1 + log B) A_1...A_t,
// monotone nondecreasing in B and in each A_j.
RInterval matveev_bound(const MatveevInput& in);

// One derivation pass at a fixed working precision.
EffectiveBounds derive_constants(const RecurrenceSequence& seq,
                                 mpfr_prec_t prec = 128);

// Doubles precision until every trace interval has relative width below
// target (or max_prec is hit, which throws).
EffectiveBounds derive_constants_refined(const RecurrenceSequence& seq,
                                         mpfr_prec_t start_prec = 128,
                                         double target_rel_width = 1e-12,
                                         mpfr_prec_t max_prec = 1 << 16);

// Certified N with every solution of U_n + U_m = x^q satisfying
// max{n, m, q} <= N; computed as ceil(max(upper(C2), upper(C1 (log x)^4))).
mpz_class search_bound(const RecurrenceSequence& seq, const mpz_class& x,
                       const EffectiveBounds& eb);
mpz_class search_bound(const RecurrenceSequence& seq, const mpz_class& x,
                       mpfr_prec_t prec = 128);

// Certified G >= c2 log q log x such that every solution with the given
// (x, q) has n - m <= G.
mpz_class gap_bound(const RecurrenceSequence& seq, const mpz_class& x,
                    unsigned long q, const EffectiveBounds& eb);
mpz_class gap_bound(const RecurrenceSequence& seq, const mpz_class& x,
                    unsigned long q);

// 2^m T (log T)^m as an upper-rounded double; hypothesis T > (4 m^2)^m.
// Throws HypothesisViolated at or below the threshold.
double invert_log_power(unsigned m, double T);

// Binet evaluation (a1 alpha^n - a2 beta^n)/sqrt(D) in interval
// arithmetic; contains the exact integer U_n at any precision.
RInterval binet_eval(const RecurrenceSequence& seq, unsigned long n,
                     mpfr_prec_t prec = 128);

// Interval envelope c1 * alpha^n (upper bound check for |U_n + U_m|).
RInterval sum_envelope(const RecurrenceSequence& seq, unsigned long n,
                       const EffectiveBounds& eb);

} // namespace rpl
