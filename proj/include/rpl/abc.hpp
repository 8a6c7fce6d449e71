#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "rpl/interval.hpp"
#include "rpl/sequence.hpp"

namespace rpl {

// The exact integers behind the square identity:
// X^2 - D (U_n + U_m)^2 = Y with X = W_n + W_m, and d = gcd(X^2, D S^2),
// which always divides Y.
struct XYRecord {
    unsigned long n = 0, m = 0;
    mpz_class X; // W_n + W_m
    mpz_class S; // U_n + U_m
    mpz_class Y; // X^2 - D S^2
    mpz_class d; // gcd(X^2, D S^2); gcd(t, 0) = t convention
};

// Candidate abc triple A + B = C built from an XYRecord by dividing
// through by d: A = Y/d, B = D S^2/d, C = X^2/d.
struct AbcTriple {
    mpz_class A, B, C;
    bool reduced = false;       // pairwise coprime after extra reduction
    mpz_class residual_gcd = 1; // extra factor divided out when reduced
    mpz_class rad;              // radical(|A B C|), or an upper bound
    double quality = 0.0;       // log max(|A|,|B|,|C|) / log rad
    bool complete_factorization = true; // false => quality is a lower bound
};

// X, S, Y, d for a pair n >= m, with Y cross-checked against the exact
// closed form 4 a1 a2 (-Q)^n (1 + alpha^(m-n))(1 + beta^(m-n)) in Q(sqrt D).
XYRecord xy_pair(const RecurrenceSequence& seq, unsigned long n, unsigned long m);

// The closed form above as an interval (used by the envelope checks).
RInterval closed_form_y(const RecurrenceSequence& seq, unsigned long n,
                        unsigned long m, mpfr_prec_t prec = 128);

// Builds the triple from a pair. Throws ZeroTerm on degenerate
// cancellation (Y = 0, S = 0 or X = 0, which would zero a leg).
AbcTriple triple(const RecurrenceSequence& seq, unsigned long n, unsigned long m,
                 bool enforce_coprime, long factor_budget_ms = 2000);

struct QualityEntry {
    unsigned long n = 0, m = 0;
    XYRecord record;
    AbcTriple trip;
};

struct QualityReport {
    std::string sequence;
    unsigned long n_max = 0;
    unsigned long skipped_degenerate = 0; // pairs with Y = 0, S = 0 or X = 0
    bool abc_conjectural = true;          // labeling only; nothing is asserted
    std::vector<QualityEntry> entries;    // ranked by (quality desc, n, m)
};

// Ranked top-quality triples over m <= n <= n_max. OpenMP-parallel over n;
// the merge order is deterministic.
QualityReport scan_quality(const RecurrenceSequence& seq, unsigned long n_max,
                           std::size_t top_k = 25, bool enforce_coprime = true,
                           long factor_budget_ms = 2000);

// Serial reference implementation (testing and benchmark comparison).
QualityReport scan_quality_serial(const RecurrenceSequence& seq, unsigned long n_max,
                                  std::size_t top_k = 25, bool enforce_coprime = true,
                                  long factor_budget_ms = 2000);

// Empirical stand-ins for the non-effective lower-bound constants.
// NOT rigorous: quarantined from the certified trace by construction.
struct LowerConstEstimate {
    unsigned long d3_emp = 0;            // = n_min
    RInterval d4_emp;                    // min |U_n+U_m| / alpha^n over the range
    std::optional<RInterval> d5_emp;     // 1/(log alpha + log(d4)/n_min) if positive
    bool rigorous = false;               // always false
};

// Throws ZeroEncountered (with the witness pair) if some U_n + U_m = 0.
LowerConstEstimate estimate_lower_constants(const RecurrenceSequence& seq,
                                            unsigned long n_min, unsigned long n_max,
                                            mpfr_prec_t prec = 128);

} // namespace rpl
