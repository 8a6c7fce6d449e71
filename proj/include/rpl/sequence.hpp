#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "rpl/quad.hpp"

namespace rpl {

inline constexpr unsigned long kNMaxHardDefault = 1'000'000;

// Validated binary recurrence U_n = P U_{n-1} + Q U_{n-2} with its derived
// exact data. Immutable after construction; safe to share across threads.
struct RecurrenceSequence {
    mpz_class P, Q, U0, U1;
    mpz_class D;          // P^2 + 4Q, > 0
    QuadElem alpha;       // (P + sqrt(D))/2, the dominant root (alpha > |beta|)
    QuadElem beta;        // (P - sqrt(D))/2
    QuadElem a1;          // U1 - U0*beta
    QuadElem a2;          // U1 - U0*alpha
    mpz_class a1a2_int;   // U1^2 - P*U0*U1 - Q*U0^2, nonzero
    unsigned long n_max_hard = kNMaxHardDefault;

    std::string descriptor() const; // "P,Q,U0,U1"
};

// Validates the standing hypotheses and fills in the derived fields.
// Throws DegenerateSequence on: PQ = 0, U0 = U1 = 0, D <= 0, P < 0 (no
// dominant labeling with sqrt(D) = alpha - beta > 0), alpha <= 1, or
// a1*a2 = 0. A perfect-square D is accepted (alpha, beta rational and
// distinct).
RecurrenceSequence make_sequence(const mpz_class& P, const mpz_class& Q,
                                 const mpz_class& U0, const mpz_class& U1,
                                 unsigned long n_max_hard = kNMaxHardDefault);

// Exact U_n by 2x2 companion-matrix power (O(log n) bigint multiplies).
mpz_class term(const RecurrenceSequence& seq, unsigned long n);

// W_n = a1*alpha^n + a2*beta^n, the integer companion of U_n:
// W_n^2 - D U_n^2 = 4 (-Q)^n a1a2. W_n = U1 V_n + Q U0 V_{n-1} with V the
// Lucas companion (V_0 = 2, V_1 = P); W_0 = 2 U1 - P U0.
mpz_class companion_term(const RecurrenceSequence& seq, unsigned long n);

// U_0 .. U_n in one sweep (linear recurrence); used by the scan kernels.
std::vector<mpz_class> term_table(const RecurrenceSequence& seq, unsigned long n_max);
std::vector<mpz_class> companion_table(const RecurrenceSequence& seq, unsigned long n_max);

struct ValidationCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass() const;
};

// Itemized pass/fail for each standing hypothesis, without throwing.
// The alpha/beta root-of-unity test is exact: with D > 0 the ratio is
// real, so it is a root of unity only if alpha = +-beta, i.e. D = 0 or
// P = 0, both excluded by earlier checks.
ValidationReport check_nondegenerate(const mpz_class& P, const mpz_class& Q,
                                     const mpz_class& U0, const mpz_class& U1);

struct ChebyshevEval {
    unsigned long degree;
    mpz_class argument;
    mpz_class value; // T_degree(argument) with T_0 = 2, T_1 = x
};

// T_n(x) with T_0 = 2, T_1 = x, T_{n+1} = x T_n - T_{n-1}.
mpz_class chebyshev_eval(unsigned long n, const mpz_class& x);

enum class Parity { even, odd };
enum class Condition17 { holds, fails };

// Exact integer test of the exceptional-case condition: "fails" iff
// (-1)^(n+1) * D * U_m^2 == 4 * a1a2. Throws ZeroProduct if a1a2 = 0.
Condition17 condition_17(const RecurrenceSequence& seq, Parity n_parity,
                         unsigned long m);

} // namespace rpl
