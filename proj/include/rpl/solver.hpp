#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "rpl/sequence.hpp"

namespace rpl {

// One tuple (n, m, x, q) with U_n + U_m = x^q, n >= m >= 0, x >= 2, q >= 2.
struct Solution {
    unsigned long n = 0;
    unsigned long m = 0;
    mpz_class x;
    unsigned long q = 0;
    mpz_class value; // U_n + U_m = x^q
    bool certified_complete = false;

    bool operator==(const Solution&) const = default;
};

enum class SearchMode { fixed_x, unconstrained };

struct SolutionSet {
    std::string sequence;   // "P,Q,U0,U1"
    SearchMode mode = SearchMode::unconstrained;
    unsigned long n_bound_used = 0;
    std::optional<mpz_class> theorem_bound; // N from Theorem 1.1, when derived
    std::vector<Solution> solutions;        // sorted by (n, m, q, x)
};

// Complete certified enumeration for fixed x: derives N = search_bound,
// enumerates n <= min(N, n_cap, n_max_hard) with a precomputed sorted
// power table (one binary search per pair instead of a power test), and
// marks certified_complete when the enumeration reached N.
// OpenMP-parallel over n; results are merged in deterministic order.
SolutionSet solve_fixed_x(const RecurrenceSequence& seq, const mpz_class& x,
                          std::optional<unsigned long> n_cap = std::nullopt);

// Desk-scale probe: all (n, m, x, q) with n <= n_max and U_n + U_m a
// perfect power, one Solution per representation. Never certified.
SolutionSet brute_search(const RecurrenceSequence& seq, unsigned long n_max,
                         std::optional<unsigned long> q_max = std::nullopt);

// Serial reference implementation of the same enumeration; kept for
// testing and for the benchmark comparison.
SolutionSet brute_search_serial(const RecurrenceSequence& seq, unsigned long n_max,
                                std::optional<unsigned long> q_max = std::nullopt);

// Recomputes U_n, U_m by fast doubling and x^q by binary exponentiation;
// true iff every Solution invariant holds.
bool verify_solution(const RecurrenceSequence& seq, const Solution& sol);

// The infinite family (4k, 0, U_{2k}, 2) for U_0 = 2, U_1 = P, |Q| = 1.
struct FamilyResult {
    RecurrenceSequence seq;           // (P, Q, 2, P)
    std::vector<Solution> solutions;  // k = 1..k_max, each verified
    bool identity_ok = false;         // U_{2n} = U_n^2 - 2(-Q)^n, n <= 2 k_max
};

// Throws HypothesisViolated if |Q| != 1 or P^2 + 4Q <= 0.
FamilyResult family_remark(const mpz_class& P, const mpz_class& Q,
                           unsigned long k_max);

} // namespace rpl
