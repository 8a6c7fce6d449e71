#pragma once

#include <gmpxx.h>

#include <vector>

namespace rpl {

inline constexpr long kFactorBudgetMsDefault = 2000;

// Possibly-partial factorization. prime_factors is sorted by prime;
// unfactored holds composite cofactors left when the budget ran out.
// Multiplying everything back always reproduces the input.
struct Factorization {
    std::vector<std::pair<mpz_class, unsigned long>> prime_factors;
    std::vector<mpz_class> unfactored;
    bool complete() const { return unfactored.empty(); }
    // Product of the distinct primes, times any unfactored cofactors.
    // Equals rad(k) when complete; otherwise an upper bound >= rad(k).
    mpz_class radical_bound() const;
};

// Trial division to 10^6, then Pollard-Brent rho with BPSW/Miller-Rabin
// primality testing on cofactors. Deterministic for a given input.
// k >= 1; budget_ms <= 0 means "trial division only".
Factorization factorize(const mpz_class& k, long budget_ms = kFactorBudgetMsDefault);

// Product of the distinct primes dividing k; rad(1) = 1.
// Throws FactorizationTimeout if the factorization is incomplete.
mpz_class radical(const mpz_class& k, long budget_ms = kFactorBudgetMsDefault);

bool is_probable_prime(const mpz_class& n);

} // namespace rpl
