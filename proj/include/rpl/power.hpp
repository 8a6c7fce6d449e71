#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace rpl {

// s = base^exponent with base >= 2, exponent >= 2.
struct PowerRepr {
    mpz_class base;
    unsigned long exponent;
    bool operator==(const PowerRepr&) const = default;
};

// floor(s^(1/q)) and whether the root is exact. s >= 1, q >= 2.
std::pair<mpz_class, bool> int_root(const mpz_class& s, unsigned long q);

// All representations s = x^q with x >= 2, q >= 2, sorted by exponent
// descending (the first entry is the canonical maximal-exponent form).
// Empty if s is not a perfect power. Requires s >= 4.
std::vector<PowerRepr> perfect_power(const mpz_class& s);

// The unique q >= 2 with x^q = s, if any. q = 0, 1 are rejected by the
// side conditions, so is_power_of(x, x) is nullopt.
std::optional<unsigned long> is_power_of(const mpz_class& s, const mpz_class& x);

} // namespace rpl
