#include "rpl/power.hpp"

#include "rpl/errors.hpp"

namespace rpl {

std::pair<mpz_class, bool> int_root(const mpz_class& s, unsigned long q) {
    if (s < 1) throw InvalidInput("int_root: s must be >= 1");
    if (q < 2) throw InvalidInput("int_root: q must be >= 2");
    mpz_class r;
    int exact = mpz_root(r.get_mpz_t(), s.get_mpz_t(), q);
    return {r, exact != 0};
}

std::vector<PowerRepr> perfect_power(const mpz_class& s) {
    if (s < 4) throw InvalidInput("perfect_power: s must be >= 4");
    std::vector<PowerRepr> out;
    if (!mpz_perfect_power_p(s.get_mpz_t()))
        return out;
    unsigned long qmax = mpz_sizeinbase(s.get_mpz_t(), 2) - 1; // floor(log2 s)
    for (unsigned long q = qmax; q >= 2; --q) {
        auto [r, exact] = int_root(s, q);
        if (exact && r >= 2) out.push_back({r, q});
    }
    return out;
}

std::optional<unsigned long> is_power_of(const mpz_class& s, const mpz_class& x) {
    if (x < 2) throw InvalidInput("is_power_of: x must be >= 2");
    if (s < x * x) return std::nullopt; // q >= 2 forces s >= x^2
    mpz_class rem = s;
    unsigned long q = 0;
    while (mpz_divisible_p(rem.get_mpz_t(), x.get_mpz_t())) {
        mpz_divexact(rem.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t());
        ++q;
        if (rem == 1) return q >= 2 ? std::optional<unsigned long>(q) : std::nullopt;
    }
    return std::nullopt;
}

} // namespace rpl
