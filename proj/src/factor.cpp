#include "rpl/factor.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "rpl/errors.hpp"

namespace rpl {

namespace {

using Clock = std::chrono::steady_clock;

constexpr unsigned long kTrialLimit = 1'000'000;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<unsigned long> ps;
        for (unsigned long i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (unsigned long j = i * i; j <= kTrialLimit; j += i)
                composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

// One Pollard-Brent run; returns a nontrivial factor or 0 on failure /
// deadline. Deterministic: the parameters are derived from n and the
// attempt counter.
mpz_class brent_rho(const mpz_class& n, unsigned attempt, Clock::time_point deadline) {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x5eedf00dUL + attempt * 0x9e3779b9UL + mpz_fdiv_ui(n.get_mpz_t(), 1000003));

    mpz_class y = rng.get_z_range(n - 3) + 2;
    mpz_class c = rng.get_z_range(n - 3) + 1;
    mpz_class x, ys, q = 1, g = 1;
    const unsigned long step = 128;
    unsigned long r = 1;

    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i)
            y = (y * y + c) % n;
        unsigned long k = 0;
        while (k < r && g == 1) {
            if (Clock::now() > deadline) return 0;
            ys = y;
            unsigned long lim = std::min(step, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                mpz_class d = x - y;
                q = q * (d < 0 ? -d : d) % n;
            }
            g = gcd(q, n);
            k += lim;
        }
        r <<= 1;
    }
    if (g == n) {
        // backtrack to recover the factor the batching skipped over
        do {
            ys = (ys * ys + c) % n;
            mpz_class d = x - ys;
            g = gcd(mpz_class(d < 0 ? -d : d), n);
        } while (g == 1);
    }
    if (g == n) return 0;
    return g;
}

void factor_rec(const mpz_class& n, std::map<mpz_class, unsigned long>& primes,
                std::vector<mpz_class>& unfactored, Clock::time_point deadline) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++primes[n];
        return;
    }
    // rho stalls on proper powers; peel the root first
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long q = 2; q <= mpz_sizeinbase(n.get_mpz_t(), 2); ++q) {
            mpz_class r;
            if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), q)) {
                std::map<mpz_class, unsigned long> sub;
                factor_rec(r, sub, unfactored, deadline);
                for (auto& [p, e] : sub) primes[p] += e * q;
                return;
            }
        }
    }
    for (unsigned attempt = 0; attempt < 32; ++attempt) {
        if (Clock::now() > deadline) break;
        mpz_class d = brent_rho(n, attempt, deadline);
        if (d != 0) {
            factor_rec(d, primes, unfactored, deadline);
            factor_rec(n / d, primes, unfactored, deadline);
            return;
        }
    }
    unfactored.push_back(n);
}

} // namespace

bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

mpz_class Factorization::radical_bound() const {
    mpz_class r = 1;
    for (const auto& [p, e] : prime_factors) r *= p;
    for (const auto& c : unfactored) r *= c;
    return r;
}

Factorization factorize(const mpz_class& k, long budget_ms) {
    if (k < 1) throw InvalidInput("factorize: k must be >= 1");
    auto deadline = Clock::now() + std::chrono::milliseconds(std::max(budget_ms, 0L));

    std::map<mpz_class, unsigned long> primes;
    std::vector<mpz_class> unfactored;
    mpz_class rem = k;

    for (unsigned long p : small_primes()) {
        if (rem == 1) break;
        if (mpz_class(p) * p > rem) break;
        while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
            mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
            ++primes[p];
        }
    }
    if (rem > 1) {
        if (rem <= mpz_class(kTrialLimit) * kTrialLimit && rem != 1) {
            // below the trial square, the leftover is prime
            ++primes[rem];
        } else {
            factor_rec(rem, primes, unfactored, deadline);
        }
    }

    Factorization f;
    f.prime_factors.assign(primes.begin(), primes.end());
    std::sort(unfactored.begin(), unfactored.end());
    f.unfactored = std::move(unfactored);
    return f;
}

mpz_class radical(const mpz_class& k, long budget_ms) {
    Factorization f = factorize(k, budget_ms);
    if (!f.complete())
        throw FactorizationTimeout("radical(" + k.get_str() +
                                   "): factorization budget exhausted");
    return f.radical_bound();
}

} // namespace rpl
