// Naive reference implementations, written independently of the library
// paths they check: plain iteration for terms, double loops for power
// detection, trial division for radicals.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

inline std::vector<mpz_class> terms(long P, long Q, long U0, long U1, unsigned long n_max) {
    std::vector<mpz_class> t{mpz_class(U0), mpz_class(U1)};
    for (unsigned long n = 2; n <= n_max; ++n)
        t.push_back(P * t[n - 1] + Q * t[n - 2]);
    t.resize(n_max + 1);
    return t;
}

// All (x, q) with x^q = s, x >= 2, q >= 2, by forward double loop up to bound.
inline std::map<mpz_class, std::vector<std::pair<mpz_class, unsigned long>>>
power_map(const mpz_class& bound) {
    std::map<mpz_class, std::vector<std::pair<mpz_class, unsigned long>>> m;
    for (mpz_class x = 2; x * x <= bound; ++x) {
        mpz_class p = x * x;
        unsigned long q = 2;
        while (p <= bound) {
            m[p].emplace_back(x, q);
            p *= x;
            ++q;
        }
    }
    return m;
}

using SolutionTuple = std::tuple<unsigned long, unsigned long, mpz_class, unsigned long>;

// (n, m, x, q) with U_n + U_m = x^q >= 4, by the naive scan.
inline std::set<SolutionTuple> brute(long P, long Q, long U0, long U1,
                                     unsigned long n_max) {
    auto t = terms(P, Q, U0, U1, n_max);
    mpz_class bound = 4;
    for (unsigned long n = 0; n <= n_max; ++n)
        for (unsigned long m = 0; m <= n; ++m)
            if (t[n] + t[m] > bound) bound = t[n] + t[m];
    auto powers = power_map(bound);
    std::set<SolutionTuple> out;
    for (unsigned long n = 0; n <= n_max; ++n)
        for (unsigned long m = 0; m <= n; ++m) {
            mpz_class s = t[n] + t[m];
            if (s < 4) continue;
            auto it = powers.find(s);
            if (it == powers.end()) continue;
            for (const auto& [x, q] : it->second) out.insert({n, m, x, q});
        }
    return out;
}

inline mpz_class radical_trial(mpz_class k) {
    mpz_class r = 1;
    for (mpz_class p = 2; p * p <= k; ++p)
        if (k % p == 0) {
            r *= p;
            while (k % p == 0) k /= p;
        }
    if (k > 1) r *= k;
    return r;
}

} // namespace oracle
