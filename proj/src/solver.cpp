#include "rpl/solver.hpp"

#include <algorithm>

#include "rpl/bounds.hpp"
#include "rpl/errors.hpp"
#include "rpl/power.hpp"

namespace rpl {

namespace {

bool solution_less(const Solution& a, const Solution& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.m != b.m) return a.m < b.m;
    if (a.q != b.q) return a.q < b.q;
    return a.x < b.x;
}

void sort_solutions(std::vector<Solution>& v) {
    std::sort(v.begin(), v.end(), solution_less);
}

// Scans one n against all m <= n. Shared by the parallel and serial paths.
template <typename Emit>
void brute_scan_row(const std::vector<mpz_class>& t, unsigned long n,
                    std::optional<unsigned long> q_max, Emit&& emit) {
    for (unsigned long m = 0; m <= n; ++m) {
        mpz_class s = t[n] + t[m];
        if (s < 4) continue; // x >= 2, q >= 2 force x^q >= 4
        for (const auto& pr : perfect_power(s)) {
            if (q_max && pr.exponent > *q_max) continue;
            emit(Solution{n, m, pr.base, pr.exponent, s, false});
        }
    }
}

} // namespace

SolutionSet brute_search(const RecurrenceSequence& seq, unsigned long n_max,
                         std::optional<unsigned long> q_max) {
    std::vector<mpz_class> t = term_table(seq, n_max);
    std::vector<std::vector<Solution>> per_n(n_max + 1);

#pragma omp parallel for schedule(dynamic)
    for (long n = 0; n <= long(n_max); ++n)
        brute_scan_row(t, (unsigned long)n, q_max,
                       [&](Solution s) { per_n[n].push_back(std::move(s)); });

    SolutionSet out;
    out.sequence = seq.descriptor();
    out.mode = SearchMode::unconstrained;
    out.n_bound_used = n_max;
    for (auto& bucket : per_n) {
        sort_solutions(bucket);
        out.solutions.insert(out.solutions.end(), bucket.begin(), bucket.end());
    }
    return out;
}

SolutionSet brute_search_serial(const RecurrenceSequence& seq, unsigned long n_max,
                                std::optional<unsigned long> q_max) {
    std::vector<mpz_class> t = term_table(seq, n_max);
    SolutionSet out;
    out.sequence = seq.descriptor();
    out.mode = SearchMode::unconstrained;
    out.n_bound_used = n_max;
    for (unsigned long n = 0; n <= n_max; ++n) {
        std::vector<Solution> row;
        brute_scan_row(t, n, q_max, [&](Solution s) { row.push_back(std::move(s)); });
        sort_solutions(row);
        out.solutions.insert(out.solutions.end(), row.begin(), row.end());
    }
    return out;
}

SolutionSet solve_fixed_x(const RecurrenceSequence& seq, const mpz_class& x,
                          std::optional<unsigned long> n_cap) {
    if (x < 2) throw InvalidInput("solve_fixed_x: x must be >= 2");

    EffectiveBounds eb = derive_constants_refined(seq);
    mpz_class N = search_bound(seq, x, eb);

    unsigned long cap = n_cap.value_or(seq.n_max_hard);
    cap = std::min(cap, seq.n_max_hard);
    unsigned long n_enum = cap;
    if (N >= 0 && N.fits_ulong_p())
        n_enum = std::min(cap, N.get_ui());
    bool certified = mpz_class(n_enum) >= N;

    std::vector<mpz_class> t = term_table(seq, n_enum);

    // Sorted table of admissible powers x^q, q >= 2, up to the largest
    // possible |U_n + U_m|; one binary search per pair.
    mpz_class smax = 4;
    for (const auto& v : t) {
        mpz_class a = abs(v);
        if (2 * a > smax) smax = 2 * a;
    }
    std::vector<std::pair<mpz_class, unsigned long>> powers;
    mpz_class p = x * x;
    unsigned long q = 2;
    while (p <= smax) {
        powers.emplace_back(p, q);
        p *= x;
        ++q;
    }

    std::vector<std::vector<Solution>> per_n(n_enum + 1);
#pragma omp parallel for schedule(dynamic)
    for (long n = 0; n <= long(n_enum); ++n) {
        for (unsigned long m = 0; m <= (unsigned long)n; ++m) {
            mpz_class s = t[n] + t[m];
            if (s < 4) continue;
            auto it = std::lower_bound(
                powers.begin(), powers.end(), s,
                [](const auto& a, const mpz_class& v) { return a.first < v; });
            if (it != powers.end() && it->first == s)
                per_n[n].push_back(
                    Solution{(unsigned long)n, m, x, it->second, s, certified});
        }
    }

    SolutionSet out;
    out.sequence = seq.descriptor();
    out.mode = SearchMode::fixed_x;
    out.n_bound_used = n_enum;
    out.theorem_bound = N;
    for (auto& bucket : per_n)
        out.solutions.insert(out.solutions.end(), bucket.begin(), bucket.end());
    return out;
}

bool verify_solution(const RecurrenceSequence& seq, const Solution& sol) {
    if (sol.m > sol.n) return false;
    if (sol.x < 2 || sol.q < 2) return false;
    mpz_class sum = term(seq, sol.n) + term(seq, sol.m);
    if (sum != sol.value) return false;
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), sol.x.get_mpz_t(), sol.q);
    return pw == sol.value;
}

FamilyResult family_remark(const mpz_class& P, const mpz_class& Q,
                           unsigned long k_max) {
    if (Q != 1 && Q != -1)
        throw HypothesisViolated("family_remark: |Q| must be 1");
    if (P * P + 4 * Q <= 0)
        throw HypothesisViolated("family_remark: P^2 + 4Q must be > 0");

    FamilyResult res;
    res.seq = make_sequence(P, Q, 2, P);
    std::vector<mpz_class> t = term_table(res.seq, 4 * k_max);

    res.identity_ok = true;
    for (unsigned long n = 0; n <= 2 * k_max; ++n) {
        mpz_class rhs = t[n] * t[n];
        rhs -= (Q == 1 && (n & 1)) ? mpz_class(-2) : mpz_class(2); // -2(-Q)^n
        if (t[2 * n] != rhs) res.identity_ok = false;
    }

    for (unsigned long k = 1; k <= k_max; ++k) {
        Solution sol;
        sol.n = 4 * k;
        sol.m = 0;
        sol.x = t[2 * k];
        sol.q = 2;
        sol.value = t[4 * k] + t[0];
        if (!verify_solution(res.seq, sol))
            throw Error("family_remark: member k=" + std::to_string(k) +
                        " failed verification");
        res.solutions.push_back(std::move(sol));
    }
    return res;
}

} // namespace rpl
