// rpl: solve U_n + U_m = x^q over binary recurrence sequences.
//
// Subcommands: bound, solve, search, abc, abc-scan, family, check.
// Exit codes: 0 ok; 2 degenerate sequence / violated hypothesis; 3 parse
// error; 4 degenerate abc pair; 5 factorization timeout; 10 enumeration
// capped below the certified bound (solutions still emitted); 64 unknown
// flags.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "rpl/abc.hpp"
#include "rpl/bounds.hpp"
#include "rpl/errors.hpp"
#include "rpl/factor.hpp"
#include "rpl/json_io.hpp"
#include "rpl/power.hpp"
#include "rpl/presets.hpp"
#include "rpl/sequence.hpp"
#include "rpl/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDegenerate = 2;
constexpr int kExitParse = 3;
constexpr int kExitZeroTerm = 4;
constexpr int kExitFactorTimeout = 5;
constexpr int kExitCapped = 10;
constexpr int kExitUsage = 64;

struct Options {
    std::string seq_text;
    std::string output = "pretty";
    long precision = 128;
    unsigned long n_cap = rpl::kNMaxHardDefault;
    bool n_cap_set = false;
    long factor_budget_ms = rpl::kFactorBudgetMsDefault;
};

std::string presets_path() {
    const char* env = std::getenv("RPL_PRESETS");
    return env ? env : "";
}

rpl::RecurrenceSequence sequence_from(const Options& opt) {
    auto spec = rpl::resolve_sequence(opt.seq_text, presets_path());
    if (!spec)
        throw rpl::InvalidInput("cannot parse sequence '" + opt.seq_text +
                                "' (not a preset, not P,Q,U0,U1)");
    return rpl::make_sequence(spec->P, spec->Q, spec->U0, spec->U1);
}

mpz_class parse_x(const std::string& text) {
    mpz_class x;
    if (x.set_str(text, 10) != 0)
        throw rpl::InvalidInput("cannot parse x = '" + text + "'");
    if (x < 2) throw rpl::InvalidInput("x must be >= 2");
    return x;
}

void add_common(CLI::App* cmd, Options& opt, bool needs_seq = true) {
    auto* s = cmd->add_option("--seq", opt.seq_text,
                              "preset name or explicit P,Q,U0,U1");
    if (needs_seq) s->required();
    cmd->add_option("--precision", opt.precision, "interval precision bits")
        ->default_val(128);
    cmd->add_option("--n-cap", opt.n_cap, "enumeration cap on n")
        ->each([&opt](const std::string&) { opt.n_cap_set = true; });
    cmd->add_option("--factor-budget-ms", opt.factor_budget_ms,
                    "per-integer factorization budget");
    cmd->add_option("--output", opt.output, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->default_val("pretty");
}

void emit_solution_set(const rpl::SolutionSet& set, const Options& opt) {
    if (opt.output == "json") {
        std::cout << rpl::solution_set_header_json(set).dump() << "\n";
        for (const auto& s : set.solutions)
            std::cout << rpl::solution_json(s).dump() << "\n";
    } else if (opt.output == "csv") {
        std::cout << rpl::solution_csv_header() << "\n";
        for (const auto& s : set.solutions)
            std::cout << rpl::solution_csv_row(s) << "\n";
    } else {
        std::cout << "sequence " << set.sequence << ", "
                  << (set.mode == rpl::SearchMode::fixed_x ? "fixed-x" : "unconstrained")
                  << " search, n <= " << set.n_bound_used << "\n";
        if (set.theorem_bound)
            std::cout << "certified bound N = " << set.theorem_bound->get_str() << "\n";
        if (set.solutions.empty()) {
            std::cout << "no solutions\n";
        } else {
            std::cout << "   n    m  q  x^q = value\n";
            for (const auto& s : set.solutions)
                printf("%4lu %4lu %2lu  %s^%lu = %s\n", s.n, s.m, s.q,
                       s.x.get_str().c_str(), s.q, s.value.get_str().c_str());
        }
    }
}

int cmd_bound(const Options& opt, const std::string& x_text) {
    auto seq = sequence_from(opt);
    mpz_class x = parse_x(x_text);
    auto eb = rpl::derive_constants(seq, opt.precision);
    mpz_class n_bound = rpl::search_bound(seq, x, eb);
    if (opt.output == "json") {
        std::cout << rpl::bounds_json(seq, eb, x, n_bound).dump() << "\n";
    } else if (opt.output == "csv") {
        std::cout << "name,formula,lo,hi,precision_bits\n";
        for (const auto& e : eb.trace)
            std::cout << e.name << ",\"" << e.formula << "\"," << e.value.lo_str()
                      << ',' << e.value.hi_str() << ',' << e.value.precision() << "\n";
        std::cout << "search_bound,," << n_bound.get_str() << ",,\n";
    } else {
        std::cout << "constant chain for " << seq.descriptor() << " at "
                  << opt.precision << " bits\n";
        for (const auto& e : eb.trace)
            printf("  %-14s in [%s, %s]   %s\n", e.name.c_str(),
                   e.value.lo_str(17).c_str(), e.value.hi_str(17).c_str(),
                   e.formula.c_str());
        std::cout << "search bound N(x=" << x.get_str()
                  << ") = " << n_bound.get_str() << "\n";
    }
    return kExitOk;
}

int cmd_solve(const Options& opt, const std::string& x_text) {
    auto seq = sequence_from(opt);
    mpz_class x = parse_x(x_text);
    std::optional<unsigned long> cap;
    if (opt.n_cap_set) cap = opt.n_cap;
    auto set = rpl::solve_fixed_x(seq, x, cap);
    emit_solution_set(set, opt);
    bool certified = !set.solutions.empty()
                         ? set.solutions.front().certified_complete
                         : (set.theorem_bound &&
                            mpz_class(set.n_bound_used) >= *set.theorem_bound);
    return certified ? kExitOk : kExitCapped;
}

int cmd_search(const Options& opt, std::optional<unsigned long> q_max) {
    auto seq = sequence_from(opt);
    auto set = rpl::brute_search(seq, opt.n_cap, q_max);
    emit_solution_set(set, opt);
    return kExitOk;
}

int cmd_abc(const Options& opt, unsigned long n, unsigned long m, bool no_coprime) {
    auto seq = sequence_from(opt);
    auto rec = rpl::xy_pair(seq, n, m);
    auto trip = rpl::triple(seq, n, m, !no_coprime, opt.factor_budget_ms);
    if (opt.output == "json") {
        std::cout << rpl::abc_json(seq.descriptor(), rec, trip).dump() << "\n";
    } else if (opt.output == "csv") {
        std::cout << "n,m,A,B,C,d,residual_gcd,rad,quality,complete_factorization\n"
                  << rec.n << ',' << rec.m << ',' << trip.A.get_str() << ','
                  << trip.B.get_str() << ',' << trip.C.get_str() << ','
                  << rec.d.get_str() << ',' << trip.residual_gcd.get_str() << ','
                  << trip.rad.get_str() << ',' << trip.quality << ','
                  << (trip.complete_factorization ? "true" : "false") << "\n";
    } else {
        std::cout << "pair (n, m) = (" << n << ", " << m << ") on " << seq.descriptor()
                  << "\nX = " << rec.X.get_str() << ", S = " << rec.S.get_str()
                  << ", Y = X^2 - D S^2 = " << rec.Y.get_str()
                  << ", d = gcd(X^2, D S^2) = " << rec.d.get_str() << "\n"
                  << "triple A + B = C: " << trip.A.get_str() << " + "
                  << trip.B.get_str() << " = " << trip.C.get_str() << "\n"
                  << "rad = " << trip.rad.get_str() << ", quality = " << trip.quality
                  << (trip.complete_factorization ? "" : " (lower bound: partial factorization)")
                  << "\n(abc-conjecture framing is conjectural; nothing is asserted)\n";
    }
    if (!trip.complete_factorization) return kExitFactorTimeout;
    return kExitOk;
}

int cmd_abc_scan(const Options& opt, std::size_t top_k) {
    auto seq = sequence_from(opt);
    auto rep = rpl::scan_quality(seq, opt.n_cap, top_k, true, opt.factor_budget_ms);
    bool incomplete = false;
    for (const auto& e : rep.entries)
        if (!e.trip.complete_factorization) incomplete = true;
    if (opt.output == "json") {
        for (const auto& e : rep.entries)
            std::cout << rpl::quality_entry_json(rep.sequence, e).dump() << "\n";
    } else if (opt.output == "csv") {
        std::cout << "n,m,A,B,C,rad,quality\n";
        for (const auto& e : rep.entries)
            std::cout << e.n << ',' << e.m << ',' << e.trip.A.get_str() << ','
                      << e.trip.B.get_str() << ',' << e.trip.C.get_str() << ','
                      << e.trip.rad.get_str() << ',' << e.trip.quality << "\n";
    } else {
        std::cout << "top abc-quality pairs on " << rep.sequence << ", n <= "
                  << rep.n_max << " (" << rep.skipped_degenerate
                  << " degenerate pairs skipped; abc framing is conjectural)\n";
        for (const auto& e : rep.entries)
            printf("  (%3lu, %3lu)  quality %.6f  rad %s\n", e.n, e.m,
                   e.trip.quality, e.trip.rad.get_str().c_str());
    }
    return incomplete ? kExitFactorTimeout : kExitOk;
}

int cmd_family(const Options& opt, long p, long q, unsigned long k_max) {
    auto fam = rpl::family_remark(p, q, k_max);
    if (opt.output == "json") {
        std::cout << rpl::family_json(fam).dump() << "\n";
    } else if (opt.output == "csv") {
        std::cout << rpl::solution_csv_header() << "\n";
        for (const auto& s : fam.solutions)
            std::cout << rpl::solution_csv_row(s) << "\n";
    } else {
        std::cout << "family (4k, 0, U_2k, 2) on " << fam.seq.descriptor()
                  << "; doubling identity " << (fam.identity_ok ? "holds" : "FAILS")
                  << "\n";
        for (const auto& s : fam.solutions)
            printf("  k=%2lu  (%3lu, 0, %s, 2): U_n + U_0 = %s, verified\n",
                   s.n / 4, s.n, s.x.get_str().c_str(), s.value.get_str().c_str());
    }
    // Condition (1.7) fails for (n even, m = 0) on every family member.
    for (unsigned long k = 1; k <= k_max && k <= 3; ++k)
        if (rpl::condition_17(fam.seq, rpl::Parity::even, 0) != rpl::Condition17::fails)
            return kExitDegenerate;
    return kExitOk;
}

int cmd_check(const Options& opt) {
    auto spec = rpl::resolve_sequence(opt.seq_text, presets_path());
    if (!spec)
        throw rpl::InvalidInput("cannot parse sequence '" + opt.seq_text + "'");
    auto rep = rpl::check_nondegenerate(spec->P, spec->Q, spec->U0, spec->U1);
    std::string desc = spec->P.get_str() + "," + spec->Q.get_str() + "," +
                       spec->U0.get_str() + "," + spec->U1.get_str();
    if (opt.output == "json") {
        std::cout << rpl::validation_json(desc, rep).dump() << "\n";
    } else {
        std::cout << "hypothesis report for " << desc << "\n";
        for (const auto& c : rep.checks)
            printf("  [%s] %-34s %s\n", c.pass ? "pass" : "FAIL", c.name.c_str(),
                   c.detail.c_str());
    }
    return rep.all_pass() ? kExitOk : kExitDegenerate;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and bounds laboratory for U_n + U_m = x^q"};
    app.require_subcommand(1);

    Options opt;
    std::string x_text;
    unsigned long abc_n = 0, abc_m = 0, k_max = 1;
    long fam_p = 1, fam_q = 1;
    std::optional<unsigned long> q_max;
    unsigned long q_max_val = 0;
    std::size_t top_k = 25;
    bool no_coprime = false;

    auto* bound = app.add_subcommand("bound", "derive the constant chain and N");
    add_common(bound, opt);
    bound->add_option("--x", x_text, "fixed base x >= 2")->required();

    auto* solve = app.add_subcommand("solve", "certified enumeration for fixed x");
    add_common(solve, opt);
    solve->add_option("--x", x_text, "fixed base x >= 2")->required();

    auto* search = app.add_subcommand("search", "brute search for perfect powers");
    add_common(search, opt);
    auto* qopt = search->add_option("--q-max", q_max_val, "only exponents <= q-max");

    auto* abc = app.add_subcommand("abc", "X/Y/gcd record and abc triple for one pair");
    add_common(abc, opt);
    abc->add_option("--n", abc_n)->required();
    abc->add_option("--m", abc_m)->required();
    abc->add_flag("--no-coprime", no_coprime, "skip the extra coprime reduction");

    auto* scan = app.add_subcommand("abc-scan", "ranked abc-quality scan");
    add_common(scan, opt);
    scan->add_option("--top", top_k, "entries to keep");

    auto* family = app.add_subcommand("family", "the (4k, 0, U_2k, 2) family");
    add_common(family, opt, /*needs_seq=*/false);
    family->add_option("--p", fam_p)->required();
    family->add_option("--q", fam_q)->required();
    family->add_option("--k-max", k_max)->required();

    auto* check = app.add_subcommand("check", "itemized hypothesis report");
    add_common(check, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ExtrasError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (bound->parsed()) return cmd_bound(opt, x_text);
        if (solve->parsed()) return cmd_solve(opt, x_text);
        if (search->parsed()) {
            if (qopt->count()) q_max = q_max_val;
            return cmd_search(opt, q_max);
        }
        if (abc->parsed()) return cmd_abc(opt, abc_n, abc_m, no_coprime);
        if (scan->parsed()) return cmd_abc_scan(opt, top_k);
        if (family->parsed()) return cmd_family(opt, fam_p, fam_q, k_max);
        if (check->parsed()) return cmd_check(opt);
    } catch (const rpl::DegenerateSequence& e) {
        std::cerr << "degenerate sequence: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const rpl::HypothesisViolated& e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const rpl::ZeroTerm& e) {
        std::cerr << "degenerate pair: " << e.what() << "\n";
        return kExitZeroTerm;
    } catch (const rpl::FactorizationTimeout& e) {
        std::cerr << "factorization timeout: " << e.what() << "\n";
        return kExitFactorTimeout;
    } catch (const rpl::InvalidInput& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kExitParse;
    } catch (const rpl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
