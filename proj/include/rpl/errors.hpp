#pragma once

#include <stdexcept>
#include <string>

namespace rpl {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sequence violates a standing hypothesis (PQ = 0, D <= 0, no dominant
// root, a1*a2 = 0, ...).
struct DegenerateSequence : Error {
    using Error::Error;
};

// Parameter outside a stated precondition (family with |Q| != 1, lemma
// applied below its threshold, ...).
struct HypothesisViolated : Error {
    using Error::Error;
};

struct InvalidInput : Error {
    using Error::Error;
};

struct ZeroInput : Error {
    using Error::Error;
};

// a1*a2 = 0 where a nonzero product is required.
struct ZeroProduct : Error {
    using Error::Error;
};

// Degenerate cancellation in an X/Y/gcd record (Y = 0, or a triple leg
// collapses to zero).
struct ZeroTerm : Error {
    using Error::Error;
};

// A scan hit U_n + U_m = 0; carries the witness pair.
struct ZeroEncountered : Error {
    long n, m;
    ZeroEncountered(long n_, long m_, const std::string& msg)
        : Error(msg), n(n_), m(m_) {}
};

// Factorization budget exhausted. The caller still gets the partial
// result through the Factorization struct; this is thrown only by
// interfaces that promise a complete radical.
struct FactorizationTimeout : Error {
    using Error::Error;
};

} // namespace rpl
