#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace zdforge {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Renders a rational as "p/q", or just "p" when the denominator is 1.
inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "p", "-p" or "p/q" (denominator must be positive after
/// canonicalization; "1/0" and friends are rejected).
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Exact binomial coefficient C(n, k).
inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace zdforge
