#ifndef ORBRR_RATIONAL_HPP
#define ORBRR_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace orbrr {

// Mathematical inconsistency (bad basket, non-integral numerator, ...).
// CLI maps this to exit code 1; usage errors are std::invalid_argument.
class math_error : public std::runtime_error {
public:
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rational rat_from_string(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Fractional part normalized into [0, 1).
inline Rational frac_part(const Rational& q)
{
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Rational(fl);
}

inline long mod_nonneg(long a, long m)
{
    long v = a % m;
    return v < 0 ? v + m : v;
}

inline long gcd_long(long a, long b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace orbrr

#endif
