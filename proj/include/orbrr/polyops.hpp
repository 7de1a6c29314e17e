#ifndef ORBRR_POLYOPS_HPP
#define ORBRR_POLYOPS_HPP

#include <utility>

#include "orbrr/laurent.hpp"

namespace orbrr {

// (1 - t^r)/(1 - t) = 1 + t + ... + t^(r-1), r >= 1.
LaurentPoly cyclo_quotient(long r);

struct XgcdResult {
    LaurentPoly gcd;  // monic
    LaurentPoly u;    // u*f + v*g = gcd
    LaurentPoly v;
};

// Extended Euclid over Q[t]. Inputs must be nonzero ordinary polynomials
// (lowest degree >= 0); callers shift Laurent inputs first.
XgcdResult xgcd(const LaurentPoly& f, const LaurentPoly& g);

LaurentPoly poly_gcd(const LaurentPoly& f, const LaurentPoly& g);

// Remainder of f modulo g (ordinary polynomials, g nonzero).
LaurentPoly poly_mod(const LaurentPoly& f, const LaurentPoly& g);

// Inverse of f modulo m; throws math_error when gcd(f, m) != 1.
LaurentPoly inverse_mod(const LaurentPoly& f, const LaurentPoly& m);

// The unique g == f (mod modulus) supported in [start, start + deg(modulus) - 1].
// modulus must be an ordinary polynomial of degree >= 1 with nonzero
// constant and leading coefficients. f may be Laurent. Implemented by
// trimming shifted copies of the modulus off both ends, which keeps
// palindromic inputs palindromic when the window is chosen symmetrically.
LaurentPoly reduce_support(const LaurentPoly& f, const LaurentPoly& modulus, long start);

// c[center_times_2 - d] == sign * c[d] for every degree d.
bool is_symmetric(const LaurentPoly& f, long center_times_2, int sign);

// Palindromic about the midpoint of its own support; center = (lo+hi)/2.
// The zero polynomial reports (true, 0) with the center meaningless.
std::pair<bool, Rational> is_palindromic(const LaurentPoly& f);

}  // namespace orbrr

#endif
