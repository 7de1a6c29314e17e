#ifndef ORBRR_BASKET_HPP
#define ORBRR_BASKET_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "orbrr/laurent.hpp"

namespace orbrr {

// Quotient singularity 1/s(b_1,...,b_n) carried with the ambient
// canonical weight k (the compatibility (k + sum b_i) == 0 mod s is what
// makes the closed-form term exist). Derived data: w_i = gcd(s, b_i) and
// alpha_i, the least positive integer with alpha_i b_i == w_i mod s.
struct PointType {
    long s = 0;
    std::vector<long> b;
    long k = 0;
    std::vector<long> w;
    std::vector<long> alpha;
    long deg_h = 0;  // sum (w_i - 1)

    static PointType make(long s, std::vector<long> b, long k);

    bool is_dissident() const;
    LaurentPoly h_poly() const;  // prod over w_i != 1 of (1-t^{w_i})/(1-t)
    // positions i (0-based) with w_i == r; a valid basket has exactly one
    // per curve order the point sits on
    std::vector<std::size_t> directions_with_order(long r) const;
};

struct GammaDatum {
    long a = 0;     // transverse weight attached to this normal summand
    Rational deg;   // r-multiplied degree of c_1(N_j)
};

// Orbicurve 1/r(a_1,...,a_{n-1}). deg_h is the intersection number of rH
// with the curve (the r-multiplied polarization degree); deg_kc follows
// the same convention. All transverse weights must be coprime to r, or
// the orbifold locus would have dimension >= 2.
struct CurveLocus {
    long r = 0;
    std::vector<long> a;
    Rational deg_h;
    std::optional<Rational> deg_kc;
    std::vector<GammaDatum> gammas;
    std::vector<std::size_t> dissidents;  // indices into the descriptor point list

    static CurveLocus make(long r, std::vector<long> a, Rational deg_h);
};

// Curve types induced through a dissident point: one entry (w_i, residues
// of the other weights mod w_i) for every direction with w_i != 1.
std::vector<std::pair<long, std::vector<long>>> dissident_curve_types(const PointType& p);

}  // namespace orbrr

#endif
