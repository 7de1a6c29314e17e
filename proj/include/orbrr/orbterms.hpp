#ifndef ORBRR_ORBTERMS_HPP
#define ORBRR_ORBTERMS_HPP

#include "orbrr/basket.hpp"
#include "orbrr/rational_fn.hpp"

namespace orbrr {

inline long floor_div2(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

// Orbifold point term Q(t)/((1-t)^n h (1-t^s)): Q is the inverse of
// prod (1-t^{b_i})/(1-t^{w_i}) modulo (1-t^s)/((1-t)h), supported in
// [floor(c/2)+1+deg h, floor(c/2)+s-1] with c = k+n+1. Gorenstein
// symmetric of degree k with an integral numerator.
RationalFn qorb(const PointType& p, long n);

// I(t)/(1-t)^(n+1) with I palindromic of degree c = k+n+1, matching the
// given plurigenera P_0..P_{floor(c/2)} as a power series.
RationalFn initial_term(const std::vector<Rational>& plurigenera, long k, long n);

// First curve part S1(t)/((1-t)^(n-1)(1-t^r)^2): S1 inverts
// prod (1-t^{a_i})/(1-t) mod (1-t^r)/(1-t), supported in
// [floor((c+r-1)/2)+1, floor((c+r-1)/2)+r-1].
RationalFn curve_s1(const CurveLocus& c, long k, long n);

// Normal-bundle part N_j(t)/((1-t)^n(1-t^r)) determined by
// N_j * prod_i (1-t^{a_i})/(1-t) * (1-t^{a_j})/(1-t) == 1+t^{a_j}
// mod (1-t^r)/(1-t), supported in [floor(c/2)+1, floor(c/2)+r-1].
// j is 1-based.
RationalFn curve_nj(const CurveLocus& c, std::size_t j, long k, long n);

// The sigma-weighted main part: (sum (i-k/2) sigma_i t^i +
// sum (r-i+k/2) sigma_i t^(r+i)) (1-t)^(n-1) reduced modulo
// ((1-t^r)/(1-t))^2 into [floor(c/2)+1, floor(c/2)+2r-2]; the numerator
// comes out palindromic.
RationalFn curve_main_part(const CurveLocus& c, long k, long n);

// What the dissident point p bites off the S1 coefficient of the curve
// through its (1-based) direction i: (w_i/s) Q(t) prod_{j != i}
// (1-t^{b_j})/(1-t^{w_j}) mod (1-t^{w_i})/(1-t), reduced to the
// palindromic window around 0. Integral except for the constant term,
// whose fractional part is alpha_i w_i / s mod 1.
LaurentPoly bite(const PointType& p, std::size_t direction);

// g_C = r deg H|_C - sum of bites of the attached dissident points;
// integral, palindromic about 0. Throws math_error when the basket data
// is inconsistent (wrong degH or missing dissident point).
LaurentPoly curve_coefficient(const CurveLocus& c, const std::vector<PointType>& dissidents);

}  // namespace orbrr

#endif
