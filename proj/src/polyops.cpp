#include "orbrr/polyops.hpp"

namespace orbrr {

LaurentPoly cyclo_quotient(long r)
{
    if (r < 1) throw std::invalid_argument("cyclo_quotient: r must be >= 1");
    LaurentPoly f;
    for (long i = 0; i < r; ++i) f.set_coeff(i, 1);
    return f;
}

namespace {

void require_ordinary(const LaurentPoly& f, const char* who)
{
    if (f.is_zero()) throw std::invalid_argument(std::string(who) + ": zero polynomial");
    if (f.lowest_degree() < 0)
        throw std::invalid_argument(std::string(who) + ": negative-degree terms (shift first)");
}

// quotient and remainder of ordinary polynomial division
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& f, const LaurentPoly& g)
{
    LaurentPoly q, r = f;
    const long dg = g.degree();
    const Rational lead = g.coeff(dg);
    while (!r.is_zero() && r.degree() >= dg) {
        long e = r.degree() - dg;
        Rational c = r.coeff(r.degree()) / lead;
        q.set_coeff(e, q.coeff(e) + c);
        r = r - g.shifted(e) * c;
    }
    return {q, r};
}

}  // namespace

XgcdResult xgcd(const LaurentPoly& f, const LaurentPoly& g)
{
    require_ordinary(f, "xgcd");
    require_ordinary(g, "xgcd");
    // invariant: u0*f + v0*g = r0 and u1*f + v1*g = r1
    LaurentPoly r0 = f, r1 = g;
    LaurentPoly u0 = LaurentPoly::one(), v0 = LaurentPoly::zero();
    LaurentPoly u1 = LaurentPoly::zero(), v1 = LaurentPoly::one();
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        LaurentPoly u = u0 - q * u1;
        LaurentPoly v = v0 - q * v1;
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u;
        v0 = v1;
        v1 = v;
    }
    Rational lead = r0.coeff(r0.degree());
    Rational inv = 1 / lead;
    return {r0 * inv, u0 * inv, v0 * inv};
}

LaurentPoly poly_gcd(const LaurentPoly& f, const LaurentPoly& g)
{
    return xgcd(f, g).gcd;
}

LaurentPoly poly_mod(const LaurentPoly& f, const LaurentPoly& g)
{
    require_ordinary(g, "poly_mod");
    if (f.is_zero()) return f;
    require_ordinary(f, "poly_mod");
    return divmod(f, g).second;
}

LaurentPoly inverse_mod(const LaurentPoly& f, const LaurentPoly& m)
{
    XgcdResult x = xgcd(f, m);
    if (!x.gcd.is_constant() || x.gcd.is_zero())
        throw math_error("inverse_mod: inputs are not coprime (gcd " + x.gcd.to_string() + ")");
    // xgcd normalized the gcd to 1
    return poly_mod(x.u, m);
}

LaurentPoly reduce_support(const LaurentPoly& f, const LaurentPoly& modulus, long start)
{
    require_ordinary(modulus, "reduce_support");
    const long m = modulus.degree();
    if (m < 1) throw std::invalid_argument("reduce_support: modulus must have degree >= 1");
    const Rational c0 = modulus.coeff(0);
    const Rational clead = modulus.coeff(m);
    if (c0 == 0)
        throw std::invalid_argument("reduce_support: modulus constant term must be nonzero");

    LaurentPoly g = f;
    // trim from below: killing the lowest term only adds terms above it
    while (!g.is_zero() && g.lowest_degree() < start) {
        long e = g.lowest_degree();
        g = g - modulus.shifted(e) * (g.coeff(e) / c0);
    }
    // trim from the top: each step lands entirely at degree >= start
    while (!g.is_zero() && g.degree() > start + m - 1) {
        long e = g.degree();
        g = g - modulus.shifted(e - m) * (g.coeff(e) / clead);
    }
    return g;
}

bool is_symmetric(const LaurentPoly& f, long center_times_2, int sign)
{
    for (const auto& [d, c] : f.terms())
        if (f.coeff(center_times_2 - d) != Rational(sign) * c) return false;
    return true;
}

std::pair<bool, Rational> is_palindromic(const LaurentPoly& f)
{
    if (f.is_zero()) return {true, Rational(0)};
    long s = f.lowest_degree() + f.degree();
    return {is_symmetric(f, s, +1), Rational(s) / 2};
}

}  // namespace orbrr
