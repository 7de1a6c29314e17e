#include "orbrr/orbterms.hpp"

#include "orbrr/dedekind.hpp"
#include "orbrr/polyops.hpp"

namespace orbrr {

namespace {

LaurentPoly one_minus(long a) { return LaurentPoly::one() - LaurentPoly::monomial(a, 1); }

struct IceCream {
    LaurentPoly numerator;    // already shifted into its window
    RationalFn::Factors den;  // M * (1-t)^n * (1-t^s) as factors
};

// The windowed modular inverse shared by point terms and curve parts.
// Follows the support arithmetic of the Qorb program: the window starts
// at floor((k+n+1)/2) + deg(M H)/2 + 1, wrapped up by multiples of s
// only for the intermediate xgcd (the t^m / t^(de*s) dance).
IceCream ice_cream(long s, const std::vector<long>& b, long k)
{
    const long n = static_cast<long>(b.size());
    long sum = 0;
    for (long bi : b) sum += bi;
    if (mod_nonneg(k + sum, s) != 0) throw math_error("canonical weight not compatible");

    const LaurentPoly A = cyclo_quotient(s);
    LaurentPoly B = LaurentPoly::one();
    for (long bi : b) B = B * cyclo_quotient(bi);  // prod (1-t^{b_i}) / (1-t)^n
    const LaurentPoly H = poly_gcd(B, A);
    LaurentPoly M = LaurentPoly::one();
    long count_w = 0;
    RationalFn::Factors den;
    for (long bi : b) {
        long w = gcd_long(bi, s);
        if (w != 1) {
            M = M * cyclo_quotient(w);
            den[w] += 1;
            ++count_w;
        }
    }
    den[1] += static_cast<int>(n - count_w);
    den[s] += 1;

    const long shift = (M.degree() + H.degree()) / 2;  // deg(M*H) is even
    const long l = floor_div2(k + n + 1) + shift + 1;

    auto AH = LaurentPoly::divexact(A, H);
    auto BM = LaurentPoly::divexact(B, M);
    if (!AH || !BM) throw math_error("ice_cream: common factor fails to divide");

    IceCream out;
    out.den = std::move(den);
    if (AH->is_constant()) {
        // every admissible root is killed; the periodic contribution is 0
        out.numerator = LaurentPoly::zero();
        return out;
    }
    const long de = l >= 0 ? 0 : (-l + s - 1) / s;
    const long m = l + de * s;
    XgcdResult xg = xgcd(*AH, BM->shifted(m));
    if (!xg.gcd.is_constant())
        throw math_error("ice_cream: weight factors not coprime to the reduced modulus");
    LaurentPoly Q = poly_mod(xg.v, *AH);
    out.numerator = Q.shifted(l);
    return out;
}

void check_compatible_curve(const CurveLocus& c, long k, long n)
{
    if (static_cast<long>(c.a.size()) != n - 1)
        throw std::invalid_argument("curve type needs n-1 transverse weights");
    long sum = 0;
    for (long ai : c.a) sum += ai;
    if (mod_nonneg(k + sum, c.r) != 0) throw math_error("canonical weight not compatible");
}

}  // namespace

RationalFn qorb(const PointType& p, long n)
{
    if (static_cast<long>(p.b.size()) != n)
        throw std::invalid_argument("qorb: point type needs n weights");
    IceCream ic = ice_cream(p.s, p.b, p.k);
    return RationalFn(ic.numerator, ic.den);
}

RationalFn initial_term(const std::vector<Rational>& plurigenera, long k, long n)
{
    const long c = k + n + 1;
    if (c < 0) throw std::invalid_argument("initial_term: coindex must be >= 0");
    if (static_cast<long>(plurigenera.size()) != c / 2 + 1)
        throw std::invalid_argument("initial_term: need exactly floor(c/2)+1 plurigenera");
    LaurentPoly f;
    for (std::size_t i = 0; i < plurigenera.size(); ++i)
        f.set_coeff(static_cast<long>(i), plurigenera[i]);
    LaurentPoly pp = f * one_minus(1).pow(static_cast<unsigned>(n + 1));
    LaurentPoly I;
    if (c % 2 == 0) {
        for (long i = 0; i < c / 2; ++i) {
            Rational a = pp.coeff(i);
            I.set_coeff(i, I.coeff(i) + a);
            I.set_coeff(c - i, I.coeff(c - i) + a);
        }
        I.set_coeff(c / 2, I.coeff(c / 2) + pp.coeff(c / 2));
    } else {
        for (long i = 0; i <= c / 2; ++i) {
            Rational a = pp.coeff(i);
            I.set_coeff(i, I.coeff(i) + a);
            I.set_coeff(c - i, I.coeff(c - i) + a);
        }
    }
    return RationalFn(std::move(I), {{1, static_cast<int>(n + 1)}});
}

RationalFn curve_s1(const CurveLocus& c, long k, long n)
{
    check_compatible_curve(c, k, n);
    IceCream ic = ice_cream(c.r, c.a, k + c.r);  // h = 1 for a curve type
    return RationalFn(ic.numerator, ic.den).over_factor(c.r);
}

RationalFn curve_nj(const CurveLocus& c, std::size_t j, long k, long n)
{
    check_compatible_curve(c, k, n);
    if (j < 1 || j > c.a.size()) throw std::invalid_argument("curve_nj: j out of range");
    const LaurentPoly A = cyclo_quotient(c.r);
    LaurentPoly g = cyclo_quotient(c.a[j - 1]);
    for (long ai : c.a) g = g * cyclo_quotient(ai);
    LaurentPoly rhs = LaurentPoly::one() + LaurentPoly::monomial(c.a[j - 1], 1);
    LaurentPoly nj = reduce_support(poly_mod(rhs * inverse_mod(g, A), A), A,
                                    floor_div2(k + n + 1) + 1);
    RationalFn::Factors den{{1, static_cast<int>(n)}, {c.r, 1}};
    return RationalFn(std::move(nj), std::move(den));
}

RationalFn curve_main_part(const CurveLocus& c, long k, long n)
{
    check_compatible_curve(c, k, n);
    SigmaVector sig = sigma_all(DedekindSpec(c.r, c.a));
    const Rational khalf = Rational(k) / 2;
    LaurentPoly L;
    for (long i = 0; i < c.r; ++i) {
        L.set_coeff(i, (Rational(i) - khalf) * sig.at(i));
        L.set_coeff(c.r + i, (Rational(c.r - i) + khalf) * sig.at(i));
    }
    L = L * one_minus(1).pow(static_cast<unsigned>(n - 1));
    LaurentPoly A2 = cyclo_quotient(c.r) * cyclo_quotient(c.r);
    LaurentPoly N = reduce_support(L, A2, floor_div2(k + n + 1) + 1);
    if (!is_palindromic(N).first)
        throw math_error("curve_main_part: numerator failed to come out palindromic");
    RationalFn::Factors den{{1, static_cast<int>(n - 1)}, {c.r, 2}};
    return RationalFn(std::move(N), std::move(den));
}

LaurentPoly bite(const PointType& p, std::size_t direction)
{
    if (direction < 1 || direction > p.b.size())
        throw std::invalid_argument("bite: direction out of range");
    const std::size_t i = direction - 1;
    const long w = p.w[i];
    if (w == 1) throw math_error("bite: no curve through this point in direction " +
                                 std::to_string(direction));
    IceCream ic = ice_cream(p.s, p.b, p.k);
    LaurentPoly raw = ic.numerator * (Rational(w) / Rational(p.s));
    for (std::size_t j = 0; j < p.b.size(); ++j) {
        if (j == i) continue;
        auto q = LaurentPoly::divexact(one_minus(p.b[j]), one_minus(p.w[j]));
        if (!q) throw math_error("bite: (1-t^w) does not divide (1-t^b)");
        raw = raw * *q;
    }
    const long lo = -floor_div2(w) + 1;
    LaurentPoly red = reduce_support(raw, cyclo_quotient(w), lo);
    if (!red.is_zero() && (red.lowest_degree() < lo || red.degree() > floor_div2(w) - 1))
        throw math_error("bite: not supported in the symmetric window (inconsistent point type)");
    if (!is_symmetric(red, 0, +1))
        throw math_error("bite: result is not palindromic about 0");
    Rational expected_frac = frac_part(Rational(p.alpha[i] * w) / Rational(p.s));
    for (const auto& [d, coeff] : red.terms())
        if (d != 0 && !is_integer(coeff))
            throw math_error("bite: non-integral coefficient away from the constant term");
    if (frac_part(red.coeff(0)) != expected_frac)
        throw math_error("bite: constant term fractional part mismatch");
    return red;
}

LaurentPoly curve_coefficient(const CurveLocus& c, const std::vector<PointType>& dissidents)
{
    LaurentPoly g = LaurentPoly::monomial(0, Rational(c.r) * c.deg_h);
    for (const PointType& q : dissidents) {
        auto dirs = q.directions_with_order(c.r);
        if (dirs.size() != 1)
            throw math_error("curve_coefficient: dissident point has no unique direction of order " +
                             std::to_string(c.r));
        g = g - bite(q, dirs[0] + 1);
    }
    if (!g.is_integral())
        throw math_error(
            "curve_coefficient: non-integral coefficient (wrong degH or missing dissident point)");
    if (!is_symmetric(g, 0, +1))
        throw math_error("curve_coefficient: coefficient not palindromic about 0");
    return g;
}

}  // namespace orbrr
