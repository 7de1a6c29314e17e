#include "orbrr/basket.hpp"

#include "orbrr/polyops.hpp"

namespace orbrr {

PointType PointType::make(long s, std::vector<long> b, long k)
{
    if (s < 2) throw std::invalid_argument("PointType: order must be >= 2");
    if (b.empty()) throw std::invalid_argument("PointType: empty weight list");
    long sum = 0;
    for (long bi : b) {
        if (bi < 1) throw std::invalid_argument("PointType: weights must be positive");
        sum += bi;
    }
    if (mod_nonneg(k + sum, s) != 0) throw math_error("canonical weight not compatible");
    PointType p;
    p.s = s;
    p.b = std::move(b);
    p.k = k;
    for (long bi : p.b) p.w.push_back(gcd_long(bi, s));
    for (std::size_t i = 0; i < p.b.size(); ++i)
        for (std::size_t j = i + 1; j < p.b.size(); ++j)
            if (gcd_long(gcd_long(p.b[i], p.b[j]), s) != 1)
                throw math_error("PointType: gcd(s,b_i,b_j) != 1 gives an orbifold locus of dimension >= 2");
    for (std::size_t i = 0; i < p.b.size(); ++i) {
        long target = mod_nonneg(p.w[i], s);
        long al = 0;
        for (long c = 1; c <= s; ++c)
            if (mod_nonneg(c * p.b[i], s) == target) {
                al = c;
                break;
            }
        if (al == 0) throw math_error("PointType: no alpha_i with alpha_i b_i == w_i mod s");
        p.alpha.push_back(al);
        p.deg_h += p.w[i] - 1;
    }
    return p;
}

bool PointType::is_dissident() const
{
    for (long wi : w)
        if (wi != 1) return true;
    return false;
}

LaurentPoly PointType::h_poly() const
{
    LaurentPoly h = LaurentPoly::one();
    for (long wi : w)
        if (wi != 1) h = h * cyclo_quotient(wi);
    return h;
}

std::vector<std::size_t> PointType::directions_with_order(long r) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == r) out.push_back(i);
    return out;
}

CurveLocus CurveLocus::make(long r, std::vector<long> a, Rational deg_h)
{
    if (r < 2) throw std::invalid_argument("CurveLocus: order must be >= 2");
    if (a.empty()) throw std::invalid_argument("CurveLocus: empty transverse weights");
    for (long ai : a) {
        if (ai < 1) throw std::invalid_argument("CurveLocus: weights must be positive");
        if (gcd_long(ai, r) != 1)
            throw math_error("CurveLocus: transverse weight not coprime to the order (locus of dimension >= 2)");
    }
    CurveLocus c;
    c.r = r;
    c.a = std::move(a);
    c.deg_h = std::move(deg_h);
    return c;
}

std::vector<std::pair<long, std::vector<long>>> dissident_curve_types(const PointType& p)
{
    std::vector<std::pair<long, std::vector<long>>> out;
    for (std::size_t i = 0; i < p.w.size(); ++i) {
        if (p.w[i] == 1) continue;
        std::vector<long> res;
        for (std::size_t j = 0; j < p.b.size(); ++j)
            if (j != i) res.push_back(mod_nonneg(p.b[j], p.w[i]));
        out.emplace_back(p.w[i], std::move(res));
    }
    return out;
}

}  // namespace orbrr
