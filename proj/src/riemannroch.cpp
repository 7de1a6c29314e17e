#include "orbrr/riemannroch.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orbrr {

namespace {

// truncated product of (1 + m H t) factors, coefficients of t^0..t^n
std::vector<Rational> truncated_product(const std::vector<long>& ms, long n)
{
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    c[0] = 1;
    for (long m : ms)
        for (long i = n; i >= 1; --i) c[static_cast<std::size_t>(i)] += Rational(m) * c[static_cast<std::size_t>(i - 1)];
    return c;
}

// truncated multiplicative inverse of a series with constant term 1
std::vector<Rational> truncated_inverse(const std::vector<Rational>& a)
{
    std::vector<Rational> inv(a.size());
    inv[0] = 1;
    for (std::size_t i = 1; i < a.size(); ++i) {
        Rational s = 0;
        for (std::size_t j = 1; j <= i; ++j) s += a[j] * inv[i - j];
        inv[i] = -s;
    }
    return inv;
}

std::vector<Rational> todd_classes(const std::vector<Rational>& c, long n)
{
    auto at = [&](long i) { return i >= 1 && i <= static_cast<long>(c.size()) ? c[static_cast<std::size_t>(i - 1)] : Rational(0); };
    std::vector<Rational> td(static_cast<std::size_t>(n + 1));
    td[0] = 1;
    if (n >= 1) td[1] = at(1) / 2;
    if (n >= 2) td[2] = (at(1) * at(1) + at(2)) / 12;
    if (n >= 3) td[3] = at(1) * at(2) / 24;
    if (n >= 4)
        td[4] = (-at(1) * at(1) * at(1) * at(1) + at(1) * at(1) * at(2) * 4 +
                 at(2) * at(2) * 3 + at(1) * at(3) - at(4)) /
                720;
    return td;
}

Rational factorial(long i)
{
    Rational f = 1;
    for (long j = 2; j <= i; ++j) f *= j;
    return f;
}

}  // namespace

ChernData chern_data(const VarietyDescriptor& v)
{
    if (!v.is_complete_intersection())
        throw std::invalid_argument("chern_data: needs a complete-intersection descriptor");
    const long n = v.dimension();
    if (n > 4) throw std::invalid_argument("chern_data: dimension > 4 unsupported");
    std::vector<Rational> amb = truncated_product(v.ambient_weights(), n);
    std::vector<Rational> nor = truncated_product(v.equation_degrees(), n);
    std::vector<Rational> inv = truncated_inverse(nor);
    ChernData cd;
    cd.c.assign(static_cast<std::size_t>(n), Rational(0));
    for (long i = 1; i <= n; ++i) {
        Rational s = 0;
        for (long j = 0; j <= i; ++j) s += amb[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(i - j)];
        cd.c[static_cast<std::size_t>(i - 1)] = s;
    }
    Rational hn = 1;
    for (long d : v.equation_degrees()) hn *= d;
    for (long a : v.ambient_weights()) hn /= a;
    cd.Hn = hn;
    return cd;
}

Rational smooth_term(const ChernData& cd, long d, long n)
{
    if (n > 4) throw std::invalid_argument("smooth_term: dimension > 4 unsupported");
    std::vector<Rational> td = todd_classes(cd.c, n);
    Rational acc = 0;
    Rational dpow = 1;
    for (long i = 0; i <= n; ++i) {
        acc += dpow / factorial(i) * td[static_cast<std::size_t>(n - i)];
        dpow *= d;
    }
    return acc * cd.Hn;
}

Rational point_term(const PointType& p, long d)
{
    for (long bi : p.b)
        if (bi % p.s == 0) return Rational(0);
    SigmaVector s = sigma_all(DedekindSpec(p.s, p.b));
    return s.at(d);
}

namespace {

Rational curve_term_impl(const Rational& deg_h, const Rational& deg_k,
                         const SigmaVector& sigma,
                         const std::vector<std::pair<long, Rational>>& gammas,
                         const std::vector<SigmaVector>& doubled, long d,
                         CurveTermVariant variant)
{
    Rational acc = sigma.at(d) * d * deg_h;
    if (variant == CurveTermVariant::stack)
        acc -= sigma.at(d) * deg_k / 2;
    else
        acc -= (sigma.at(d) - sigma.at(0)) * deg_k / 2;
    for (std::size_t j = 0; j < gammas.size(); ++j) {
        const auto& [aj, deg] = gammas[j];
        const SigmaVector& dbl = doubled[j];
        if (variant == CurveTermVariant::stack) {
            acc -= dbl.at(d - aj) * deg;
        } else {
            Rational delta_d = dbl.at(d) + dbl.at(d - aj);
            Rational delta_0 = dbl.at(0) + dbl.at(-aj);
            acc -= (delta_d - delta_0) * deg / 2;
        }
    }
    return acc;
}

std::vector<SigmaVector> doubled_vectors(const CurveLocus& c)
{
    std::vector<SigmaVector> out;
    for (const GammaDatum& g : c.gammas) {
        if (g.a % c.r == 0)
            throw math_error("curve gamma weight divisible by the curve order");
        std::vector<long> dbl = c.a;
        dbl.push_back(mod_nonneg(g.a, c.r));
        out.push_back(sigma_all(DedekindSpec(c.r, dbl)));
    }
    return out;
}

}  // namespace

Rational curve_term(const CurveLocus& c, long d, CurveTermVariant variant)
{
    if (!c.deg_kc) throw math_error("curve_term: missing deg K_C");
    SigmaVector sigma = sigma_all(DedekindSpec(c.r, c.a));
    std::vector<std::pair<long, Rational>> gs;
    for (const GammaDatum& g : c.gammas) gs.emplace_back(g.a, g.deg);
    return curve_term_impl(c.deg_h, *c.deg_kc, sigma, gs, doubled_vectors(c), d, variant);
}

ChiEvaluator::ChiEvaluator(const VarietyDescriptor& v, CurveTermVariant variant)
    : n_(v.dimension()), variant_(variant), cd_(chern_data(v))
{
    for (const PointEntry& pe : v.points()) {
        bool vanishes = false;
        for (long bi : pe.type.b)
            if (bi % pe.type.s == 0) vanishes = true;
        if (vanishes)
            points_.push_back({pe.count, pe.type.s, true, SigmaVector({})});
        else
            points_.push_back(
                {pe.count, pe.type.s, false, sigma_all(DedekindSpec(pe.type.s, pe.type.b))});
    }
    for (const CurveLocus& c : v.curves()) {
        if (!c.deg_kc)
            throw math_error("chi: curve basket entry is missing deg K_C / normal bundle data");
        CurveData cdta{c.deg_h, *c.deg_kc, sigma_all(DedekindSpec(c.r, c.a)), {}};
        auto dbl = doubled_vectors(c);
        for (std::size_t j = 0; j < c.gammas.size(); ++j)
            cdta.gammas.push_back({c.gammas[j].a, c.gammas[j].deg, dbl[j]});
        curves_.push_back(std::move(cdta));
    }
}

Rational ChiEvaluator::chi_rational(long d) const
{
    Rational acc = smooth_term(cd_, d, n_);
    for (const PointData& p : points_) {
        if (p.vanishes) continue;
        acc += p.sigma.at(d) * p.count;
    }
    for (const CurveData& c : curves_) {
        std::vector<std::pair<long, Rational>> gs;
        std::vector<SigmaVector> dbl;
        for (const GammaData& g : c.gammas) {
            gs.emplace_back(g.a, g.deg);
            dbl.push_back(g.doubled);
        }
        acc += curve_term_impl(c.deg_h, c.deg_kc, c.sigma, gs, dbl, d, variant_);
    }
    return acc;
}

Integer ChiEvaluator::chi(long d) const
{
    Rational v = chi_rational(d);
    if (!is_integer(v))
        throw math_error("chi(" + std::to_string(d) + ") = " + rat_to_string(v) +
                         " is not an integer: inconsistent basket");
    return v.get_num();
}

Integer chi(const VarietyDescriptor& v, long d, CurveTermVariant variant)
{
    return ChiEvaluator(v, variant).chi(d);
}

std::vector<Integer> chi_range_serial(const VarietyDescriptor& v, long lo, long hi,
                                      CurveTermVariant variant)
{
    if (hi < lo) return {};
    ChiEvaluator ev(v, variant);
    std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
    for (long d = lo; d <= hi; ++d) out[static_cast<std::size_t>(d - lo)] = ev.chi(d);
    return out;
}

std::vector<Integer> chi_range(const VarietyDescriptor& v, long lo, long hi,
                               CurveTermVariant variant)
{
    if (hi < lo) return {};
    ChiEvaluator ev(v, variant);
    const long count = hi - lo + 1;
    std::vector<Integer> out(static_cast<std::size_t>(count));
    std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long idx = 0; idx < count; ++idx) {
        try {
            out[static_cast<std::size_t>(idx)] = ev.chi(lo + idx);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace orbrr
