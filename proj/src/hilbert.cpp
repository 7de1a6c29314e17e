#include "orbrr/hilbert.hpp"

#include "orbrr/polyops.hpp"

namespace orbrr {

VarietyDescriptor VarietyDescriptor::complete_intersection(std::string name,
                                                           std::vector<long> weights,
                                                           std::vector<long> degrees)
{
    if (weights.empty()) throw std::invalid_argument("descriptor: no ambient weights");
    for (long a : weights)
        if (a < 1) throw std::invalid_argument("descriptor: weights must be positive");
    for (long d : degrees)
        if (d < 1) throw std::invalid_argument("descriptor: degrees must be positive");
    VarietyDescriptor v;
    v.name_ = std::move(name);
    v.weights_ = std::move(weights);
    v.degrees_ = std::move(degrees);
    v.dim_ = static_cast<long>(v.weights_.size()) - 1 - static_cast<long>(v.degrees_.size());
    if (v.dim_ < 0) throw std::invalid_argument("descriptor: negative dimension");
    long k = 0;
    for (long d : v.degrees_) k += d;
    for (long a : v.weights_) k -= a;
    v.k_ = k;
    return v;
}

VarietyDescriptor VarietyDescriptor::from_series(std::string name, RationalFn series,
                                                 long dimension, long canonical_weight)
{
    if (dimension < 1) throw std::invalid_argument("descriptor: dimension must be >= 1");
    if (!series.is_zero() && series.num().lowest_degree() < 0)
        throw std::invalid_argument("descriptor: series numerator has negative-degree terms");
    VarietyDescriptor v;
    v.name_ = std::move(name);
    v.explicit_series_ = std::move(series);
    v.dim_ = dimension;
    v.k_ = canonical_weight;
    return v;
}

VarietyDescriptor& VarietyDescriptor::add_point(long s, std::vector<long> b, int count)
{
    if (count < 1) throw std::invalid_argument("descriptor: point count must be >= 1");
    if (static_cast<long>(b.size()) != dim_)
        throw std::invalid_argument("descriptor: point needs dimension-many weights");
    points_.push_back({PointType::make(s, std::move(b), k_), count});
    return *this;
}

VarietyDescriptor& VarietyDescriptor::add_curve(CurveLocus c)
{
    if (static_cast<long>(c.a.size()) != dim_ - 1)
        throw std::invalid_argument("descriptor: curve needs (dimension-1)-many transverse weights");
    long sum = 0;
    for (long ai : c.a) sum += ai;
    if (mod_nonneg(k_ + sum, c.r) != 0)
        throw math_error("CurveLocus: canonical weight not compatible with curve type");
    curves_.push_back(std::move(c));
    return *this;
}

RationalFn VarietyDescriptor::series() const
{
    if (is_complete_intersection()) return series_of(*this);
    return explicit_series_;
}

RationalFn series_of(const VarietyDescriptor& v)
{
    if (!v.is_complete_intersection()) return v.series();
    LaurentPoly num = LaurentPoly::one();
    for (long d : v.equation_degrees())
        num = num * (LaurentPoly::one() - LaurentPoly::monomial(d, 1));
    RationalFn::Factors den;
    for (long a : v.ambient_weights()) den[a] += 1;
    return RationalFn(std::move(num), std::move(den));
}

std::vector<Rational> expand(const RationalFn& f, long N)
{
    if (N < 0) throw std::invalid_argument("expand: N must be >= 0");
    if (f.is_zero()) return std::vector<Rational>(static_cast<std::size_t>(N + 1));
    if (f.num().lowest_degree() < 0)
        throw std::invalid_argument("expand: numerator has negative-degree terms");
    std::vector<Rational> c(static_cast<std::size_t>(N + 1));
    for (const auto& [d, q] : f.num().terms())
        if (d <= N) c[static_cast<std::size_t>(d)] = q;
    // divide by each (1 - t^a)^m: running sums with stride a
    for (const auto& [a, m] : f.den())
        for (int rep = 0; rep < m; ++rep)
            for (long i = a; i <= N; ++i)
                c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - a)];
    return c;
}

bool gorenstein_check(const RationalFn& f, long k, long n)
{
    if (f.is_zero()) return true;
    long S = f.den_weight_sum() + k;
    long M = f.den_factor_count();
    int sign = mod_nonneg(n + 1 - M, 2) == 0 ? 1 : -1;
    return is_symmetric(f.num(), S, sign);
}

long canonical_weight(const VarietyDescriptor& v) { return v.canonical_weight(); }

long coindex(const VarietyDescriptor& v) { return v.coindex(); }

}  // namespace orbrr
