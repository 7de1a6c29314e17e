#ifndef ORBRR_HILBERT_HPP
#define ORBRR_HILBERT_HPP

#include <string>
#include <vector>

#include "orbrr/basket.hpp"
#include "orbrr/rational_fn.hpp"

namespace orbrr {

struct PointEntry {
    PointType type;
    int count = 1;
};

// A polarized variety: either a weighted complete intersection (ambient
// weights + equation degrees, Hilbert series and canonical weight
// derived) or an explicit series with user-supplied dimension and
// canonical weight. Basket data is always user-supplied.
class VarietyDescriptor {
public:
    static VarietyDescriptor complete_intersection(std::string name, std::vector<long> weights,
                                                   std::vector<long> degrees);
    static VarietyDescriptor from_series(std::string name, RationalFn series, long dimension,
                                         long canonical_weight);

    VarietyDescriptor& add_point(long s, std::vector<long> b, int count = 1);
    VarietyDescriptor& add_curve(CurveLocus c);

    const std::string& name() const { return name_; }
    bool is_complete_intersection() const { return !weights_.empty(); }
    const std::vector<long>& ambient_weights() const { return weights_; }
    const std::vector<long>& equation_degrees() const { return degrees_; }
    long dimension() const { return dim_; }
    long canonical_weight() const { return k_; }
    long coindex() const { return k_ + dim_ + 1; }
    const std::vector<PointEntry>& points() const { return points_; }
    const std::vector<CurveLocus>& curves() const { return curves_; }
    std::vector<CurveLocus>& curves() { return curves_; }
    std::vector<PointEntry>& points() { return points_; }

    RationalFn series() const;

private:
    std::string name_;
    std::vector<long> weights_;
    std::vector<long> degrees_;
    RationalFn explicit_series_;
    long dim_ = 0;
    long k_ = 0;
    std::vector<PointEntry> points_;
    std::vector<CurveLocus> curves_;
};

// prod (1-t^{d_j}) / prod (1-t^{a_i}) with the numerator expanded and the
// denominator kept factored.
RationalFn series_of(const VarietyDescriptor& v);

// first N+1 power-series coefficients; the numerator must have no
// negative-degree terms
std::vector<Rational> expand(const RationalFn& f, long N);

// P(1/t) == (-1)^(n+1) t^(-k) P(t), checked structurally on the
// numerator after the substitution maps (1-t^a) -> -t^(-a)(1-t^a).
bool gorenstein_check(const RationalFn& f, long k, long n);

long canonical_weight(const VarietyDescriptor& v);
long coindex(const VarietyDescriptor& v);

}  // namespace orbrr

#endif
