#ifndef ORBRR_RIEMANNROCH_HPP
#define ORBRR_RIEMANNROCH_HPP

#include <vector>

#include "orbrr/dedekind.hpp"
#include "orbrr/hilbert.hpp"

namespace orbrr {

// Chern data of a weighted complete intersection, read off from
// c_t(T_X) = prod (1 + a_i H t) / prod (1 + d_j H t): c[i-1] is the
// coefficient of c_i(T_X) as a multiple of H^i, Hn the top
// self-intersection prod d / prod a.
struct ChernData {
    Rational Hn;
    std::vector<Rational> c;  // c_1 .. c_n
};

// Dimension <= 4 only (the Todd expansion below is hard-coded that far).
ChernData chern_data(const VarietyDescriptor& v);

// Degree-n part of ch(O(d)) td(X) evaluated against H^n: the smooth part
// of chi. Todd classes 1, c1/2, (c1^2+c2)/12, c1 c2/24,
// (-c1^4 + 4 c1^2 c2 + 3 c2^2 + c1 c3 - c4)/720.
Rational smooth_term(const ChernData& cd, long d, long n);

// M_P = sigma_{d mod s}(1/s(b_1..b_n)); identically 0 when some b_i is
// divisible by s (no admissible root of unity).
Rational point_term(const PointType& p, long d);

// Which curve formula to evaluate: the stack formula uses eps^d
// numerators with deg K_C as input; the moduli-space variant uses
// (eps^d - 1) numerators with deg K_X|_C. The two differ by a
// d-independent constant absorbed into td_n.
enum class CurveTermVariant { stack, moduli };

// Requires deg_kc and the gamma data on the locus (r-multiplied degrees).
Rational curve_term(const CurveLocus& c, long d, CurveTermVariant variant = CurveTermVariant::stack);

// Precomputes Chern data and every Dedekind vector once; chi(d) is then a
// cheap periodic lookup. Immutable after construction, safe to share
// across threads.
class ChiEvaluator {
public:
    explicit ChiEvaluator(const VarietyDescriptor& v,
                          CurveTermVariant variant = CurveTermVariant::stack);

    Rational chi_rational(long d) const;
    Integer chi(long d) const;  // throws math_error when not an integer

private:
    struct PointData {
        int count;
        long s;
        bool vanishes;
        SigmaVector sigma;
    };
    struct GammaData {
        long a;
        Rational deg;
        SigmaVector doubled;
    };
    struct CurveData {
        Rational deg_h;
        Rational deg_kc;
        SigmaVector sigma;
        std::vector<GammaData> gammas;
    };
    long n_;
    CurveTermVariant variant_;
    ChernData cd_;
    std::vector<PointData> points_;
    std::vector<CurveData> curves_;
};

Integer chi(const VarietyDescriptor& v, long d,
            CurveTermVariant variant = CurveTermVariant::stack);

// chi over an inclusive range; the OpenMP kernel and the serial
// reference produce identical output.
std::vector<Integer> chi_range(const VarietyDescriptor& v, long lo, long hi,
                               CurveTermVariant variant = CurveTermVariant::stack);
std::vector<Integer> chi_range_serial(const VarietyDescriptor& v, long lo, long hi,
                                      CurveTermVariant variant = CurveTermVariant::stack);

}  // namespace orbrr

#endif
