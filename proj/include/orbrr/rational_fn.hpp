#ifndef ORBRR_RATIONAL_FN_HPP
#define ORBRR_RATIONAL_FN_HPP

#include <map>
#include <optional>
#include <string>

#include "orbrr/laurent.hpp"

namespace orbrr {

// A rational function kept as numerator / prod (1 - t^a)^m. The
// denominator is never expanded away; equality is decided by
// cross-multiplication. Construction and products keep the factors as
// given (term shapes stay intact); sums merge the two denominators and
// cancel factors dividing the numerator, so telescoping sums collapse
// to polynomials. An empty factor map means the value is a (Laurent)
// polynomial.
class RationalFn {
public:
    using Factors = std::map<long, int>;  // a -> multiplicity, both positive

    RationalFn() = default;
    explicit RationalFn(LaurentPoly num) : num_(std::move(num)) {}
    RationalFn(LaurentPoly num, Factors den);

    static RationalFn zero() { return RationalFn(); }
    static RationalFn one() { return RationalFn(LaurentPoly::one()); }

    const LaurentPoly& num() const { return num_; }
    const Factors& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    LaurentPoly den_expanded() const;
    long den_weight_sum() const;   // sum of a*m over factors
    long den_factor_count() const; // sum of multiplicities

    RationalFn operator-() const;
    RationalFn operator+(const RationalFn& g) const;
    RationalFn operator-(const RationalFn& g) const;
    RationalFn operator*(const RationalFn& g) const;
    RationalFn operator*(const Rational& c) const;
    RationalFn operator*(const LaurentPoly& p) const;

    // multiply by (1 - t^a)^m, cancelling against the denominator first
    RationalFn times_factor(long a, int m = 1) const;
    // divide by (1 - t^a)^m, i.e. add denominator factors
    RationalFn over_factor(long a, int m = 1) const;

    // equality as rational functions (cross-multiplied, exact)
    bool equals(const RationalFn& g) const;
    bool operator==(const RationalFn& g) const { return equals(g); }
    bool operator!=(const RationalFn& g) const { return !equals(g); }
    // literal equality: same numerator and same factor multiset
    bool identical(const RationalFn& g) const
    {
        return num_ == g.num_ && den_ == g.den_;
    }

    // numerator / den_expanded when the division is exact
    std::optional<LaurentPoly> to_polynomial() const;

    // "(num)/((1-t)^2(1-t^2))" or just the numerator when polynomial
    std::string to_string() const;
    static RationalFn parse(const std::string& text);

private:
    LaurentPoly num_;
    Factors den_;

    void strip_zero();
    // cancel (1-t^a) denominator factors that divide the numerator; run
    // after +/- so telescoping sums collapse to polynomials
    void cancel_common();
};

inline RationalFn operator*(const Rational& c, const RationalFn& f) { return f * c; }
inline RationalFn operator*(const LaurentPoly& p, const RationalFn& f) { return f * p; }

}  // namespace orbrr

#endif
