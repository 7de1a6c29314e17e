#ifndef ORBRR_LAURENT_HPP
#define ORBRR_LAURENT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbrr/rational.hpp"

namespace orbrr {

// Laurent polynomial over Q: a finite map degree -> nonzero rational
// coefficient. Degrees may be negative. Canonical form stores no zeros,
// so the zero polynomial is the empty map. Immutable by convention once
// built (all operations return new values).
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(long deg, Rational coeff);
    // Coefficients c[0..] of an ordinary polynomial, c[i] at degree i.
    static LaurentPoly from_coeffs(const std::vector<Rational>& c);

    bool is_zero() const { return coeffs_.empty(); }
    // Highest/lowest degree; both require a nonzero polynomial.
    long degree() const;
    long lowest_degree() const;
    Rational coeff(long deg) const;
    std::size_t term_count() const { return coeffs_.size(); }
    const std::map<long, Rational>& terms() const { return coeffs_; }

    bool is_integral() const;  // all coefficients in Z
    bool is_constant() const;  // zero or a single degree-0 term
    Rational constant_term() const { return coeff(0); }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& g) const;
    LaurentPoly operator-(const LaurentPoly& g) const;
    LaurentPoly operator*(const LaurentPoly& g) const;
    LaurentPoly operator*(const Rational& c) const;
    bool operator==(const LaurentPoly& g) const { return coeffs_ == g.coeffs_; }
    bool operator!=(const LaurentPoly& g) const { return !(*this == g); }

    LaurentPoly shifted(long by) const;  // multiply by t^by
    LaurentPoly pow(unsigned e) const;
    // f(1/t): degree d term moves to -d.
    LaurentPoly reciprocal_substitution() const;
    Rational eval(const Rational& x) const;  // x != 0 when degrees are negative

    // Exact division: returns f/g when the remainder is zero, nullopt
    // otherwise. g must be nonzero. Works on Laurent inputs by shifting
    // both to lowest degree 0 first.
    static std::optional<LaurentPoly> divexact(const LaurentPoly& f, const LaurentPoly& g);

    // Rendering: terms in ascending degree, e.g. "-t^9 + t^10 - t^11",
    // "1/2 - t - t^-1". parse() accepts exactly this shape (round-trip
    // exact).
    std::string to_string() const;
    static LaurentPoly parse(const std::string& text);

    void set_coeff(long deg, const Rational& c);  // canonicalizing setter

private:
    std::map<long, Rational> coeffs_;
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& f) { return f * c; }

}  // namespace orbrr

#endif
