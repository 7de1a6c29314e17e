#ifndef ORBRR_SEARCH_HPP
#define ORBRR_SEARCH_HPP

#include <string>
#include <vector>

#include "orbrr/rational_fn.hpp"

namespace orbrr {

// Grid search for Hilbert series candidates: assemble
//   p = initial + sum(fixed terms) + sum(var_i * free term_i)
// over an integer grid, multiply by each trial denominator
// prod (1-t^w), and keep the assignments where the product is a
// polynomial with plausible support (integral, degree <= sum(w) + c,
// nonnegative series prefix).
struct SearchTemplate {
    std::vector<Rational> plurigenera;
    long k = 0;
    long dimension = 0;
    std::vector<RationalFn> fixed_terms;
    struct FreeTerm {
        std::string var;
        RationalFn term;
    };
    std::vector<FreeTerm> free_terms;
    std::vector<std::vector<long>> trial_denominators;
};

struct GridRange {
    std::string var;
    long lo = 0;
    long hi = -1;  // empty by default
};

struct Candidate {
    std::vector<std::pair<std::string, long>> assignment;  // grid order
    std::vector<long> weights;                             // the trial denominator
    LaurentPoly numerator;
};

// Deterministic output ordering: grid points lexicographic in the given
// ranges (first variable slowest), trial denominators in template order.
std::vector<Candidate> search(const SearchTemplate& tmpl, const std::vector<GridRange>& ranges);
std::vector<Candidate> search_serial(const SearchTemplate& tmpl,
                                     const std::vector<GridRange>& ranges);

}  // namespace orbrr

#endif
