#ifndef ORBRR_ORACLE_HPP
#define ORBRR_ORACLE_HPP

#include <string>

#include "orbrr/dedekind.hpp"

namespace orbrr {

// Floating-point cross-check for sigma_all: direct summation of
//   (1/r) sum_{eps in mu_r, eps^{a_j} != 1 for all j} eps^i / prod (1 - eps^{-a_j})
// over complex r-th roots of unity at `digits` decimal digits of
// precision (digits >= 30). Independent of the exact xgcd path.
std::string sigma_oracle(const DedekindSpec& spec, long i, int digits);

// |oracle - exact| evaluated in the oracle's precision. With correct
// implementations this is far below 10^-(digits-10).
double sigma_oracle_gap(const DedekindSpec& spec, long i, const Rational& exact, int digits);

}  // namespace orbrr

#endif
