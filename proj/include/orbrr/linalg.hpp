#ifndef ORBRR_LINALG_HPP
#define ORBRR_LINALG_HPP

#include <vector>

#include "orbrr/rational.hpp"

namespace orbrr {

// Solves A x = b exactly over Q by Gauss-Jordan elimination. A may be
// overdetermined as long as it is consistent. Throws math_error when the
// system is inconsistent or does not determine every unknown.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> A,
                                  std::vector<Rational> b);

}  // namespace orbrr

#endif
