#ifndef ORBRR_DEDEKIND_HPP
#define ORBRR_DEDEKIND_HPP

#include <vector>

#include "orbrr/rational.hpp"

namespace orbrr {

// Cyclic quotient data 1/r(a_1,...,a_n). Weights may repeat (a repeated
// weight squares its factor in the Dedekind-sum denominator) but no
// weight may be divisible by r.
struct DedekindSpec {
    long r = 0;
    std::vector<long> weights;

    DedekindSpec(long modulus, std::vector<long> a);
};

// The vector sigma_0..sigma_{r-1} of generalized Dedekind sums
//   sigma_i = (1/r) sum over r-th roots of unity eps with eps^{a_j} != 1
//             of eps^i / prod_j (1 - eps^{-a_j}).
// Indexing wraps mod r; negative indices normalize into [0, r-1].
class SigmaVector {
public:
    explicit SigmaVector(std::vector<Rational> values) : v_(std::move(values)) {}
    long modulus() const { return static_cast<long>(v_.size()); }
    const Rational& at(long i) const { return v_[static_cast<std::size_t>(mod_nonneg(i, modulus()))]; }
    const std::vector<Rational>& values() const { return v_; }

private:
    std::vector<Rational> v_;
};

// Exact computation: sum sigma_i t^i is the inverse of prod (1 - t^{a_j})
// modulo (1 - t^r)/(h (1 - t)), pinned down by the vanishing class sums
// and sum sigma_i = 0, solved as an exact linear system.
SigmaVector sigma_all(const DedekindSpec& spec);

// delta_i(1/r(a)) = sigma_i - sigma_0 = -((b i) mod r)/r with a b == 1 mod r.
// Requires gcd(a, r) = 1.
Rational delta_closed_form(long r, long a, long i);

// delta_{i,j} = sigma_i(A with a_j doubled) + sigma_{i - a_j}(same).
// j is 1-based into A.
Rational delta_ij(long r, const std::vector<long>& A, std::size_t j, long i);

}  // namespace orbrr

#endif
