#include "orbrr/dedekind.hpp"

#include <algorithm>
#include <set>

#include "orbrr/linalg.hpp"
#include "orbrr/polyops.hpp"

namespace orbrr {

DedekindSpec::DedekindSpec(long modulus, std::vector<long> a) : r(modulus), weights(std::move(a))
{
    if (r < 2) throw std::invalid_argument("DedekindSpec: modulus must be >= 2");
    if (weights.empty()) throw std::invalid_argument("DedekindSpec: empty weight list");
    for (long w : weights) {
        if (w <= 0) throw std::invalid_argument("DedekindSpec: weights must be positive");
        if (w % r == 0) throw math_error("DedekindSpec: weight divisible by modulus");
    }
}

SigmaVector sigma_all(const DedekindSpec& spec)
{
    const long r = spec.r;
    LaurentPoly pi = LaurentPoly::one();
    for (long a : spec.weights)
        pi = pi * (LaurentPoly::one() - LaurentPoly::monomial(a, 1));
    const LaurentPoly A = cyclo_quotient(r);
    const LaurentPoly h = poly_gcd(pi, A);
    const long dG = h.is_zero() ? 0 : h.degree();
    auto Bopt = LaurentPoly::divexact(A, h);
    if (!Bopt) throw math_error("sigma_all: gcd does not divide the cyclotomic quotient");
    const LaurentPoly B = *Bopt;

    // particular inverse alpha of pi modulo B
    const LaurentPoly alpha = inverse_mod(pi, B);

    // sigma poly = alpha - f*B with unknown f of degree <= deg h; the
    // coefficient of t^p is affine-linear in the dG+1 unknowns.
    // affine[p] = constant term, coef[p][m] = coefficient of unknown v_m.
    std::vector<Rational> affine(static_cast<std::size_t>(r));
    std::vector<std::vector<Rational>> coef(static_cast<std::size_t>(r),
                                            std::vector<Rational>(static_cast<std::size_t>(dG + 1)));
    for (long p = 0; p < r; ++p) affine[static_cast<std::size_t>(p)] = alpha.coeff(p);
    for (long m = 0; m <= dG; ++m)
        for (const auto& [d, c] : B.terms()) {
            long p = m + d;
            if (p < r) coef[static_cast<std::size_t>(p)][static_cast<std::size_t>(m)] = -c;
        }

    // relations: sum over every residue class mod w of sigma vanishes,
    // for each distinct w = gcd(a_j, r); w = 1 gives sum sigma_i = 0.
    std::set<long> ws{1};
    for (long a : spec.weights) ws.insert(gcd_long(a, r));
    std::vector<std::vector<Rational>> M;
    std::vector<Rational> rhs;
    for (long w : ws) {
        for (long k = 0; k < w; ++k) {
            std::vector<Rational> row(static_cast<std::size_t>(dG + 1));
            Rational cst = 0;
            for (long p = k; p < r; p += w) {
                cst += affine[static_cast<std::size_t>(p)];
                for (long m = 0; m <= dG; ++m)
                    row[static_cast<std::size_t>(m)] += coef[static_cast<std::size_t>(p)][static_cast<std::size_t>(m)];
            }
            M.push_back(std::move(row));
            rhs.push_back(-cst);
        }
    }
    std::vector<Rational> f;
    try {
        f = solve_exact(std::move(M), std::move(rhs));
    } catch (const math_error& e) {
        throw math_error(std::string("sigma_all: relation system failed (") + e.what() + ")");
    }

    std::vector<Rational> sigma(static_cast<std::size_t>(r));
    for (long p = 0; p < r; ++p) {
        Rational v = affine[static_cast<std::size_t>(p)];
        for (long m = 0; m <= dG; ++m)
            v += coef[static_cast<std::size_t>(p)][static_cast<std::size_t>(m)] * f[static_cast<std::size_t>(m)];
        sigma[static_cast<std::size_t>(p)] = v;
    }
    return SigmaVector(std::move(sigma));
}

Rational delta_closed_form(long r, long a, long i)
{
    if (r < 2) throw std::invalid_argument("delta_closed_form: r must be >= 2");
    if (gcd_long(a, r) != 1) throw math_error("delta_closed_form: gcd(a, r) != 1");
    long b = 0;
    long an = mod_nonneg(a, r);
    for (long c = 1; c < r; ++c)
        if (mod_nonneg(an * c, r) == 1) {
            b = c;
            break;
        }
    long bi = mod_nonneg(b * mod_nonneg(i, r), r);
    return Rational(-bi) / r;
}

Rational delta_ij(long r, const std::vector<long>& A, std::size_t j, long i)
{
    if (j < 1 || j > A.size()) throw std::invalid_argument("delta_ij: j out of range");
    std::vector<long> doubled = A;
    doubled.push_back(A[j - 1]);
    SigmaVector s = sigma_all(DedekindSpec(r, doubled));
    return s.at(i) + s.at(i - A[j - 1]);
}

}  // namespace orbrr
