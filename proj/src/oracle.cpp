#include "orbrr/oracle.hpp"

#include <mpfr.h>

#include <vector>

namespace orbrr {

namespace {

struct Complex {
    mpfr_t re, im;
    explicit Complex(mpfr_prec_t prec)
    {
        mpfr_init2(re, prec);
        mpfr_init2(im, prec);
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
    }
    Complex(const Complex&) = delete;
    Complex& operator=(const Complex&) = delete;
    ~Complex()
    {
        mpfr_clear(re);
        mpfr_clear(im);
    }
};

// out = a / b
void cdiv(Complex& out, const Complex& a, const Complex& b, mpfr_t t1, mpfr_t t2, mpfr_t norm)
{
    mpfr_mul(t1, b.re, b.re, MPFR_RNDN);
    mpfr_mul(t2, b.im, b.im, MPFR_RNDN);
    mpfr_add(norm, t1, t2, MPFR_RNDN);
    mpfr_mul(t1, a.re, b.re, MPFR_RNDN);
    mpfr_mul(t2, a.im, b.im, MPFR_RNDN);
    mpfr_add(out.re, t1, t2, MPFR_RNDN);
    mpfr_div(out.re, out.re, norm, MPFR_RNDN);
    mpfr_mul(t1, a.im, b.re, MPFR_RNDN);
    mpfr_mul(t2, a.re, b.im, MPFR_RNDN);
    mpfr_sub(out.im, t1, t2, MPFR_RNDN);
    mpfr_div(out.im, out.im, norm, MPFR_RNDN);
}

bool admissible(long k, long r, const std::vector<long>& weights)
{
    if (k == 0) return false;
    for (long a : weights)
        if ((k * mod_nonneg(a, r)) % r == 0) return false;
    return true;
}

// real part of the Dedekind sum, computed into `out`
void oracle_value(mpfr_t out, const DedekindSpec& spec, long i, mpfr_prec_t prec)
{
    const long r = spec.r;
    mpfr_t two_pi, angle, t1, t2, norm;
    mpfr_inits2(prec, two_pi, angle, t1, t2, norm, (mpfr_ptr) nullptr);
    mpfr_const_pi(two_pi, MPFR_RNDN);
    mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);

    Complex eps_pow(prec), denom(prec), factor(prec), term(prec), acc(prec), tmp(prec);
    auto set_root = [&](Complex& z, long exponent) {
        // z = exp(2 pi i * exponent / r)
        mpfr_mul_si(angle, two_pi, mod_nonneg(exponent, r), MPFR_RNDN);
        mpfr_div_si(angle, angle, r, MPFR_RNDN);
        mpfr_sin_cos(z.im, z.re, angle, MPFR_RNDN);
    };

    for (long k = 1; k < r; ++k) {
        if (!admissible(k, r, spec.weights)) continue;
        set_root(eps_pow, k * i);
        mpfr_set(term.re, eps_pow.re, MPFR_RNDN);
        mpfr_set(term.im, eps_pow.im, MPFR_RNDN);
        for (long a : spec.weights) {
            set_root(factor, -k * a);
            mpfr_ui_sub(denom.re, 1, factor.re, MPFR_RNDN);
            mpfr_neg(denom.im, factor.im, MPFR_RNDN);
            cdiv(tmp, term, denom, t1, t2, norm);
            mpfr_swap(tmp.re, term.re);
            mpfr_swap(tmp.im, term.im);
        }
        mpfr_add(acc.re, acc.re, term.re, MPFR_RNDN);
        mpfr_add(acc.im, acc.im, term.im, MPFR_RNDN);
    }
    mpfr_div_si(out, acc.re, r, MPFR_RNDN);
    mpfr_clears(two_pi, angle, t1, t2, norm, (mpfr_ptr) nullptr);
}

mpfr_prec_t prec_for(int digits)
{
    if (digits < 30) throw std::invalid_argument("sigma_oracle: digits must be >= 30");
    return static_cast<mpfr_prec_t>(digits * 4 + 64);
}

}  // namespace

std::string sigma_oracle(const DedekindSpec& spec, long i, int digits)
{
    mpfr_prec_t prec = prec_for(digits);
    mpfr_t v;
    mpfr_init2(v, prec);
    oracle_value(v, spec, i, prec);
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Rf", digits, v);
    std::string out(raw);
    mpfr_free_str(raw);
    mpfr_clear(v);
    return out;
}

double sigma_oracle_gap(const DedekindSpec& spec, long i, const Rational& exact, int digits)
{
    mpfr_prec_t prec = prec_for(digits);
    mpfr_t v, e;
    mpfr_init2(v, prec);
    mpfr_init2(e, prec);
    oracle_value(v, spec, i, prec);
    mpfr_set_q(e, exact.get_mpq_t(), MPFR_RNDN);
    mpfr_sub(v, v, e, MPFR_RNDN);
    mpfr_abs(v, v, MPFR_RNDN);
    double gap = mpfr_get_d(v, MPFR_RNDN);
    mpfr_clear(v);
    mpfr_clear(e);
    return gap;
}

}  // namespace orbrr
