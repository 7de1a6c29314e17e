#include "doctest.h"
#include "orbrr/riemannroch.hpp"
#include "test_util.hpp"

using namespace orbrr;
using namespace orbrr::testutil;

namespace {

VarietyDescriptor make_x11()
{
    auto v = VarietyDescriptor::complete_intersection("X11", {1, 2, 3, 5}, {11});
    v.add_point(2, {1, 1}).add_point(3, {1, 2}).add_point(5, {2, 3});
    return v;
}

VarietyDescriptor make_x80()
{
    auto v = VarietyDescriptor::complete_intersection("X80", {3, 5, 7, 25, 40}, {80});
    v.add_point(3, {1, 1, 1}).add_point(7, {4, 5, 5}).add_point(25, {3, 7, 15});
    CurveLocus c = CurveLocus::make(5, {2, 3}, frac(2, 25));
    c.deg_kc = frac(4, 5);  // K_C = O_C(10), so deg K_C = 10 * deg H|_C
    c.gammas = {{3, frac(6, 25)}, {2, frac(14, 25)}};  // N = O_C(3) + O_C(7)
    c.dissidents = {2};
    v.add_curve(c);
    return v;
}

}  // namespace

TEST_CASE("chern_data: X80 in P(3,5,7,25,40)")
{
    ChernData cd = chern_data(make_x80());
    CHECK(cd.c == std::vector<Rational>{0, 2046, -143960});
    CHECK(cd.Hn == frac(2, 2625));
}

TEST_CASE("chern_data: X11 in P(1,2,3,5)")
{
    ChernData cd = chern_data(make_x11());
    CHECK(cd.c[0] == 0);
    CHECK(cd.Hn == frac(11, 30));
    // evaluated second Chern number c_2 . [X] = 41 * H^2 = 451/30
    CHECK(cd.c[1] * cd.Hn == frac(451, 30));
}

TEST_CASE("chern_data: linear cone reduces to the smaller space")
{
    auto cone = VarietyDescriptor::complete_intersection("cone", {1, 2, 3}, {3});
    auto plane = VarietyDescriptor::complete_intersection("P(1,2)", {1, 2}, {});
    ChernData a = chern_data(cone), b = chern_data(plane);
    CHECK(a.c == b.c);
    CHECK(a.Hn == b.Hn);
    CHECK_THROWS_AS(chern_data(VarietyDescriptor::complete_intersection(
                        "5fold", {1, 1, 1, 1, 1, 1}, {})),
                    std::invalid_argument);
}

TEST_CASE("smooth_term matches the closed forms from the worked examples")
{
    ChernData x80 = chern_data(make_x80());
    for (long d = 0; d <= 12; ++d) {
        Rational expect = (Rational(d) * d * d / 6 + Rational(341) * d / 2) * frac(2, 2625);
        CHECK(smooth_term(x80, d, 3) == expect);
    }
    ChernData x11 = chern_data(make_x11());
    for (long d = 0; d <= 12; ++d) {
        Rational expect = frac(451, 360) + Rational(d) * d / 2 * frac(11, 30);
        CHECK(smooth_term(x11, d, 2) == expect);
    }
    // c1 = 0 and n = 3 leaves only the odd Todd term at d = 0
    ChernData cd;
    cd.Hn = 1;
    cd.c = {0, 7, 5};
    CHECK(smooth_term(cd, 0, 3) == 0);
}

TEST_CASE("point_term")
{
    PointType half = PointType::make(2, {1, 1}, 0);
    CHECK(point_term(half, 0) == frac(1, 8));
    PointType p3 = PointType::make(5, {2, 3}, 0);
    SigmaVector s = sigma_all(DedekindSpec(5, {2, 3}));
    for (long d = -3; d <= 12; ++d) {
        CHECK(point_term(p3, d) == s.at(d));
        CHECK(point_term(p3, d) == point_term(p3, d + 5));  // periodic
    }
    // a weight divisible by the order admits no root of unity at all
    PointType degenerate = PointType::make(3, {3, 1, 2}, 0);
    CHECK(point_term(degenerate, 1) == 0);
}

TEST_CASE("curve_term reproduces the X80 script formula")
{
    CurveLocus c = CurveLocus::make(5, {2, 3}, frac(2, 25));
    c.deg_kc = frac(4, 5);
    c.gammas = {{3, frac(6, 25)}, {2, frac(14, 25)}};
    SigmaVector s1 = sigma_all(DedekindSpec(5, {2, 3}));
    SigmaVector s2 = sigma_all(DedekindSpec(5, {3, 3, 2}));
    SigmaVector s3 = sigma_all(DedekindSpec(5, {3, 2, 2}));
    for (long d = 0; d <= 14; ++d) {
        Rational script = (s1.at(d) * d - frac(1, 2) * 10 * s1.at(d) - Rational(3) * s2.at(d - 3) -
                           Rational(7) * s3.at(d - 7)) *
                          frac(2, 25);
        CHECK(curve_term(c, d) == script);
    }
}

TEST_CASE("curve_term: degenerate degree data gives 0")
{
    CurveLocus c = CurveLocus::make(5, {2, 3}, Rational(0));
    c.deg_kc = Rational(0);
    c.gammas = {{3, Rational(0)}, {2, Rational(0)}};
    for (long d = 0; d <= 6; ++d) CHECK(curve_term(c, d) == 0);
    CurveLocus missing = CurveLocus::make(5, {2, 3}, Rational(1));
    CHECK_THROWS_AS(curve_term(missing, 1), math_error);
}

TEST_CASE("curve_term for r=2 against the direct eps=-1 evaluation")
{
    // at r=2 the only root of unity is -1 and the whole curve sum is rational
    CurveLocus c = CurveLocus::make(2, {1, 1}, frac(5, 2));
    c.deg_kc = frac(7, 2);
    c.gammas = {{1, frac(3, 2)}, {1, frac(1, 2)}};
    for (long d = 0; d <= 8; ++d) {
        Rational eps_d = (d % 2 == 0) ? 1 : -1;
        // (1/2) eps^d / (1-eps^{-1})^2 = eps^d / 8
        Rational sig = eps_d / 8;
        Rational dbl = eps_d / 16;               // (1/2) eps^d / (1-eps^{-1})^3
        Rational dbl_shift = -eps_d / 16;        // index d-1
        Rational expect = sig * d * frac(5, 2) - sig * frac(7, 2) / 2 -
                          dbl_shift * frac(3, 2) - dbl_shift * frac(1, 2);
        CHECK(curve_term(c, d) == expect);
    }
}

TEST_CASE("chi: X11 plurigenera")
{
    auto v = make_x11();
    std::vector<Integer> expect{1, 2, 3, 4, 6, 8, 10, 13, 16, 20};
    CHECK(chi_range(v, 1, 10) == expect);
    CHECK(chi_range_serial(v, 1, 10) == expect);
    // chi(O) of a quasismooth K3 is 2
    CHECK(chi(v, 0) == 2);
}

TEST_CASE("chi: X80 plurigenera")
{
    auto v = make_x80();
    std::vector<Integer> expect{0, 1, 0, 1, 1, 1, 1, 1, 2};
    CHECK(chi_range(v, 2, 10) == expect);
    // chi(O) of a Calabi-Yau threefold is 0
    CHECK(chi(v, 0) == 0);
}

TEST_CASE("chi agrees with the Hilbert series coefficients")
{
    auto x11 = make_x11();
    auto p11 = expand(series_of(x11), 60);
    auto c11 = chi_range(x11, 1, 60);
    for (long d = 1; d <= 60; ++d)
        CHECK(c11[static_cast<std::size_t>(d - 1)] == p11[static_cast<std::size_t>(d)].get_num());

    auto x80 = make_x80();
    auto p80 = expand(series_of(x80), 60);
    auto c80 = chi_range(x80, 1, 60);
    for (long d = 1; d <= 60; ++d)
        CHECK(c80[static_cast<std::size_t>(d - 1)] == p80[static_cast<std::size_t>(d)].get_num());
}

TEST_CASE("stack and moduli curve variants differ by a d-independent constant")
{
    // X80 is Calabi-Yau, so deg K_X|_C = deg K_C - sum deg gamma = 0
    CurveLocus stack_c = CurveLocus::make(5, {2, 3}, frac(2, 25));
    stack_c.deg_kc = frac(4, 5);
    stack_c.gammas = {{3, frac(6, 25)}, {2, frac(14, 25)}};
    CurveLocus moduli_c = stack_c;
    moduli_c.deg_kc = Rational(0);
    Rational gap = curve_term(stack_c, 0, CurveTermVariant::stack) -
                   curve_term(moduli_c, 0, CurveTermVariant::moduli);
    for (long d = 1; d <= 15; ++d)
        CHECK(curve_term(stack_c, d, CurveTermVariant::stack) -
                  curve_term(moduli_c, d, CurveTermVariant::moduli) ==
              gap);
}

TEST_CASE("inconsistent baskets surface as a non-integral chi")
{
    auto v = VarietyDescriptor::complete_intersection("broken", {1, 2, 3, 5}, {11});
    v.add_point(2, {1, 1}).add_point(3, {1, 2});
    // the 1/5(2,3) point is missing entirely
    CHECK_THROWS_AS(chi(v, 1), math_error);
}
