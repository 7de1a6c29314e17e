#include <random>

#include "doctest.h"
#include "orbrr/parser.hpp"
#include "orbrr/polyops.hpp"
#include "test_util.hpp"

using namespace orbrr;
using namespace orbrr::testutil;

namespace {

std::mt19937 rng(90210u);

VarietyDescriptor make_x12()
{
    auto v = VarietyDescriptor::complete_intersection("X12", {1, 2, 2, 3, 4}, {12});
    v.add_curve(CurveLocus::make(2, {1, 1}, frac(3, 2)));
    return v;
}

VarietyDescriptor make_x10()
{
    auto v = VarietyDescriptor::complete_intersection("X10", {1, 1, 1, 2, 2, 2}, {10});
    v.add_curve(CurveLocus::make(2, {1, 1, 1}, frac(5, 2)));
    return v;
}

VarietyDescriptor make_x36()
{
    auto v = VarietyDescriptor::complete_intersection("X36", {1, 4, 5, 6, 9, 10}, {36});
    v.add_point(10, {1, 4, 5, 9});
    v.add_point(3, {1, 1, 1, 2}, 2);
    CurveLocus c = CurveLocus::make(2, {1, 1, 1}, frac(3, 10));
    c.dissidents = {0};
    v.add_curve(c);
    CurveLocus l = CurveLocus::make(5, {1, 4, 4}, frac(1, 10));
    l.dissidents = {0};
    v.add_curve(l);
    return v;
}

VarietyDescriptor make_deg16()
{
    auto v = VarietyDescriptor::complete_intersection("X16", {1, 1, 1, 3, 3, 8}, {16});
    v.add_curve(CurveLocus::make(3, {1, 1, 2}, frac(1, 3)));
    return v;
}

VarietyDescriptor make_deg13()
{
    auto v = VarietyDescriptor::complete_intersection("X13", {1, 1, 1, 3, 3, 5}, {13});
    v.add_point(5, {1, 1, 1, 3});
    v.add_curve(CurveLocus::make(3, {1, 1, 2}, frac(1, 3)));
    return v;
}

}  // namespace

TEST_CASE("parse X12: initial term plus one pure curve")
{
    ParsedSeries ps = parse(make_x12());
    CHECK(ps.report.pass());
    CHECK(ps.initial.identical(RationalFn::parse("(1 - 3*t + 5*t^2 - 3*t^3 + t^4)/((1 - t)^4)")));
    CHECK(ps.point_terms.empty());
    REQUIRE(ps.curve_parts.size() == 1);
    CHECK(ps.curve_parts[0].g == LaurentPoly::monomial(0, 3));
    CHECK(ps.curve_parts[0].s1_term.identical(RationalFn::parse("(-t^3)/((1 - t)^2(1 - t^2)^2)")));
    CHECK(ps.curve_parts[0].first.identical(RationalFn::parse("(-3*t^3)/((1 - t)^2(1 - t^2)^2)")));
    CHECK(ps.curve_parts[0].second.is_zero());

    // the series minus its parsed parts collapses to the structural zero
    RationalFn diff = ps.series - ps.initial - ps.curve_parts[0].first - ps.curve_parts[0].second;
    CHECK(diff.is_zero());
}

TEST_CASE("parse X10: coefficient 5 = 2 deg H")
{
    ParsedSeries ps = parse(make_x10());
    CHECK(ps.report.pass());
    CHECK(ps.initial.identical(RationalFn::parse("(1 - 2*t + 4*t^2 - 6*t^3 + 4*t^4 - 2*t^5 + t^6)/((1 - t)^5)")));
    REQUIRE(ps.curve_parts.size() == 1);
    CHECK(ps.curve_parts[0].g == LaurentPoly::monomial(0, 5));
    CHECK(ps.curve_parts[0].s1_term.identical(RationalFn::parse("(t^4)/((1 - t)^3(1 - t^2)^2)")));
    CHECK(ps.curve_parts[0].second.is_zero());
}

TEST_CASE("parse X36: dissident point bites off both curves")
{
    ParsedSeries ps = parse(make_x36());
    CHECK(ps.report.pass());
    CHECK(ps.initial.identical(RationalFn::parse("(1 - 4*t + 6*t^2 - 4*t^3 + 6*t^4 - 4*t^5 + t^6)/((1 - t)^5)")));
    REQUIRE(ps.point_terms.size() == 3);  // 1/10 point + two 1/3 points
    CHECK(ps.point_terms[0].identical(RationalFn::parse("(-t^9 + t^10 - t^11)/((1 - t)^2(1 - t^2)(1 - t^5)(1 - t^10))")));
    CHECK(ps.point_terms[1].identical(RationalFn::parse("(-t^4)/((1 - t)^4(1 - t^3))")));
    CHECK(ps.point_terms[2].identical(ps.point_terms[1]));

    REQUIRE(ps.curve_parts.size() == 2);
    // C of type 1/2(1,1,1): everything is bitten off
    CHECK(ps.curve_parts[0].g.is_zero());
    CHECK(ps.curve_parts[0].first.is_zero());
    CHECK(ps.curve_parts[0].second.is_zero());
    // L of type 1/5(1,4,4): g = t + 1/t and a genuine second part
    CHECK(ps.curve_parts[1].g ==
          LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(-1, 1));
    CHECK(ps.curve_parts[1].s1_term.identical(RationalFn::parse("(t^7)/((1 - t)^3(1 - t^5)^2)")));
    CHECK(ps.curve_parts[1].first.identical(RationalFn::parse("(t^6 + t^8)/((1 - t)^3(1 - t^5)^2)")));
    CHECK(ps.curve_parts[1].second.identical(RationalFn::parse("(-2*t^4 - 3*t^5 - 2*t^6)/((1 - t)^4(1 - t^5))")));
}

TEST_CASE("parse degree-16 and degree-13: same curve type, different second parts")
{
    ParsedSeries a = parse(make_deg16());
    CHECK(a.report.pass());
    CHECK(a.initial.identical(RationalFn::parse("(1 - 2*t + t^2 - 2*t^3 + t^4)/((1 - t)^5)")));
    REQUIRE(a.curve_parts.size() == 1);
    CHECK(a.curve_parts[0].g == LaurentPoly::monomial(0, 1));
    CHECK(a.curve_parts[0].first.identical(RationalFn::parse("(-t^4)/((1 - t)^3(1 - t^3)^2)")));
    CHECK(a.curve_parts[0].second.identical(RationalFn::parse("(4*t^3)/((1 - t)^4(1 - t^3))")));

    ParsedSeries b = parse(make_deg13());
    CHECK(b.report.pass());
    CHECK(b.initial.identical(a.initial));  // same plurigenera 1, 3, 6
    REQUIRE(b.point_terms.size() == 1);
    CHECK(b.point_terms[0].identical(RationalFn::parse("(t^3 + t^5)/((1 - t)^4(1 - t^5))")));
    REQUIRE(b.curve_parts.size() == 1);
    CHECK(b.curve_parts[0].first.identical(a.curve_parts[0].first));
    CHECK(b.curve_parts[0].second.identical(RationalFn::parse("(3*t^3)/((1 - t)^4(1 - t^3))")));
}

TEST_CASE("re-parsing the reassembled series reproduces identical parts")
{
    for (const VarietyDescriptor& v :
         {make_x12(), make_x36(), make_x10(), make_deg16(), make_deg13()}) {
        ParsedSeries ps = parse(v);
        REQUIRE(ps.report.pass());
        auto w = VarietyDescriptor::from_series(v.name() + "-re", ps.reassembled(), v.dimension(),
                                                v.canonical_weight());
        for (const PointEntry& pe : v.points()) w.add_point(pe.type.s, pe.type.b, pe.count);
        for (const CurveLocus& c : v.curves()) w.add_curve(c);
        ParsedSeries qs = parse(w);
        CHECK(qs.report.pass());
        CHECK(qs.initial.identical(ps.initial));
        REQUIRE(qs.point_terms.size() == ps.point_terms.size());
        for (std::size_t i = 0; i < qs.point_terms.size(); ++i)
            CHECK(qs.point_terms[i].identical(ps.point_terms[i]));
        REQUIRE(qs.curve_parts.size() == ps.curve_parts.size());
        for (std::size_t i = 0; i < qs.curve_parts.size(); ++i) {
            CHECK(qs.curve_parts[i].g == ps.curve_parts[i].g);
            CHECK(qs.curve_parts[i].first.identical(ps.curve_parts[i].first));
            CHECK(qs.curve_parts[i].second.identical(ps.curve_parts[i].second));
        }
    }
}

TEST_CASE("every parsed part is Gorenstein symmetric and integral")
{
    for (const VarietyDescriptor& v :
         {make_x12(), make_x36(), make_x10(), make_deg16(), make_deg13()}) {
        ParsedSeries ps = parse(v);
        long k = v.canonical_weight(), n = v.dimension();
        CHECK(gorenstein_check(ps.initial, k, n));
        CHECK(ps.initial.num().is_integral());
        for (const RationalFn& p : ps.point_terms) {
            CHECK(gorenstein_check(p, k, n));
            CHECK(p.num().is_integral());
        }
        for (const CurvePart& cp : ps.curve_parts) {
            CHECK(gorenstein_check(cp.first, k, n));
            CHECK(gorenstein_check(cp.second, k, n));
            CHECK(cp.g.is_integral());
            CHECK(cp.second.num().is_integral());
        }
        // reassembly, both exact and coefficientwise
        CHECK(ps.reassembled().equals(ps.series));
        auto ea = expand(ps.reassembled(), 120);
        auto eb = expand(ps.series, 120);
        CHECK(ea == eb);
    }
}

TEST_CASE("corrupting degH is detected")
{
    auto v = make_x12();
    v.curves()[0].deg_h = 2;  // true value 3/2
    ParsedSeries ps = parse(v);
    CHECK_FALSE(ps.report.pass());
    bool residual_or_sum = false;
    for (const CheckResult& c : ps.report.checks)
        if (!c.pass && (c.name.find("residual") != std::string::npos ||
                        c.name.find("sum of parts") != std::string::npos ||
                        c.name.find("g_C") != std::string::npos))
            residual_or_sum = true;
    CHECK(residual_or_sum);

    auto w = make_x36();
    w.curves()[1].deg_h = frac(3, 10);  // true value 1/10
    ParsedSeries qs = parse(w);
    CHECK_FALSE(qs.report.pass());
}

TEST_CASE("omitting a dissident point is detected")
{
    auto v = make_x36();
    v.curves()[0].dissidents.clear();  // drop the 1/10 point from C
    ParsedSeries ps = parse(v);
    CHECK_FALSE(ps.report.pass());
    bool g_failed = false;
    for (const CheckResult& c : ps.report.checks)
        if (!c.pass && c.name.find("g_C") != std::string::npos) g_failed = true;
    CHECK(g_failed);
}

TEST_CASE("split_residual: single curve window reduction")
{
    // R = S_{C,2}/((1-t)^n(1-t^r)) comes straight back
    long k = 0, n = 3, c = 4;
    CurveLocus cv = CurveLocus::make(3, {1, 2}, Rational(1));
    LaurentPoly s2 = LaurentPoly::parse("4*t^3 - t^4");  // window [3,4]
    RationalFn R(s2, {{1, 3}, {3, 1}});
    auto parts = split_residual(R, {cv}, k, n);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == s2);
    (void)c;
}

TEST_CASE("split_residual: two coprime curves recombine exactly")
{
    long k = 0, n = 3;
    long c = k + n + 1;
    long start = c / 2 + 1;
    CurveLocus c3 = CurveLocus::make(3, {1, 2}, Rational(1));
    CurveLocus c5 = CurveLocus::make(5, {2, 3}, Rational(1));
    std::uniform_int_distribution<int> coeff(-6, 6);
    for (int iter = 0; iter < 60; ++iter) {
        LaurentPoly s3, s5;
        for (long d = start; d <= start + 1; ++d) s3.set_coeff(d, coeff(rng));
        for (long d = start; d <= start + 3; ++d) s5.set_coeff(d, coeff(rng));
        RationalFn R = RationalFn(s3, {{1, 3}, {3, 1}}) + RationalFn(s5, {{1, 3}, {5, 1}});
        auto parts = split_residual(R, {c3, c5}, k, n);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0] == s3);
        CHECK(parts[1] == s5);
    }
}

TEST_CASE("split_residual: inconsistent residual is rejected")
{
    CurveLocus c3 = CurveLocus::make(3, {1, 2}, Rational(1));
    // not of the form S/( (1-t)^{n+1} A_3 ): denominator carries (1-t^9)
    RationalFn bad(LaurentPoly::monomial(3, 1), {{1, 3}, {9, 1}});
    CHECK_THROWS_AS(split_residual(bad, {c3}, 0, 3), math_error);
    // nonzero residual but no curves at all
    RationalFn r(LaurentPoly::one(), {{1, 4}});
    CHECK_THROWS_AS(split_residual(r, {}, 0, 3), math_error);
}

TEST_CASE("split_residual: non-coprime curve orders are genuinely ambiguous")
{
    // A_4 and A_6 share the factor 1+t, so the windowed decomposition has a
    // nontrivial kernel; the exact solver reports the ambiguity instead of
    // picking a representative
    long k = 0, n = 3;
    CurveLocus c4 = CurveLocus::make(4, {1, 3}, Rational(1));
    CurveLocus c6 = CurveLocus::make(6, {1, 5}, Rational(1));
    LaurentPoly s4 = LaurentPoly::parse("t^3 + t^5");
    RationalFn R(s4, {{1, 3}, {4, 1}});
    CHECK_THROWS_AS(split_residual(R, {c4, c6}, k, n), math_error);
}

TEST_CASE("parse rejects structural misuse")
{
    auto v = make_x36();
    v.curves()[0].dissidents = {7};  // out of range
    CHECK_THROWS_AS(parse(v), std::invalid_argument);

    // a dissident entry with multiplicity is ambiguous
    auto w = VarietyDescriptor::complete_intersection("W", {1, 4, 5, 6, 9, 10}, {36});
    w.add_point(10, {1, 4, 5, 9}, 2);
    CurveLocus c = CurveLocus::make(2, {1, 1, 1}, Rational(1));
    c.dissidents = {0};
    w.add_curve(c);
    CHECK_THROWS_AS(parse(w), std::invalid_argument);
}

TEST_CASE("the search candidates parse back with the dimension-3 basket")
{
    // the two candidate series found by the grid search, equipped with the
    // basket that drove the hunt: curves 1/2(1,1) and 1/3(1,2), dissident
    // points 1/9(1,2,6) and 1/6(1,2,3). The curve degrees follow from the
    // bite constants: bit(1/6 point onto r=2) = 1/3, onto r=3 it is 1/2,
    // and bit(1/9 point onto r=3) = 2/3.
    struct Cand {
        std::string series;
        Rational deg_h2, deg_h3;  // degrees making g = i and g = j
        long g2, g3, second;
    };
    std::vector<Cand> cands{
        {"(1 - t^9 - 3*t^12 + 3*t^18 + t^21 - t^30)"
         "/((1 - t)(1 - t^2)(1 - t^3)^2(1 - t^6)^2(1 - t^9))",
         frac(1, 6), frac(19, 18), 0, 2, 1},
        {"(1 - t^10 - 2*t^12 - t^13 - t^15 + t^16 + t^18 + 2*t^19 + t^21 - t^31)"
         "/((1 - t)(1 - t^2)(1 - t^3)(1 - t^4)(1 - t^6)^2(1 - t^9))",
         frac(2, 3), frac(7, 18), 1, 0, 1},
    };
    for (const Cand& cd : cands) {
        auto v = VarietyDescriptor::from_series("candidate", RationalFn::parse(cd.series), 3, 0);
        v.add_point(9, {1, 2, 6});
        v.add_point(6, {1, 2, 3});
        CurveLocus c2 = CurveLocus::make(2, {1, 1}, cd.deg_h2);
        c2.dissidents = {1};
        v.add_curve(c2);
        CurveLocus c3 = CurveLocus::make(3, {1, 2}, cd.deg_h3);
        c3.dissidents = {0, 1};
        v.add_curve(c3);

        ParsedSeries ps = parse(v);
        CHECK(ps.report.pass());
        CHECK(ps.initial.identical(
            RationalFn::parse("(1 - 3*t + 4*t^2 - 3*t^3 + t^4)/((1 - t)^4)")));
        REQUIRE(ps.point_terms.size() == 2);
        CHECK(ps.point_terms[0].identical(
            RationalFn::parse("(t^6 - t^7 + t^8)/((1 - t)^2(1 - t^3)(1 - t^9))")));
        CHECK(ps.point_terms[1].identical(
            RationalFn::parse("(t^6)/((1 - t)(1 - t^2)(1 - t^3)(1 - t^6))")));
        REQUIRE(ps.curve_parts.size() == 2);
        CHECK(ps.curve_parts[0].g == LaurentPoly::monomial(0, cd.g2));
        CHECK(ps.curve_parts[0].second.is_zero());  // r=2 at even coindex
        CHECK(ps.curve_parts[1].g == LaurentPoly::monomial(0, cd.g3));
        CHECK(ps.curve_parts[1].s1_term.identical(
            RationalFn::parse("(-t^4)/((1 - t)^2(1 - t^3)^2)")));
        CHECK(ps.curve_parts[1].second.identical(RationalFn(
            LaurentPoly::monomial(3, cd.second), {{1, 3}, {3, 1}})));
    }
}
