#include "orbrr/worked_examples.hpp"

#include "orbrr/orbterms.hpp"

namespace orbrr::examples {

namespace {
Rational q(long n, long d)
{
    Rational r(n, d);
    r.canonicalize();
    return r;
}
}  // namespace

VarietyDescriptor x11()
{
    auto v = VarietyDescriptor::complete_intersection("X11", {1, 2, 3, 5}, {11});
    v.add_point(2, {1, 1}).add_point(3, {1, 2}).add_point(5, {2, 3});
    return v;
}

VarietyDescriptor x80()
{
    auto v = VarietyDescriptor::complete_intersection("X80", {3, 5, 7, 25, 40}, {80});
    v.add_point(3, {1, 1, 1}).add_point(7, {4, 5, 5}).add_point(25, {3, 7, 15});
    CurveLocus c = CurveLocus::make(5, {2, 3}, q(2, 25));
    // N = O_C(3) + O_C(7), K_C = O_C(10), all in the r-multiplied convention
    c.deg_kc = q(4, 5);
    c.gammas = {{3, q(6, 25)}, {2, q(14, 25)}};
    c.dissidents = {2};
    v.add_curve(c);
    return v;
}

VarietyDescriptor x12()
{
    auto v = VarietyDescriptor::complete_intersection("X12", {1, 2, 2, 3, 4}, {12});
    v.add_curve(CurveLocus::make(2, {1, 1}, q(3, 2)));
    return v;
}

VarietyDescriptor x10()
{
    auto v = VarietyDescriptor::complete_intersection("X10", {1, 1, 1, 2, 2, 2}, {10});
    v.add_curve(CurveLocus::make(2, {1, 1, 1}, q(5, 2)));
    return v;
}

VarietyDescriptor x36()
{
    auto v = VarietyDescriptor::complete_intersection("X36", {1, 4, 5, 6, 9, 10}, {36});
    v.add_point(10, {1, 4, 5, 9});
    v.add_point(3, {1, 1, 1, 2}, 2);
    CurveLocus c = CurveLocus::make(2, {1, 1, 1}, q(3, 10));
    c.dissidents = {0};
    v.add_curve(c);
    CurveLocus l = CurveLocus::make(5, {1, 4, 4}, q(1, 10));
    l.dissidents = {0};
    v.add_curve(l);
    return v;
}

VarietyDescriptor deg16()
{
    auto v = VarietyDescriptor::complete_intersection("X16", {1, 1, 1, 3, 3, 8}, {16});
    v.add_curve(CurveLocus::make(3, {1, 1, 2}, q(1, 3)));
    return v;
}

VarietyDescriptor deg13()
{
    auto v = VarietyDescriptor::complete_intersection("X13", {1, 1, 1, 3, 3, 5}, {13});
    v.add_point(5, {1, 1, 1, 3});
    v.add_curve(CurveLocus::make(3, {1, 1, 2}, q(1, 3)));
    return v;
}

SearchTemplate dimension3_search()
{
    SearchTemplate t;
    t.plurigenera = {1, 1, 2};
    t.k = 0;
    t.dimension = 3;
    t.fixed_terms = {qorb(PointType::make(9, {1, 2, 6}, 0), 3),
                     qorb(PointType::make(6, {1, 2, 3}, 0), 3)};
    t.free_terms.push_back({"i", curve_s1(CurveLocus::make(2, {1, 1}, Rational(0)), 0, 3)});
    t.free_terms.push_back({"j", curve_s1(CurveLocus::make(3, {1, 2}, Rational(0)), 0, 3)});
    t.free_terms.push_back({"k", RationalFn(LaurentPoly::monomial(3, 1), {{1, 3}, {3, 1}})});
    t.trial_denominators = {{1, 2, 3, 3, 6, 6, 9}, {1, 2, 3, 4, 6, 6, 9}};
    return t;
}

std::vector<GridRange> dimension3_ranges()
{
    return {{"i", 0, 3}, {"j", 0, 3}, {"k", 0, 3}};
}

}  // namespace orbrr::examples
