#include "doctest.h"
#include "orbrr/orbterms.hpp"
#include "orbrr/search.hpp"
#include "test_util.hpp"

using namespace orbrr;
using namespace orbrr::testutil;

namespace {

SearchTemplate dimension3_template()
{
    SearchTemplate t;
    t.plurigenera = {1, 1, 2};
    t.k = 0;
    t.dimension = 3;
    t.fixed_terms = {qorb(PointType::make(9, {1, 2, 6}, 0), 3),
                     qorb(PointType::make(6, {1, 2, 3}, 0), 3)};
    t.free_terms.push_back({"i", curve_s1(CurveLocus::make(2, {1, 1}, Rational(0)), 0, 3)});
    t.free_terms.push_back({"j", curve_s1(CurveLocus::make(3, {1, 2}, Rational(0)), 0, 3)});
    t.free_terms.push_back(
        {"k", RationalFn(LaurentPoly::monomial(3, 1), {{1, 3}, {3, 1}})});
    t.trial_denominators = {{1, 2, 3, 3, 6, 6, 9}, {1, 2, 3, 4, 6, 6, 9}};
    return t;
}

std::vector<GridRange> ranges_0_3()
{
    return {{"i", 0, 3}, {"j", 0, 3}, {"k", 0, 3}};
}

const Candidate* find_candidate(const std::vector<Candidate>& cs, long i, long j, long k,
                                const std::vector<long>& weights)
{
    for (const Candidate& c : cs) {
        if (c.assignment.size() == 3 && c.assignment[0].second == i &&
            c.assignment[1].second == j && c.assignment[2].second == k && c.weights == weights)
            return &c;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("search recovers both candidate Hilbert series of the dimension-3 hunt")
{
    SearchTemplate t = dimension3_template();
    auto cs = search(t, ranges_0_3());

    const Candidate* p1 = find_candidate(cs, 0, 2, 1, {1, 2, 3, 3, 6, 6, 9});
    REQUIRE(p1 != nullptr);
    CHECK(p1->numerator ==
          LaurentPoly::parse("1 - t^9 - 3*t^12 + 3*t^18 + t^21 - t^30"));

    const Candidate* p2 = find_candidate(cs, 1, 0, 1, {1, 2, 3, 4, 6, 6, 9});
    REQUIRE(p2 != nullptr);
    CHECK(p2->numerator ==
          LaurentPoly::parse("1 - t^10 - 2*t^12 - t^13 - t^15 + t^16 + t^18 + 2*t^19 + t^21 - t^31"));
}

TEST_CASE("search: parallel kernel and serial reference agree")
{
    SearchTemplate t = dimension3_template();
    auto par = search(t, ranges_0_3());
    auto ser = search_serial(t, ranges_0_3());
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].assignment == ser[i].assignment);
        CHECK(par[i].weights == ser[i].weights);
        CHECK(par[i].numerator == ser[i].numerator);
    }
}

TEST_CASE("search: every candidate numerator is plausible")
{
    SearchTemplate t = dimension3_template();
    auto cs = search(t, ranges_0_3());
    CHECK(!cs.empty());
    const long c = t.k + t.dimension + 1;
    for (const Candidate& cand : cs) {
        long wsum = 0;
        for (long w : cand.weights) wsum += w;
        CHECK(cand.numerator.is_integral());
        CHECK(cand.numerator.coeff(0) == 1);
        CHECK(cand.numerator.degree() <= wsum + c);
    }
}

TEST_CASE("search: empty grid gives the empty list")
{
    SearchTemplate t = dimension3_template();
    auto cs = search(t, {{"i", 0, 3}, {"j", 1, 0}, {"k", 0, 3}});
    CHECK(cs.empty());
}

TEST_CASE("search: mismatched ranges are rejected")
{
    SearchTemplate t = dimension3_template();
    CHECK_THROWS_AS(search(t, {{"i", 0, 3}, {"k", 0, 3}, {"j", 0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(search(t, {{"i", 0, 3}}), std::invalid_argument);
}
