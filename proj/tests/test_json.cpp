#include "doctest.h"
#include "orbrr/json_io.hpp"
#include "orbrr/parser.hpp"
#include "orbrr/riemannroch.hpp"
#include "orbrr/worked_examples.hpp"
#include "test_util.hpp"

using namespace orbrr;
using namespace orbrr::testutil;

TEST_CASE("rational and polynomial JSON round-trips")
{
    Rational q = frac(-22, 7);
    CHECK(rational_from_json(rational_to_json(q)) == q);
    CHECK(rational_from_json(json("3/5")) == frac(3, 5));
    CHECK(rational_from_json(json(4)) == 4);

    LaurentPoly f = LaurentPoly::parse("1/2 - t + 3*t^7") - LaurentPoly::monomial(-2, 5);
    CHECK(laurent_from_json(laurent_to_json(f)) == f);

    RationalFn r(LaurentPoly::parse("-t^9 + t^10 - t^11"), {{1, 2}, {2, 1}, {5, 1}, {10, 1}});
    CHECK(rational_fn_from_json(rational_fn_to_json(r)).identical(r));
    CHECK(rational_fn_from_json(json(r.to_string())).identical(r));
}

TEST_CASE("descriptor JSON matches the programmatic builders")
{
    json j = load_json_file(std::string(ORBRR_DATA_DIR) + "/x36.json");
    VarietyDescriptor v = descriptor_from_json(j);
    VarietyDescriptor w = examples::x36();
    CHECK(v.name() == w.name());
    CHECK(v.dimension() == w.dimension());
    CHECK(v.canonical_weight() == w.canonical_weight());
    REQUIRE(v.points().size() == w.points().size());
    REQUIRE(v.curves().size() == w.curves().size());
    for (std::size_t i = 0; i < v.curves().size(); ++i) {
        CHECK(v.curves()[i].r == w.curves()[i].r);
        CHECK(v.curves()[i].a == w.curves()[i].a);
        CHECK(v.curves()[i].deg_h == w.curves()[i].deg_h);
        CHECK(v.curves()[i].dissidents == w.curves()[i].dissidents);
    }
    // the shipped descriptor parses cleanly
    CHECK(parse(v).report.pass());

    // descriptor -> json -> descriptor is stable
    VarietyDescriptor v2 = descriptor_from_json(descriptor_to_json(v));
    CHECK(parse(v2).report.pass());
}

TEST_CASE("curve extras: normal-bundle multiples derive the r-multiplied degrees")
{
    json j = load_json_file(std::string(ORBRR_DATA_DIR) + "/x80.json");
    VarietyDescriptor v = descriptor_from_json(j);
    // x80.json already carries explicit deg_kc/gammas; the extras file
    // re-derives the same numbers from O_C(m) multiples
    VarietyDescriptor w = descriptor_from_json(j);
    w.curves()[0].deg_kc.reset();
    w.curves()[0].gammas.clear();
    apply_curve_extras(w, load_json_file(std::string(ORBRR_DATA_DIR) + "/x80_extras.json"));
    REQUIRE(w.curves()[0].deg_kc.has_value());
    CHECK(*w.curves()[0].deg_kc == *v.curves()[0].deg_kc);
    REQUIRE(w.curves()[0].gammas.size() == 2);
    CHECK(w.curves()[0].gammas[0].a == 3);
    CHECK(w.curves()[0].gammas[0].deg == v.curves()[0].gammas[0].deg);
    CHECK(w.curves()[0].gammas[1].a == 2);
    CHECK(w.curves()[0].gammas[1].deg == v.curves()[0].gammas[1].deg);
    CHECK(chi_range(w, 2, 10) == chi_range(v, 2, 10));
}

TEST_CASE("search template from JSON reproduces the programmatic template")
{
    json j = load_json_file(std::string(ORBRR_DATA_DIR) + "/search_dim3.json");
    SearchTemplate t = search_template_from_json(j);
    SearchTemplate ref = examples::dimension3_search();
    CHECK(t.plurigenera == ref.plurigenera);
    CHECK(t.k == ref.k);
    CHECK(t.dimension == ref.dimension);
    REQUIRE(t.fixed_terms.size() == ref.fixed_terms.size());
    for (std::size_t i = 0; i < t.fixed_terms.size(); ++i)
        CHECK(t.fixed_terms[i].identical(ref.fixed_terms[i]));
    REQUIRE(t.free_terms.size() == ref.free_terms.size());
    for (std::size_t i = 0; i < t.free_terms.size(); ++i) {
        CHECK(t.free_terms[i].var == ref.free_terms[i].var);
        CHECK(t.free_terms[i].term.identical(ref.free_terms[i].term));
    }
    CHECK(t.trial_denominators == ref.trial_denominators);
}

TEST_CASE("every shipped descriptor loads and passes its checks")
{
    for (const char* name : {"x11.json", "x80.json", "x12.json", "x10.json", "x36.json",
                             "x16.json", "x13.json"}) {
        VarietyDescriptor v =
            descriptor_from_json(load_json_file(std::string(ORBRR_DATA_DIR) + "/" + name));
        if (!v.curves().empty() || !v.points().empty()) {
            ParsedSeries ps = parse(v);
            CHECK(ps.report.pass());
        }
    }
}

TEST_CASE("parsed series serializes with a full report")
{
    VarietyDescriptor v = examples::x12();
    ParsedSeries ps = parse(v);
    json j = parsed_to_json(ps, v);
    CHECK(j.at("report").at("pass").get<bool>());
    CHECK(j.at("coindex").get<long>() == 4);
    CHECK(rational_fn_from_json(j.at("initial")).identical(ps.initial));
}
