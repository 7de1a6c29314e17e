#include "orbrr/json_io.hpp"

#include <fstream>

#include "orbrr/orbterms.hpp"

namespace orbrr {

json rational_to_json(const Rational& q)
{
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const json& j)
{
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_object())
        return rat_from_string(j.at("num").get<std::string>() + "/" +
                               j.at("den").get<std::string>());
    throw std::invalid_argument("rational: expected string, integer or {num,den}");
}

json laurent_to_json(const LaurentPoly& f)
{
    json terms = json::array();
    for (const auto& [d, c] : f.terms()) {
        json t = rational_to_json(c);
        t["deg"] = d;
        terms.push_back(std::move(t));
    }
    return json{{"terms", std::move(terms)}, {"text", f.to_string()}};
}

LaurentPoly laurent_from_json(const json& j)
{
    if (j.is_string()) return LaurentPoly::parse(j.get<std::string>());
    LaurentPoly f;
    for (const json& t : j.at("terms"))
        f.set_coeff(t.at("deg").get<long>(), f.coeff(t.at("deg").get<long>()) + rational_from_json(t));
    return f;
}

json rational_fn_to_json(const RationalFn& f)
{
    json den = json::array();
    for (const auto& [a, m] : f.den()) den.push_back(json{{"a", a}, {"m", m}});
    return json{{"numerator", laurent_to_json(f.num())},
                {"denominator", std::move(den)},
                {"text", f.to_string()}};
}

RationalFn rational_fn_from_json(const json& j)
{
    if (j.is_string()) return RationalFn::parse(j.get<std::string>());
    LaurentPoly num = laurent_from_json(j.at("numerator"));
    RationalFn::Factors den;
    if (j.contains("denominator_weights")) {
        for (const json& w : j.at("denominator_weights")) den[w.get<long>()] += 1;
    } else if (j.contains("denominator")) {
        for (const json& f : j.at("denominator")) den[f.at("a").get<long>()] += f.at("m").get<int>();
    }
    return RationalFn(std::move(num), std::move(den));
}

namespace {

void curve_extras_from_json(CurveLocus& c, const json& j)
{
    if (j.contains("deg_kc")) c.deg_kc = rational_from_json(j.at("deg_kc"));
    if (j.contains("gammas")) {
        c.gammas.clear();
        for (const json& g : j.at("gammas"))
            c.gammas.push_back({g.at("a").get<long>(), rational_from_json(g.at("deg"))});
    }
    if (j.contains("normal_bundle")) {
        const json& nb = j.at("normal_bundle");
        // degrees as multiples of O_C(1): deg K_C = kc*degH, gamma_j = m_j*degH
        c.deg_kc = Rational(nb.at("kc").get<long>()) * c.deg_h;
        c.gammas.clear();
        for (const json& m : nb.at("gammas")) {
            long mult = m.get<long>();
            c.gammas.push_back({mod_nonneg(mult, c.r), Rational(mult) * c.deg_h});
        }
    }
}

}  // namespace

VarietyDescriptor descriptor_from_json(const json& j)
{
    std::string name = j.value("name", "unnamed");
    VarietyDescriptor v = [&] {
        if (j.contains("ambient_weights")) {
            std::vector<long> weights = j.at("ambient_weights").get<std::vector<long>>();
            std::vector<long> degrees;
            if (j.contains("equation_degrees"))
                degrees = j.at("equation_degrees").get<std::vector<long>>();
            return VarietyDescriptor::complete_intersection(name, weights, degrees);
        }
        if (!j.contains("series"))
            throw std::invalid_argument("descriptor: need ambient_weights or series");
        RationalFn s = rational_fn_from_json(j.at("series"));
        return VarietyDescriptor::from_series(name, s, j.at("dimension").get<long>(),
                                              j.at("canonical_weight").get<long>());
    }();
    if (j.contains("basket_points"))
        for (const json& p : j.at("basket_points"))
            v.add_point(p.at("s").get<long>(), p.at("b").get<std::vector<long>>(),
                        p.value("count", 1));
    if (j.contains("basket_curves"))
        for (const json& cj : j.at("basket_curves")) {
            CurveLocus c = CurveLocus::make(cj.at("r").get<long>(),
                                            cj.at("a").get<std::vector<long>>(),
                                            rational_from_json(cj.at("deg_h")));
            if (cj.contains("dissidents"))
                c.dissidents = cj.at("dissidents").get<std::vector<std::size_t>>();
            curve_extras_from_json(c, cj);
            v.add_curve(std::move(c));
        }
    return v;
}

json descriptor_to_json(const VarietyDescriptor& v)
{
    json j;
    j["name"] = v.name();
    if (v.is_complete_intersection()) {
        j["ambient_weights"] = v.ambient_weights();
        j["equation_degrees"] = v.equation_degrees();
    } else {
        j["series"] = rational_fn_to_json(v.series());
    }
    j["dimension"] = v.dimension();
    j["canonical_weight"] = v.canonical_weight();
    json points = json::array();
    for (const PointEntry& p : v.points())
        points.push_back(json{{"s", p.type.s}, {"b", p.type.b}, {"count", p.count}});
    j["basket_points"] = std::move(points);
    json curves = json::array();
    for (const CurveLocus& c : v.curves()) {
        json cj{{"r", c.r}, {"a", c.a}, {"deg_h", rational_to_json(c.deg_h)},
                {"dissidents", c.dissidents}};
        if (c.deg_kc) cj["deg_kc"] = rational_to_json(*c.deg_kc);
        if (!c.gammas.empty()) {
            json gs = json::array();
            for (const GammaDatum& g : c.gammas)
                gs.push_back(json{{"a", g.a}, {"deg", rational_to_json(g.deg)}});
            cj["gammas"] = std::move(gs);
        }
        curves.push_back(std::move(cj));
    }
    j["basket_curves"] = std::move(curves);
    return j;
}

void apply_curve_extras(VarietyDescriptor& v, const json& extras)
{
    const json& list = extras.contains("curves") ? extras.at("curves") : extras;
    if (!list.is_array()) throw std::invalid_argument("curve extras: expected an array");
    if (list.size() != v.curves().size())
        throw std::invalid_argument("curve extras: need one entry per basket curve");
    for (std::size_t i = 0; i < v.curves().size(); ++i)
        curve_extras_from_json(v.curves()[i], list[i]);
}

SearchTemplate search_template_from_json(const json& j)
{
    SearchTemplate t;
    const json& init = j.at("initial");
    for (const json& p : init.at("plurigenera")) t.plurigenera.push_back(rational_from_json(p));
    t.k = init.at("k").get<long>();
    t.dimension = init.at("dimension").get<long>();

    auto term_from_json = [&](const json& tj) -> RationalFn {
        if (tj.contains("qorb")) {
            const json& q = tj.at("qorb");
            long s = q.at("s").get<long>();
            auto b = q.at("b").get<std::vector<long>>();
            long k = q.value("k", t.k);
            return qorb(PointType::make(s, b, k), t.dimension);
        }
        if (tj.contains("curve_s1")) {
            const json& q = tj.at("curve_s1");
            CurveLocus c = CurveLocus::make(q.at("r").get<long>(),
                                            q.at("a").get<std::vector<long>>(), Rational(0));
            return curve_s1(c, t.k, t.dimension);
        }
        if (tj.contains("monomial")) {
            const json& q = tj.at("monomial");
            RationalFn::Factors den;
            for (const json& w : q.at("weights")) den[w.get<long>()] += 1;
            return RationalFn(LaurentPoly::monomial(q.at("degree").get<long>(), 1), den);
        }
        if (tj.contains("rational")) return rational_fn_from_json(tj.at("rational"));
        throw std::invalid_argument("search template: unknown term kind " + tj.dump());
    };

    if (j.contains("fixed_terms"))
        for (const json& tj : j.at("fixed_terms")) t.fixed_terms.push_back(term_from_json(tj));
    for (const json& tj : j.at("free_terms"))
        t.free_terms.push_back({tj.at("var").get<std::string>(), term_from_json(tj)});
    for (const json& d : j.at("trial_denominators"))
        t.trial_denominators.push_back(d.get<std::vector<long>>());
    return t;
}

json report_to_json(const VerificationReport& rep)
{
    json checks = json::array();
    for (const CheckResult& c : rep.checks) {
        json cj{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    return json{{"pass", rep.pass()}, {"checks", std::move(checks)}};
}

json parsed_to_json(const ParsedSeries& ps, const VarietyDescriptor& v)
{
    json j;
    j["name"] = v.name();
    j["dimension"] = v.dimension();
    j["canonical_weight"] = v.canonical_weight();
    j["coindex"] = v.coindex();
    j["series"] = rational_fn_to_json(ps.series);
    j["initial"] = rational_fn_to_json(ps.initial);
    json points = json::array();
    for (const RationalFn& p : ps.point_terms) points.push_back(rational_fn_to_json(p));
    j["point_terms"] = std::move(points);
    json curves = json::array();
    for (const CurvePart& c : ps.curve_parts)
        curves.push_back(json{{"g", laurent_to_json(c.g)},
                              {"s1_term", rational_fn_to_json(c.s1_term)},
                              {"first_part", rational_fn_to_json(c.first)},
                              {"second_part", rational_fn_to_json(c.second)}});
    j["curve_terms"] = std::move(curves);
    j["report"] = report_to_json(ps.report);
    return j;
}

json candidates_to_json(const std::vector<Candidate>& cs)
{
    json out = json::array();
    for (const Candidate& c : cs) {
        json a = json::object();
        for (const auto& [var, val] : c.assignment) a[var] = val;
        std::string dens;
        for (long w : c.weights)
            dens += "(1 - t" + (w == 1 ? std::string() : "^" + std::to_string(w)) + ")";
        out.push_back(json{{"assignment", std::move(a)},
                           {"weights", c.weights},
                           {"denominator", dens},
                           {"numerator", laurent_to_json(c.numerator)}});
    }
    return out;
}

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace orbrr
