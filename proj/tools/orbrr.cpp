#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "orbrr/json_io.hpp"
#include "orbrr/oracle.hpp"
#include "orbrr/riemannroch.hpp"
#include "orbrr/worked_examples.hpp"

using namespace orbrr;

namespace {

std::pair<long, long> parse_range(const std::string& text)
{
    auto pos = text.find("..");
    if (pos == std::string::npos)
        throw std::invalid_argument("range must look like 1..10, got '" + text + "'");
    return {std::stol(text.substr(0, pos)), std::stol(text.substr(pos + 2))};
}

std::vector<GridRange> parse_grid_ranges(const std::string& text)
{
    std::vector<GridRange> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("grid ranges look like i=0..3,j=0..3, got '" + item + "'");
        auto [lo, hi] = parse_range(item.substr(eq + 1));
        out.push_back({item.substr(0, eq), lo, hi});
    }
    return out;
}

void print_report(const VerificationReport& rep, bool full)
{
    if (full)
        for (const CheckResult& c : rep.checks) {
            std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.name;
            if (!c.pass && !c.detail.empty()) std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
        }
    std::cout << "report: " << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.checks.size()
              << " checks)\n";
}

void print_parse_human(const ParsedSeries& ps, const VarietyDescriptor& v, bool full_report)
{
    std::cout << v.name() << "  (dimension " << v.dimension() << ", canonical weight "
              << v.canonical_weight() << ", coindex " << v.coindex() << ")\n";
    std::cout << "P(t)    = " << ps.series.to_string() << "\n";
    std::cout << "initial = " << ps.initial.to_string() << "\n";
    for (std::size_t i = 0; i < ps.point_terms.size(); ++i)
        std::cout << "point[" << i << "] = " << ps.point_terms[i].to_string() << "\n";
    for (std::size_t i = 0; i < ps.curve_parts.size(); ++i) {
        const CurvePart& cp = ps.curve_parts[i];
        const CurveLocus& cv = v.curves()[i];
        std::cout << "curve[" << i << "] 1/" << cv.r << "(";
        for (std::size_t j = 0; j < cv.a.size(); ++j)
            std::cout << (j ? "," : "") << cv.a[j];
        std::cout << "): g_C = " << cp.g.to_string() << "\n";
        std::cout << "  first  = " << cp.first.to_string() << "\n";
        std::cout << "  second = " << cp.second.to_string() << "\n";
    }
    print_report(ps.report, full_report);
}

struct GoldenCase {
    std::string name;
    bool pass = false;
    std::string detail;
};

template <typename F>
GoldenCase run_golden(const std::string& name, F&& f)
{
    GoldenCase g{name, false, ""};
    try {
        std::string detail = f();
        g.pass = detail.empty();
        g.detail = detail;
    } catch (const std::exception& e) {
        g.detail = e.what();
    }
    return g;
}

std::string check_parse(const VarietyDescriptor& v,
                        const std::string& initial,
                        const std::vector<std::string>& points,
                        const std::vector<std::tuple<std::string, std::string, std::string>>& curves)
{
    ParsedSeries ps = parse(v);
    if (!ps.report.pass()) return "verification report failed";
    if (!(ps.initial.identical(RationalFn::parse(initial))))
        return "initial = " + ps.initial.to_string();
    if (ps.point_terms.size() != points.size()) return "point term count mismatch";
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!(ps.point_terms[i].identical(RationalFn::parse(points[i]))))
            return "point[" + std::to_string(i) + "] = " + ps.point_terms[i].to_string();
    if (ps.curve_parts.size() != curves.size()) return "curve term count mismatch";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto& [g, first, second] = curves[i];
        if (!(ps.curve_parts[i].g == LaurentPoly::parse(g)))
            return "curve[" + std::to_string(i) + "] g = " + ps.curve_parts[i].g.to_string();
        if (!(ps.curve_parts[i].first.identical(RationalFn::parse(first))))
            return "curve[" + std::to_string(i) + "] first = " + ps.curve_parts[i].first.to_string();
        if (!(ps.curve_parts[i].second.identical(RationalFn::parse(second))))
            return "curve[" + std::to_string(i) +
                   "] second = " + ps.curve_parts[i].second.to_string();
    }
    return "";
}

int run_golden_suite(bool as_json)
{
    std::vector<GoldenCase> results;

    results.push_back(run_golden("sigma(5,[3]) and its delta vector", [] {
        SigmaVector s = sigma_all(DedekindSpec(5, {3}));
        std::vector<std::string> expect{"2/5", "0", "-2/5", "1/5", "-1/5"};
        for (long i = 0; i < 5; ++i)
            if (rat_to_string(s.at(i)) != expect[static_cast<std::size_t>(i)])
                return std::string("sigma = ") + rat_to_string(s.at(i));
        std::vector<std::string> deltas{"-2/5", "-4/5", "-1/5", "-3/5"};
        for (long i = 1; i <= 4; ++i)
            if (rat_to_string(s.at(i) - s.at(0)) != deltas[static_cast<std::size_t>(i - 1)])
                return std::string("delta mismatch at ") + std::to_string(i);
        return std::string();
    }));

    results.push_back(run_golden("X11 chi(O(d)) for d = 1..10", [] {
        auto got = chi_range(examples::x11(), 1, 10);
        std::vector<Integer> expect{1, 2, 3, 4, 6, 8, 10, 13, 16, 20};
        return got == expect ? std::string() : std::string("chi list mismatch");
    }));

    results.push_back(run_golden("X80 Chern data and plurigenera d = 2..10", [] {
        ChernData cd = chern_data(examples::x80());
        if (cd.c != std::vector<Rational>{0, 2046, -143960} ||
            rat_to_string(cd.Hn) != "2/2625")
            return std::string("chern data mismatch");
        auto got = chi_range(examples::x80(), 2, 10);
        std::vector<Integer> expect{0, 1, 0, 1, 1, 1, 1, 1, 2};
        return got == expect ? std::string() : std::string("plurigenera mismatch");
    }));

    results.push_back(run_golden("X12 parse", [] {
        return check_parse(examples::x12(), "(1 - 3*t + 5*t^2 - 3*t^3 + t^4)/((1 - t)^4)", {},
                           {{"3", "(-3*t^3)/((1 - t)^2(1 - t^2)^2)", "0"}});
    }));

    results.push_back(run_golden("X10 parse", [] {
        return check_parse(examples::x10(),
                           "(1 - 2*t + 4*t^2 - 6*t^3 + 4*t^4 - 2*t^5 + t^6)/((1 - t)^5)", {},
                           {{"5", "(5*t^4)/((1 - t)^3(1 - t^2)^2)", "0"}});
    }));

    results.push_back(run_golden("X36 parse", [] {
        return check_parse(
            examples::x36(), "(1 - 4*t + 6*t^2 - 4*t^3 + 6*t^4 - 4*t^5 + t^6)/((1 - t)^5)",
            {"(-t^9 + t^10 - t^11)/((1 - t)^2(1 - t^2)(1 - t^5)(1 - t^10))",
             "(-t^4)/((1 - t)^4(1 - t^3))", "(-t^4)/((1 - t)^4(1 - t^3))"},
            {{"0", "0", "0"},
             {"t^-1 + t", "(t^6 + t^8)/((1 - t)^3(1 - t^5)^2)",
              "(-2*t^4 - 3*t^5 - 2*t^6)/((1 - t)^4(1 - t^5))"}});
    }));

    results.push_back(run_golden("degree-16 parse", [] {
        return check_parse(examples::deg16(), "(1 - 2*t + t^2 - 2*t^3 + t^4)/((1 - t)^5)", {},
                           {{"1", "(-t^4)/((1 - t)^3(1 - t^3)^2)",
                             "(4*t^3)/((1 - t)^4(1 - t^3))"}});
    }));

    results.push_back(run_golden("degree-13 parse", [] {
        return check_parse(examples::deg13(), "(1 - 2*t + t^2 - 2*t^3 + t^4)/((1 - t)^5)",
                           {"(t^3 + t^5)/((1 - t)^4(1 - t^5))"},
                           {{"1", "(-t^4)/((1 - t)^3(1 - t^3)^2)",
                             "(3*t^3)/((1 - t)^4(1 - t^3))"}});
    }));

    results.push_back(run_golden("dimension-3 search candidates", [] {
        auto cs = search(examples::dimension3_search(), examples::dimension3_ranges());
        LaurentPoly p1 = LaurentPoly::parse("1 - t^9 - 3*t^12 + 3*t^18 + t^21 - t^30");
        LaurentPoly p2 = LaurentPoly::parse(
            "1 - t^10 - 2*t^12 - t^13 - t^15 + t^16 + t^18 + 2*t^19 + t^21 - t^31");
        bool f1 = false, f2 = false;
        for (const Candidate& c : cs) {
            if (c.numerator == p1) f1 = true;
            if (c.numerator == p2) f2 = true;
        }
        if (!f1) return std::string("first candidate numerator missing");
        if (!f2) return std::string("second candidate numerator missing");
        return std::string();
    }));

    results.push_back(run_golden("bites of the 1/10(1,4,5,9) point", [] {
        PointType p = PointType::make(10, {1, 4, 5, 9}, 1);
        if (!(bite(p, 2) == LaurentPoly::parse("3/5"))) return std::string("w=2 bite mismatch");
        LaurentPoly expect =
            LaurentPoly::parse("1/2 - t") - LaurentPoly::monomial(-1, 1);
        if (!(bite(p, 3) == expect)) return std::string("w=5 bite mismatch");
        return std::string();
    }));

    bool all = true;
    if (as_json) {
        json out = json::array();
        for (const GoldenCase& g : results) {
            out.push_back(json{{"name", g.name}, {"pass", g.pass}, {"detail", g.detail}});
            all = all && g.pass;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const GoldenCase& g : results) {
            std::cout << (g.pass ? "PASS " : "FAIL ") << g.name;
            if (!g.pass) std::cout << "  [" << g.detail << "]";
            std::cout << "\n";
            all = all && g.pass;
        }
        std::cout << (all ? "all golden examples pass" : "golden examples FAILED") << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"orbrr: exact orbifold Riemann-Roch and Hilbert series parsing"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // sigma r a1 a2 ...
    auto* sigma_cmd = app.add_subcommand("sigma", "Dedekind sum vector sigma_0..sigma_{r-1}");
    long sigma_r = 0;
    std::vector<long> sigma_weights;
    sigma_cmd->add_option("r", sigma_r, "modulus")->required();
    sigma_cmd->add_option("weights", sigma_weights, "weights a_1..a_n")->required();

    // qorb s b1..bn --k K --dim N
    auto* qorb_cmd = app.add_subcommand("qorb", "orbifold point term (ice cream function)");
    long qorb_s = 0, qorb_k = 0, qorb_dim = 0;
    std::vector<long> qorb_b;
    qorb_cmd->add_option("s", qorb_s, "order of the point")->required();
    qorb_cmd->add_option("b", qorb_b, "weights b_1..b_n")->required();
    qorb_cmd->add_option("--k", qorb_k, "canonical weight")->required();
    qorb_cmd->add_option("--dim", qorb_dim, "dimension n")->required();

    // initial --k K --dim N p0 p1 ...
    auto* init_cmd = app.add_subcommand("initial", "initial term from plurigenera");
    long init_k = 0, init_dim = 0;
    std::vector<std::string> init_p;
    init_cmd->add_option("--k", init_k, "canonical weight")->required();
    init_cmd->add_option("--dim", init_dim, "dimension n")->required();
    init_cmd->add_option("plurigenera", init_p, "P_0 .. P_{floor(c/2)}")->required();

    // bite s b1..bn --k K --direction i
    auto* bite_cmd = app.add_subcommand("bite", "dissident-point bite off a curve coefficient");
    long bite_s = 0, bite_k = 0, bite_dir = 0;
    std::vector<long> bite_b;
    bite_cmd->add_option("s", bite_s, "order of the point")->required();
    bite_cmd->add_option("b", bite_b, "weights b_1..b_n")->required();
    bite_cmd->add_option("--k", bite_k, "canonical weight")->required();
    bite_cmd->add_option("--direction", bite_dir, "1-based index i with gcd(s,b_i) != 1")
        ->required();

    // expand --to N descriptor.json
    auto* expand_cmd = app.add_subcommand("expand", "power series coefficients of the Hilbert series");
    long expand_to = 0;
    std::string expand_path;
    expand_cmd->add_option("--to", expand_to, "last degree")->required();
    expand_cmd->add_option("descriptor", expand_path, "descriptor JSON")->required();

    // chi descriptor.json --curve-extras extras.json --d-range 1..10
    auto* chi_cmd = app.add_subcommand("chi", "Euler characteristics chi(O(d))");
    std::string chi_path, chi_extras, chi_drange = "1..10", chi_variant = "stack";
    bool chi_serial = false;
    chi_cmd->add_option("descriptor", chi_path, "descriptor JSON")->required();
    chi_cmd->add_option("--curve-extras", chi_extras, "per-curve K_C / normal bundle JSON");
    chi_cmd->add_option("--d-range", chi_drange, "inclusive degree range, e.g. 1..10");
    chi_cmd->add_option("--variant", chi_variant, "curve formula: stack | moduli")
        ->check(CLI::IsMember({"stack", "moduli"}));
    chi_cmd->add_flag("--serial", chi_serial, "use the serial reference kernel");

    // parse descriptor.json [--verify]
    auto* parse_cmd = app.add_subcommand("parse", "decompose the Hilbert series into orbifold terms");
    std::string parse_path;
    bool parse_verify = false;
    parse_cmd->add_option("descriptor", parse_path, "descriptor JSON")->required();
    parse_cmd->add_flag("--verify", parse_verify, "print every verification check");

    // verify descriptor.json
    auto* verify_cmd = app.add_subcommand("verify", "parse and report every decomposition check");
    std::string verify_path;
    verify_cmd->add_option("descriptor", verify_path, "descriptor JSON")->required();

    // search template.json --ranges i=0..3,j=0..3
    auto* search_cmd = app.add_subcommand("search", "grid search for candidate Hilbert series");
    std::string search_path, search_ranges;
    bool search_serial_flag = false;
    search_cmd->add_option("template", search_path, "search template JSON")->required();
    search_cmd->add_option("--ranges", search_ranges, "integer ranges, e.g. i=0..3,j=0..3")
        ->required();
    search_cmd->add_flag("--serial", search_serial_flag, "use the serial reference kernel");

    auto* golden_cmd = app.add_subcommand("golden", "replay the worked examples and diff them");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(sigma_cmd)) {
            SigmaVector s = sigma_all(DedekindSpec(sigma_r, sigma_weights));
            if (as_json) {
                json arr = json::array();
                for (const Rational& v : s.values()) arr.push_back(rational_to_json(v));
                std::cout << json{{"r", sigma_r}, {"weights", sigma_weights}, {"sigma", arr}}.dump(2)
                          << "\n";
            } else {
                for (const Rational& v : s.values()) std::cout << rat_to_string(v) << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(qorb_cmd)) {
            RationalFn term = qorb(PointType::make(qorb_s, qorb_b, qorb_k), qorb_dim);
            if (as_json)
                std::cout << rational_fn_to_json(term).dump(2) << "\n";
            else
                std::cout << term.to_string() << "\n";
            return 0;
        }
        if (app.got_subcommand(init_cmd)) {
            std::vector<Rational> plur;
            for (const std::string& p : init_p) plur.push_back(rat_from_string(p));
            RationalFn term = initial_term(plur, init_k, init_dim);
            if (as_json)
                std::cout << rational_fn_to_json(term).dump(2) << "\n";
            else
                std::cout << term.to_string() << "\n";
            return 0;
        }
        if (app.got_subcommand(bite_cmd)) {
            LaurentPoly b = bite(PointType::make(bite_s, bite_b, bite_k),
                                 static_cast<std::size_t>(bite_dir));
            if (as_json)
                std::cout << laurent_to_json(b).dump(2) << "\n";
            else
                std::cout << b.to_string() << "\n";
            return 0;
        }
        if (app.got_subcommand(expand_cmd)) {
            VarietyDescriptor v = descriptor_from_json(load_json_file(expand_path));
            auto coeffs = expand(series_of(v), expand_to);
            if (as_json) {
                json arr = json::array();
                for (const Rational& c : coeffs) arr.push_back(rational_to_json(c));
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const Rational& c : coeffs) std::cout << rat_to_string(c) << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(chi_cmd)) {
            VarietyDescriptor v = descriptor_from_json(load_json_file(chi_path));
            if (!chi_extras.empty()) apply_curve_extras(v, load_json_file(chi_extras));
            auto [lo, hi] = parse_range(chi_drange);
            CurveTermVariant variant =
                chi_variant == "stack" ? CurveTermVariant::stack : CurveTermVariant::moduli;
            auto values = chi_serial ? chi_range_serial(v, lo, hi, variant)
                                     : chi_range(v, lo, hi, variant);
            if (as_json) {
                json arr = json::array();
                for (const Integer& x : values) arr.push_back(x.get_str());
                std::cout << arr.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < values.size(); ++i)
                    std::cout << (i ? " " : "") << values[i].get_str();
                std::cout << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(parse_cmd) || app.got_subcommand(verify_cmd)) {
            bool is_verify = app.got_subcommand(verify_cmd);
            VarietyDescriptor v =
                descriptor_from_json(load_json_file(is_verify ? verify_path : parse_path));
            ParsedSeries ps = parse(v);
            if (as_json)
                std::cout << parsed_to_json(ps, v).dump(2) << "\n";
            else if (is_verify)
                print_report(ps.report, true);
            else
                print_parse_human(ps, v, parse_verify);
            return ps.report.pass() ? 0 : 1;
        }
        if (app.got_subcommand(search_cmd)) {
            SearchTemplate t = search_template_from_json(load_json_file(search_path));
            auto ranges = parse_grid_ranges(search_ranges);
            auto cs = search_serial_flag ? search_serial(t, ranges) : search(t, ranges);
            if (as_json) {
                std::cout << candidates_to_json(cs).dump(2) << "\n";
            } else {
                for (const Candidate& c : cs) {
                    for (const auto& [var, val] : c.assignment)
                        std::cout << var << "=" << val << " ";
                    std::cout << "| ";
                    for (long w : c.weights)
                        std::cout << "(1-t" << (w == 1 ? "" : "^" + std::to_string(w)) << ")";
                    std::cout << " | " << c.numerator.to_string() << "\n";
                }
                std::cout << cs.size() << " candidate(s)\n";
            }
            return 0;
        }
        if (app.got_subcommand(golden_cmd)) return run_golden_suite(as_json);
    } catch (const math_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
