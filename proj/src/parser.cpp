#include "orbrr/parser.hpp"

#include <algorithm>

#include "orbrr/linalg.hpp"
#include "orbrr/polyops.hpp"

namespace orbrr {

namespace {

LaurentPoly curve_coefficient_raw(const CurveLocus& c, const std::vector<PointType>& dissidents)
{
    LaurentPoly g = LaurentPoly::monomial(0, Rational(c.r) * c.deg_h);
    for (const PointType& q : dissidents) {
        auto dirs = q.directions_with_order(c.r);
        if (dirs.size() != 1)
            throw std::invalid_argument(
                "dissident point has no unique direction of order " + std::to_string(c.r));
        g = g - bite(q, dirs[0] + 1);
    }
    return g;
}

bool coprime_orders(const std::vector<CurveLocus>& curves)
{
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j)
            if (gcd_long(curves[i].r, curves[j].r) != 1) return false;
    return true;
}

}  // namespace

RationalFn ParsedSeries::reassembled() const
{
    RationalFn acc = initial;
    for (const RationalFn& p : point_terms) acc = acc + p;
    for (const CurvePart& c : curve_parts) acc = acc + c.first + c.second;
    return acc;
}

std::vector<LaurentPoly> split_residual(const RationalFn& R, const std::vector<CurveLocus>& curves,
                                        long k, long n)
{
    const long c = k + n + 1;
    const long start = floor_div2(c) + 1;
    if (curves.empty()) {
        if (!R.is_zero()) throw math_error("split_residual: nonzero residual with no curves");
        return {};
    }
    // S(t) = R * (1-t)^(n+1) * prod_C (1-t^{r_C})/(1-t)
    RationalFn T = R;
    for (const CurveLocus& cv : curves) T = T.times_factor(cv.r, 1);
    long ones = n + 1 - static_cast<long>(curves.size());
    if (ones >= 0)
        T = T.times_factor(1, static_cast<int>(ones));
    else
        T = T.over_factor(1, static_cast<int>(-ones));
    auto S_opt = T.to_polynomial();
    if (!S_opt)
        throw math_error("split_residual: residual is not of the form S(t)/((1-t)^(n+1) prod (1-t^r)/(1-t))");
    const LaurentPoly S = *S_opt;

    std::vector<LaurentPoly> parts(curves.size());
    if (S.is_zero()) return parts;

    if (coprime_orders(curves)) {
        for (std::size_t i = 0; i < curves.size(); ++i) {
            const long r = curves[i].r;
            LaurentPoly others = LaurentPoly::one();
            for (std::size_t j = 0; j < curves.size(); ++j)
                if (j != i) others = others * cyclo_quotient(curves[j].r);
            LaurentPoly inv = inverse_mod(poly_mod(others, cyclo_quotient(r)), cyclo_quotient(r));
            LaurentPoly s = S;
            if (s.lowest_degree() < 0)
                throw math_error("split_residual: residual has negative-degree terms");
            parts[i] = reduce_support(s * inv, cyclo_quotient(r), start);
        }
    } else {
        // non-coprime orders: solve for the windowed coefficients directly
        std::vector<std::pair<std::size_t, long>> unknowns;  // (curve, degree)
        long span = 0;
        for (std::size_t i = 0; i < curves.size(); ++i) {
            for (long d = start; d <= start + curves[i].r - 2; ++d) unknowns.emplace_back(i, d);
            span += curves[i].r - 1;
        }
        long lo = std::min(S.lowest_degree(), start);
        long hi = std::max(S.degree(), start + span - 1);
        std::vector<std::vector<Rational>> M;
        std::vector<Rational> rhs;
        std::vector<LaurentPoly> others(curves.size(), LaurentPoly::one());
        for (std::size_t i = 0; i < curves.size(); ++i)
            for (std::size_t j = 0; j < curves.size(); ++j)
                if (j != i) others[i] = others[i] * cyclo_quotient(curves[j].r);
        for (long d = lo; d <= hi; ++d) {
            std::vector<Rational> row;
            row.reserve(unknowns.size());
            for (const auto& [ci, ud] : unknowns) row.push_back(others[ci].coeff(d - ud));
            M.push_back(std::move(row));
            rhs.push_back(S.coeff(d));
        }
        std::vector<Rational> x;
        try {
            x = solve_exact(std::move(M), std::move(rhs));
        } catch (const math_error& e) {
            throw math_error(std::string("split_residual: windowed system failed (") + e.what() +
                             ")");
        }
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            parts[unknowns[u].first].set_coeff(unknowns[u].second, x[u]);
    }

    // reconstruction is the actual consistency test for the basket
    LaurentPoly recon;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        LaurentPoly others = LaurentPoly::one();
        for (std::size_t j = 0; j < curves.size(); ++j)
            if (j != i) others = others * cyclo_quotient(curves[j].r);
        recon = recon + parts[i] * others;
    }
    if (!(recon == S))
        throw math_error("split_residual: residual does not lie in the span of the curve windows");
    return parts;
}

ParsedSeries parse(const VarietyDescriptor& v)
{
    const long n = v.dimension();
    const long k = v.canonical_weight();
    const long c = v.coindex();
    if (n < 1) throw std::invalid_argument("parse: dimension must be >= 1");
    if (c < 0) throw std::invalid_argument("parse: negative coindex has no initial term");

    ParsedSeries ps;
    ps.series = v.series();
    auto plur = expand(ps.series, floor_div2(c));
    ps.initial = initial_term(plur, k, n);

    for (const PointEntry& pe : v.points()) {
        RationalFn term = qorb(pe.type, n);
        for (int i = 0; i < pe.count; ++i) ps.point_terms.push_back(term);
    }

    for (std::size_t ci = 0; ci < v.curves().size(); ++ci) {
        const CurveLocus& cv = v.curves()[ci];
        CurvePart part;
        part.s1_term = curve_s1(cv, k, n);
        std::vector<PointType> diss;
        for (std::size_t idx : cv.dissidents) {
            if (idx >= v.points().size())
                throw std::invalid_argument("parse: dissident index out of range");
            if (v.points()[idx].count != 1)
                throw std::invalid_argument("parse: dissident point entries must have count 1");
            diss.push_back(v.points()[idx].type);
        }
        part.g = curve_coefficient_raw(cv, diss);
        std::string label = "curve[" + std::to_string(ci) + "] 1/" + std::to_string(cv.r);
        bool g_ok = part.g.is_integral() && is_symmetric(part.g, 0, +1);
        ps.construction_checks.push_back(
            {label + " coefficient g_C integral and palindromic", g_ok,
             g_ok ? "" : "g_C = " + part.g.to_string() +
                             " (wrong degH or missing dissident point?)"});
        part.first = part.s1_term * part.g;
        part.second = RationalFn::zero();
        ps.curve_parts.push_back(std::move(part));
    }

    RationalFn residual = ps.series - ps.initial;
    for (const RationalFn& p : ps.point_terms) residual = residual - p;
    for (const CurvePart& cp : ps.curve_parts) residual = residual - cp.first;

    try {
        std::vector<LaurentPoly> seconds = split_residual(residual, v.curves(), k, n);
        for (std::size_t ci = 0; ci < seconds.size(); ++ci)
            ps.curve_parts[ci].second =
                RationalFn(seconds[ci], {{1, static_cast<int>(n)}, {v.curves()[ci].r, 1}});
        ps.construction_checks.push_back({"residual splits into second curve parts", true, ""});
    } catch (const math_error& e) {
        if (v.curves().empty()) {
            ps.construction_checks.push_back(
                {"residual vanishes (no curves)", false, e.what()});
        } else {
            ps.construction_checks.push_back(
                {"residual splits into second curve parts", false, e.what()});
        }
    }

    ps.report = verify(ps, v);
    return ps;
}

VerificationReport verify(const ParsedSeries& ps, const VarietyDescriptor& v)
{
    VerificationReport rep;
    const long n = v.dimension();
    const long k = v.canonical_weight();
    const long c = v.coindex();
    rep.checks = ps.construction_checks;

    // descriptor invariant: a dissident point sits on exactly one curve
    // per direction with w_i != 1, and the induced type matches
    for (std::size_t pi = 0; pi < v.points().size(); ++pi) {
        const PointType& p = v.points()[pi].type;
        if (!p.is_dissident()) continue;
        bool ok = true;
        std::string why;
        for (const auto& [w, residues] : dissident_curve_types(p)) {
            int attached = 0;
            for (const CurveLocus& cv : v.curves()) {
                if (cv.r != w) continue;
                for (std::size_t di : cv.dissidents)
                    if (di == pi) {
                        ++attached;
                        std::vector<long> a = cv.a, res = residues;
                        std::sort(a.begin(), a.end());
                        std::sort(res.begin(), res.end());
                        if (a != res) {
                            ok = false;
                            why = "induced type does not match the 1/" + std::to_string(w) +
                                  " curve";
                        }
                    }
            }
            if (attached != 1) {
                ok = false;
                why = "attached to " + std::to_string(attached) + " curves of order " +
                      std::to_string(w);
            }
        }
        rep.add("point[" + std::to_string(pi) + "] 1/" + std::to_string(p.s) +
                    " dissident attachment complete",
                ok, why);
    }

    RationalFn diff = ps.reassembled() - ps.series;
    rep.add("sum of parts equals P(t) exactly", diff.is_zero(),
            diff.is_zero() ? "" : "difference " + diff.to_string());

    bool coeffs_ok = true;
    {
        auto a = expand(ps.reassembled(), 120);
        auto b = expand(ps.series, 120);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) {
                coeffs_ok = false;
                break;
            }
    }
    rep.add("sum of parts matches P(t) coefficientwise to degree 120", coeffs_ok);

    rep.add("initial numerator integral and palindromic of degree <= c",
            ps.initial.num().is_integral() && is_palindromic(ps.initial.num()).first &&
                (ps.initial.num().is_zero() || ps.initial.num().degree() <= c));
    rep.add("initial term Gorenstein symmetric", gorenstein_check(ps.initial, k, n));
    {
        auto prefix = expand(ps.initial, floor_div2(c));
        auto pp = expand(ps.series, floor_div2(c));
        rep.add("initial term matches P(t) through degree floor(c/2)", prefix == pp);
    }

    std::size_t qi = 0;
    for (const PointEntry& pe : v.points()) {
        for (int rep_i = 0; rep_i < pe.count; ++rep_i, ++qi) {
            if (qi >= ps.point_terms.size()) break;
            const RationalFn& term = ps.point_terms[qi];
            std::string label = "point 1/" + std::to_string(pe.type.s);
            bool window = true;
            if (!term.num().is_zero()) {
                long lo = floor_div2(c) + 1 + pe.type.deg_h;
                long hi = floor_div2(c) + pe.type.s - 1;
                window = term.num().lowest_degree() >= lo && term.num().degree() <= hi;
            }
            bool ok = term.num().is_integral() && window;
            rep.add(label + " numerator integral, windowed", ok,
                    ok ? "" : term.num().to_string());
            rep.add(label + " Gorenstein symmetric", gorenstein_check(term, k, n));
        }
    }

    for (std::size_t ci = 0; ci < ps.curve_parts.size(); ++ci) {
        const CurvePart& cp = ps.curve_parts[ci];
        const CurveLocus& cv = v.curves()[ci];
        std::string label = "curve[" + std::to_string(ci) + "] 1/" + std::to_string(cv.r);
        bool s1_window = true;
        if (!cp.s1_term.num().is_zero()) {
            long lo = floor_div2(c + cv.r - 1) + 1;
            s1_window = cp.s1_term.num().lowest_degree() >= lo &&
                        cp.s1_term.num().degree() <= lo + cv.r - 2;
        }
        rep.add(label + " S1 numerator integral, windowed",
                cp.s1_term.num().is_integral() && s1_window);
        rep.add(label + " first part Gorenstein symmetric", gorenstein_check(cp.first, k, n));
        bool second_window = true;
        if (!cp.second.num().is_zero()) {
            second_window = cp.second.num().lowest_degree() >= floor_div2(c) + 1 &&
                            cp.second.num().degree() <= floor_div2(c) + cv.r - 1;
        }
        bool second_ok = cp.second.num().is_integral() && second_window;
        rep.add(label + " second part integral, windowed", second_ok,
                second_ok ? "" : cp.second.num().to_string());
        rep.add(label + " second part Gorenstein symmetric", gorenstein_check(cp.second, k, n));
        if (cv.r == 2 && c % 2 == 0)
            rep.add(label + " of type 1/2: second part forced to vanish", cp.second.is_zero(),
                    cp.second.is_zero() ? "" : cp.second.num().to_string());
    }
    return rep;
}

}  // namespace orbrr
