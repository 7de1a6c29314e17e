#ifndef ORBRR_PARSER_HPP
#define ORBRR_PARSER_HPP

#include <string>
#include <vector>

#include "orbrr/hilbert.hpp"
#include "orbrr/orbterms.hpp"

namespace orbrr {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // the offending polynomial / mismatch, when failing
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool pass() const
    {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool ok, std::string detail = "")
    {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

struct CurvePart {
    LaurentPoly g;       // coefficient r deg H - sum of bites, palindromic about 0
    RationalFn s1_term;  // S1/((1-t)^(n-1)(1-t^r)^2)
    RationalFn first;    // g * s1_term
    RationalFn second;   // S_{C,2}/((1-t)^n(1-t^r)), found as a residual
};

// The decomposition P = P_I + sum of point terms + sum of curve terms,
// with every guarantee of the decomposition re-checked into `report`.
struct ParsedSeries {
    RationalFn series;
    RationalFn initial;
    std::vector<RationalFn> point_terms;  // point entries unrolled by count
    std::vector<CurvePart> curve_parts;
    std::vector<CheckResult> construction_checks;
    VerificationReport report;

    RationalFn reassembled() const;
};

// Decomposes the Hilbert series of v. Structural misuse (bad indices,
// coindex < 0) throws; mathematical inconsistency of the basket lands in
// the report as failing checks.
ParsedSeries parse(const VarietyDescriptor& v);

// Splits the residual sum of second curve parts: R must equal
// sum_C S_{C,2}/((1-t)^n(1-t^{r_C})) with each numerator supported in
// [floor(c/2)+1, floor(c/2)+r_C-1]. Pairwise-coprime curve orders go
// through modular inverses; otherwise an exact linear solve. Throws
// math_error when R is not expressible.
std::vector<LaurentPoly> split_residual(const RationalFn& R, const std::vector<CurveLocus>& curves,
                                        long k, long n);

// Re-runs every decomposition guarantee on a parsed series.
VerificationReport verify(const ParsedSeries& ps, const VarietyDescriptor& v);

}  // namespace orbrr

#endif
