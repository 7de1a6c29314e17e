#include "orbrr/search.hpp"

#include <exception>

#include "orbrr/hilbert.hpp"
#include "orbrr/orbterms.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orbrr {

namespace {

struct Grid {
    std::vector<GridRange> ranges;
    long total = 1;

    explicit Grid(std::vector<GridRange> rs) : ranges(std::move(rs))
    {
        for (const GridRange& r : ranges) {
            long span = r.hi - r.lo + 1;
            if (span <= 0) {
                total = 0;
                return;
            }
            total *= span;
        }
    }

    std::vector<long> values(long index) const
    {
        std::vector<long> vals(ranges.size());
        for (std::size_t i = ranges.size(); i-- > 0;) {
            long span = ranges[i].hi - ranges[i].lo + 1;
            vals[i] = ranges[i].lo + index % span;
            index /= span;
        }
        return vals;
    }
};

std::vector<Candidate> candidates_at(const SearchTemplate& tmpl, const RationalFn& base,
                                     const Grid& grid, long index)
{
    std::vector<long> vals = grid.values(index);
    RationalFn p = base;
    for (std::size_t i = 0; i < tmpl.free_terms.size(); ++i)
        if (vals[i] != 0) p = p + tmpl.free_terms[i].term * Rational(vals[i]);

    std::vector<Candidate> out;
    const long c = tmpl.k + tmpl.dimension + 1;
    for (const std::vector<long>& weights : tmpl.trial_denominators) {
        RationalFn prod = p;
        long wsum = 0;
        for (long w : weights) {
            prod = prod.times_factor(w, 1);
            wsum += w;
        }
        auto num = prod.to_polynomial();
        if (!num) continue;
        if (!num->is_integral()) continue;
        if (!num->is_zero() && (num->lowest_degree() < 0 || num->degree() > wsum + c)) continue;
        auto prefix = expand(p, wsum + c);
        bool nonneg = true;
        for (const Rational& q : prefix)
            if (q < 0) {
                nonneg = false;
                break;
            }
        if (!nonneg) continue;
        Candidate cand;
        for (std::size_t i = 0; i < tmpl.free_terms.size(); ++i)
            cand.assignment.emplace_back(tmpl.free_terms[i].var, vals[i]);
        cand.weights = weights;
        cand.numerator = *num;
        out.push_back(std::move(cand));
    }
    return out;
}

RationalFn assemble_base(const SearchTemplate& tmpl)
{
    RationalFn base = initial_term(tmpl.plurigenera, tmpl.k, tmpl.dimension);
    for (const RationalFn& f : tmpl.fixed_terms) base = base + f;
    return base;
}

void check_ranges(const SearchTemplate& tmpl, const std::vector<GridRange>& ranges)
{
    if (ranges.size() != tmpl.free_terms.size())
        throw std::invalid_argument("search: need one range per free term");
    for (std::size_t i = 0; i < ranges.size(); ++i)
        if (ranges[i].var != tmpl.free_terms[i].var)
            throw std::invalid_argument("search: range order must match the free terms (got '" +
                                        ranges[i].var + "', expected '" +
                                        tmpl.free_terms[i].var + "')");
}

}  // namespace

std::vector<Candidate> search_serial(const SearchTemplate& tmpl,
                                     const std::vector<GridRange>& ranges)
{
    check_ranges(tmpl, ranges);
    Grid grid(ranges);
    if (grid.total == 0) return {};
    RationalFn base = assemble_base(tmpl);
    std::vector<Candidate> out;
    for (long idx = 0; idx < grid.total; ++idx) {
        auto cs = candidates_at(tmpl, base, grid, idx);
        out.insert(out.end(), cs.begin(), cs.end());
    }
    return out;
}

std::vector<Candidate> search(const SearchTemplate& tmpl, const std::vector<GridRange>& ranges)
{
    check_ranges(tmpl, ranges);
    Grid grid(ranges);
    if (grid.total == 0) return {};
    RationalFn base = assemble_base(tmpl);
    std::vector<std::vector<Candidate>> slots(static_cast<std::size_t>(grid.total));
    std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long idx = 0; idx < grid.total; ++idx) {
        try {
            slots[static_cast<std::size_t>(idx)] = candidates_at(tmpl, base, grid, idx);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    std::vector<Candidate> out;
    for (auto& slot : slots) out.insert(out.end(), slot.begin(), slot.end());
    return out;
}

}  // namespace orbrr
