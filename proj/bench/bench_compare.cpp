// Compares the OpenMP kernels (grid search, chi over a degree range)
// against their serial reference implementations: wall time plus a full
// equality check of the outputs.

#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>

#include "orbrr/riemannroch.hpp"
#include "orbrr/search.hpp"
#include "orbrr/worked_examples.hpp"

using namespace orbrr;

namespace {

double now_seconds()
{
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

template <typename F>
double timed(F&& f)
{
    double t0 = now_seconds();
    f();
    return now_seconds() - t0;
}

}  // namespace

int main()
{
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    std::printf("%-34s %12s %12s %9s %s\n", "kernel", "serial (s)", "parallel (s)", "speedup",
                "outputs");

    {
        SearchTemplate t = examples::dimension3_search();
        std::vector<GridRange> ranges{{"i", 0, 7}, {"j", 0, 7}, {"k", 0, 7}};
        std::vector<Candidate> serial_out, parallel_out;
        double ts = timed([&] { serial_out = search_serial(t, ranges); });
        double tp = timed([&] { parallel_out = search(t, ranges); });
        bool same = serial_out.size() == parallel_out.size();
        for (std::size_t i = 0; same && i < serial_out.size(); ++i)
            same = serial_out[i].assignment == parallel_out[i].assignment &&
                   serial_out[i].weights == parallel_out[i].weights &&
                   serial_out[i].numerator == parallel_out[i].numerator;
        std::printf("%-34s %12.4f %12.4f %8.2fx %s\n", "search 8x8x8 grid, 2 denominators", ts,
                    tp, ts / tp, same ? "equal" : "MISMATCH");
        if (!same) return 1;
    }

    {
        auto v = examples::x80();
        std::vector<Integer> serial_out, parallel_out;
        double ts = timed([&] { serial_out = chi_range_serial(v, 1, 5000); });
        double tp = timed([&] { parallel_out = chi_range(v, 1, 5000); });
        bool same = serial_out == parallel_out;
        std::printf("%-34s %12.4f %12.4f %8.2fx %s\n", "chi(X80, d) for d = 1..5000", ts, tp,
                    ts / tp, same ? "equal" : "MISMATCH");
        if (!same) return 1;
    }

    {
        auto v = examples::x11();
        std::vector<Integer> serial_out, parallel_out;
        double ts = timed([&] { serial_out = chi_range_serial(v, 1, 20000); });
        double tp = timed([&] { parallel_out = chi_range(v, 1, 20000); });
        bool same = serial_out == parallel_out;
        std::printf("%-34s %12.4f %12.4f %8.2fx %s\n", "chi(X11, d) for d = 1..20000", ts, tp,
                    ts / tp, same ? "equal" : "MISMATCH");
        if (!same) return 1;
    }
    return 0;
}
