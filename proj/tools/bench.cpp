// Serial vs OpenMP timings for the three data-parallel kernels: the
// closed-form visibility sweep, the element-level engine grid, and
// multinomial shot sampling. Parallel and serial paths must agree exactly;
// the benchmark aborts if they do not.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zeno/audit.hpp"
#include "zeno/engine.hpp"
#include "zeno/experiment.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-22s serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   %s\n",
                name, serial_ms, parallel_ms, serial_ms / parallel_ms,
                match ? "results match" : "RESULTS DIFFER");
    if (!match) std::exit(1);
}

// Element-level machine over the full grid, both channel policies; returns a
// checksum of the exiting amplitudes.
double engine_grid(int m_max, int n_max, bool parallel) {
    const int total = m_max * n_max;
    double sum = 0.0;

#pragma omp parallel for schedule(dynamic) reduction(+ : sum) if (parallel)
    for (int idx = 0; idx < total; ++idx) {
        const int m = idx / n_max + 1;
        const int n = idx % n_max + 1;
        const zeno::CqzeOutcome blocked =
            zeno::run_cqze({m, n, zeno::ChannelPolicy::Blocked}, 1.0);
        const zeno::CqzeOutcome open =
            zeno::run_cqze({m, n, zeno::ChannelPolicy::Open}, 1.0);
        sum += blocked.out_h + blocked.out_v + open.out_h;
    }
    return sum;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel paths run serially\n");
#endif

    {
        constexpr int m_max = 64;
        constexpr int n_max = 2048;
        auto t0 = Clock::now();
        const zeno::VisibilityGrid serial = zeno::sweep_visibility_serial(m_max, n_max);
        const double t_serial = ms_since(t0);
        t0 = Clock::now();
        const zeno::VisibilityGrid parallel = zeno::sweep_visibility(m_max, n_max);
        const double t_parallel = ms_since(t0);

        bool match = serial.rows.size() == parallel.rows.size();
        for (std::size_t i = 0; match && i < serial.rows.size(); ++i) {
            match = serial.rows[i].x == parallel.rows[i].x &&
                    serial.rows[i].y == parallel.rows[i].y &&
                    serial.rows[i].visibility == parallel.rows[i].visibility;
        }
        report("closed-form sweep", t_serial, t_parallel, match);
    }

    {
        constexpr int reps = 4;
        auto t0 = Clock::now();
        double serial_sum = 0.0;
        for (int r = 0; r < reps; ++r) serial_sum += engine_grid(10, 50, false);
        const double t_serial = ms_since(t0);
        t0 = Clock::now();
        double parallel_sum = 0.0;
        for (int r = 0; r < reps; ++r) parallel_sum += engine_grid(10, 50, true);
        const double t_parallel = ms_since(t0);
        report("engine grid 10x50", t_serial, t_parallel, serial_sum == parallel_sum);
    }

    {
        const zeno::ExperimentResult result = zeno::run_scenario(
            zeno::Scenario::EraseBlocked, zeno::CqzeParams{2, 4});
        const zeno::ShotConfig config{20'000'000, 1};
        auto t0 = Clock::now();
        const zeno::Counts serial = zeno::sample_outcomes_serial(result, config);
        const double t_serial = ms_since(t0);
        t0 = Clock::now();
        const zeno::Counts parallel = zeno::sample_outcomes(result, config);
        const double t_parallel = ms_since(t0);
        report("sampling 2e7 shots", t_serial, t_parallel, serial == parallel);
    }

    return 0;
}
