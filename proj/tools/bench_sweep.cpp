// Times the OpenMP sweep kernel against the serial reference on the
// full fig1 grid and checks that both produce identical rows.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ybcorr/cli_commands.hpp"

using namespace ybcorr;
using Clock = std::chrono::steady_clock;

namespace {

double run_ms(std::vector<SweepRow> (*fn)(const SweepSpec&), const SweepSpec& spec,
              std::vector<SweepRow>& rows) {
    const auto start = Clock::now();
    rows = fn(spec);
    const auto stop = Clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

bool identical(const std::vector<SweepRow>& a, const std::vector<SweepRow>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        const MeasureSet &ma = a[i].numeric, &mb = b[i].numeric;
        if (ma.concurrence != mb.concurrence || ma.eof != mb.eof ||
            ma.c_l1 != mb.c_l1 || ma.c_r != mb.c_r || ma.mid != mb.mid)
            return false;
    }
    return true;
}

}  // namespace

int main() {
    const SweepSpec spec = figure_spec(Figure::Fig1);
    const size_t points = spec.p_grid.size() * spec.time_grid.size();

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("grid: %zu points (fig1 preset)\n", points);

    std::vector<SweepRow> serial_rows, parallel_rows;
    // warm-up pass so both timings see hot caches
    run_ms(run_sweep_serial, spec, serial_rows);

    const double serial_ms = run_ms(run_sweep_serial, spec, serial_rows);
    const double parallel_ms = run_ms(run_sweep, spec, parallel_rows);

    std::printf("serial reference: %8.1f ms  (%.0f points/s)\n", serial_ms,
                1000.0 * static_cast<double>(points) / serial_ms);
    std::printf("openmp kernel:    %8.1f ms  (%.0f points/s)\n", parallel_ms,
                1000.0 * static_cast<double>(points) / parallel_ms);
    std::printf("speedup: %.2fx\n", serial_ms / parallel_ms);

    if (!identical(serial_rows, parallel_rows)) {
        std::printf("FAIL: serial and parallel rows differ\n");
        return 1;
    }
    std::printf("rows identical: yes\n");
    return 0;
}
