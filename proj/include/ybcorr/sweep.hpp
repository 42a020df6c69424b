#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybcorr/dynamics.hpp"

namespace ybcorr {

/// Declarative parameter-grid description. The sweep coordinate is the
/// scaled time Bt (H1/H3) or Jt (H2); raw t is derived per point.
struct SweepSpec {
    Model model = Model::H1;
    StateFamily state = StateFamily::Werner;
    std::vector<double> p_grid;
    std::vector<double> time_grid;  // scaled time
    double phi = std::numbers::pi / 4;
    double theta = std::numbers::pi / 2;
    double B = 1.0;
    double J = 1.0;
    double g = 0.5;
    int epsilon = +1;

    ModelParams params() const { return ModelParams{B, J, g, theta, phi, epsilon}; }
    double time_scale() const { return model == Model::H2 ? J : B; }
    void validate() const;  // grids nonempty/increasing, p in [0,1], scale != 0
};

/// One output record per grid point.
struct SweepRow {
    double p;
    double scaled_time;
    MeasureSet numeric;
    std::optional<OracleMeasures> analytic;
    std::optional<double> discrepancy;  // max |numeric - analytic| over the four pairs
};

/// Evaluates the grid in parallel (OpenMP); rows come back in deterministic
/// p-major, time-ascending order regardless of schedule.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Serial reference implementation; must produce identical rows.
std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec);

struct MeasureDiscrepancy {
    double max_abs = 0.0;
    double worst_p = 0.0;
    double worst_time = 0.0;
};

/// Per-measure maximum |numeric - analytic| over a sweep and its location.
struct CompareReport {
    MeasureDiscrepancy concurrence, eof, c_l1, mid;
    double overall() const;
};

/// Runs the sweep and reports the oracle disagreement. Throws NoOracleError
/// when the (model, theta) pair has no closed form (H3 is compared against
/// H1 numerics by the CLI instead).
CompareReport compare_analytic_numeric(const SweepSpec& spec);

/// count >= 2 evenly spaced points with exact endpoints; count == 1 -> {min}.
std::vector<double> linear_grid(double min, double max, int count);

std::string to_string(Model m);
std::string to_string(StateFamily s);

}  // namespace ybcorr
