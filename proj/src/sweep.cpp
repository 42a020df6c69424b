#include "ybcorr/sweep.hpp"

#include <algorithm>
#include <cmath>
#include "ybcorr/detail/strfmt.hpp"

namespace ybcorr {

namespace {

DensityMatrix input_state(StateFamily family, double p) {
    return family == StateFamily::Werner ? werner_state(p) : xlike_state(p);
}

/// Propagator at raw time t from a precomputed Hamiltonian spectrum.
Matrix propagator_from(const HermitianSpectrum& s, double t) {
    Vector phases(s.eigenvalues.size());
    for (Eigen::Index k = 0; k < phases.size(); ++k)
        phases(k) = std::exp(-kImag * t * s.eigenvalues(k));
    return s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
}

SweepRow evaluate_point(const SweepSpec& spec, const HermitianSpectrum& hspec,
                        bool oracle, double p, double scaled_time) {
    const double t = spec.time_scale() == 0.0 ? 0.0 : scaled_time / spec.time_scale();
    const Matrix u = propagator_from(hspec, t);
    const DensityMatrix rho = input_state(spec.state, p);
    const DensityMatrix sigma =
        DensityMatrix::validated(u * rho.matrix() * u.adjoint());

    SweepRow row;
    row.p = p;
    row.scaled_time = scaled_time;
    row.numeric = measure_all(sigma);
    if (oracle) {
        row.analytic = analytic_measures(spec.model, spec.state, p, spec.phi,
                                         spec.theta, scaled_time);
        row.discrepancy = std::max(
            {std::abs(row.numeric.concurrence - row.analytic->concurrence),
             std::abs(row.numeric.eof - row.analytic->eof),
             std::abs(row.numeric.c_l1 - row.analytic->c_l1),
             std::abs(row.numeric.mid - row.analytic->mid)});
    }
    return row;
}

std::vector<SweepRow> run_sweep_impl(const SweepSpec& spec, bool parallel) {
    spec.validate();
    const HermitianSpectrum hspec = herm_eig(build_h(spec.model, spec.params()));
    const bool oracle = has_oracle(spec.model, spec.theta);

    const auto np = static_cast<std::ptrdiff_t>(spec.p_grid.size());
    const auto nt = static_cast<std::ptrdiff_t>(spec.time_grid.size());
    std::vector<SweepRow> rows(static_cast<size_t>(np * nt));

    // Grid points are independent; rows land at their (p-major, time-ascending)
    // index, so output order and bytes do not depend on the schedule.
#pragma omp parallel for collapse(2) if (parallel)
    for (std::ptrdiff_t i = 0; i < np; ++i)
        for (std::ptrdiff_t j = 0; j < nt; ++j)
            rows[static_cast<size_t>(i * nt + j)] =
                evaluate_point(spec, hspec, oracle, spec.p_grid[static_cast<size_t>(i)],
                               spec.time_grid[static_cast<size_t>(j)]);
    return rows;
}

void observe(MeasureDiscrepancy& d, double numeric, double analytic,
             const SweepRow& row) {
    const double diff = std::abs(numeric - analytic);
    if (diff > d.max_abs) d = {diff, row.p, row.scaled_time};
}

}  // namespace

void SweepSpec::validate() const {
    auto strictly_increasing = [](const std::vector<double>& v) {
        return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
    };
    if (p_grid.empty() || time_grid.empty())
        throw DomainError("sweep grids must be nonempty");
    if (!strictly_increasing(p_grid))
        throw DomainError("p grid must be strictly increasing");
    if (!strictly_increasing(time_grid))
        throw DomainError("time grid must be strictly increasing");
    for (double p : p_grid)
        if (p < 0.0 || p > 1.0)
            throw DomainError(detail::strf("p grid value %g outside [0, 1]", p));
    if (time_scale() == 0.0) {
        for (double t : time_grid)
            if (t != 0.0)
                throw ZeroScaleError(detail::strf(
                    "scaled time %g requires a nonzero %s to recover t", t,
                    model == Model::H2 ? "J" : "B"));
    }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    return run_sweep_impl(spec, true);
}

std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec) {
    return run_sweep_impl(spec, false);
}

double CompareReport::overall() const {
    return std::max({concurrence.max_abs, eof.max_abs, c_l1.max_abs, mid.max_abs});
}

CompareReport compare_analytic_numeric(const SweepSpec& spec) {
    if (!has_oracle(spec.model, spec.theta))
        throw NoOracleError(detail::strf("no oracle for model %s at this theta",
                                         to_string(spec.model).c_str()));
    CompareReport report;
    for (const SweepRow& row : run_sweep(spec)) {
        observe(report.concurrence, row.numeric.concurrence, row.analytic->concurrence, row);
        observe(report.eof, row.numeric.eof, row.analytic->eof, row);
        observe(report.c_l1, row.numeric.c_l1, row.analytic->c_l1, row);
        observe(report.mid, row.numeric.mid, row.analytic->mid, row);
    }
    return report;
}

std::vector<double> linear_grid(double min, double max, int count) {
    if (count < 1) throw DomainError("grid count must be >= 1");
    if (count == 1) return {min};
    if (max <= min) throw DomainError("grid needs max > min");
    std::vector<double> grid(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        grid[static_cast<size_t>(i)] =
            min + (max - min) * static_cast<double>(i) / (count - 1);
    grid.back() = max;  // exact endpoint
    return grid;
}

std::string to_string(Model m) {
    switch (m) {
        case Model::H1: return "h1";
        case Model::H2: return "h2";
        case Model::H3: return "h3";
    }
    return "?";
}

std::string to_string(StateFamily s) {
    return s == StateFamily::Werner ? "werner" : "xlike";
}

}  // namespace ybcorr
