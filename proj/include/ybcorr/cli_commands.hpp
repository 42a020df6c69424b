#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ybcorr/csv.hpp"

namespace ybcorr {

// Exit codes shared by the CLI and the command implementations.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Parses "0.25pi", "-0.5pi", "pi" or a plain decimal into radians.
double parse_angle(const std::string& text);

/// Parses "min:max:count" into a linear grid.
std::vector<double> parse_grid(const std::string& text);

struct VerifyOptions {
    std::optional<double> tol;  // overrides every gated tolerance
    int sites = 3;              // 4 adds the far-commutation check
};

/// Runs the algebraic verification suites (unitarity, TLA, constant and
/// spectral YBE, decomposition, conjugation consistency, isospectrality),
/// printing one residual line each. Returns kExitOk iff all gated checks pass;
/// the R1/R2 composition-rule scan is reported, never gated.
int cmd_verify_algebra(const VerifyOptions& opts, std::ostream& out);

/// One CSV row (header + row) for a single parameter point.
int cmd_measure(const SweepSpec& spec, std::ostream& out);

/// Full sweep written to out_path (or stdout when out_path is empty).
int cmd_sweep(const SweepSpec& spec, const std::string& out_path,
              std::ostream& out, std::ostream& err);

enum class Figure { Fig1, Fig2, Fig3, Fig4 };

/// The preset grid reproducing one of the four figures.
SweepSpec figure_spec(Figure which);

std::optional<Figure> figure_from_name(const std::string& name);

/// Writes the preset sweep for a figure; reports the worst oracle
/// discrepancy on err when an oracle applies.
int cmd_figures(Figure which, const std::string& out_path, std::ostream& out,
                std::ostream& err);

/// Oracle-vs-numeric comparison table for (model, state); H3 is checked by
/// equality with the H1 sweep instead of a closed form.
int cmd_compare(Model model, StateFamily state, double tol, std::ostream& out);

}  // namespace ybcorr
