#pragma once

#include <ostream>
#include <string>

#include "ybcorr/sweep.hpp"

namespace ybcorr {

/// Fixed 12-significant-digit serialization; deterministic across runs.
std::string format_number(double v);

/// The fixed column order of every emitted CSV.
std::string csv_header();

/// One data row; analytic cells are empty when the row has no oracle.
std::string csv_row(const SweepSpec& spec, const SweepRow& row);

/// Header plus all rows, single '\n' separators, no trailing whitespace.
void write_csv(std::ostream& os, const SweepSpec& spec,
               const std::vector<SweepRow>& rows);

std::string csv_string(const SweepSpec& spec, const std::vector<SweepRow>& rows);

}  // namespace ybcorr
