#include "ybcorr/csv.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ybcorr {

std::string format_number(double v) {
    assert(std::isfinite(v));
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_header() {
    return "model,state,p,theta,phi,B,J,g,scaled_time,"
           "concurrence,eof,c_l1,c_r,mid,"
           "concurrence_analytic,eof_analytic,c_l1_analytic,mid_analytic,discrepancy";
}

std::string csv_row(const SweepSpec& spec, const SweepRow& row) {
    std::string out;
    out += to_string(spec.model);
    out += ',';
    out += to_string(spec.state);
    for (double v : {row.p, spec.theta, spec.phi, spec.B, spec.J, spec.g,
                     row.scaled_time, row.numeric.concurrence, row.numeric.eof,
                     row.numeric.c_l1, row.numeric.c_r, row.numeric.mid}) {
        out += ',';
        out += format_number(v);
    }
    if (row.analytic) {
        for (double v : {row.analytic->concurrence, row.analytic->eof,
                         row.analytic->c_l1, row.analytic->mid, *row.discrepancy}) {
            out += ',';
            out += format_number(v);
        }
    } else {
        out += ",,,,,";
    }
    return out;
}

void write_csv(std::ostream& os, const SweepSpec& spec,
               const std::vector<SweepRow>& rows) {
    os << csv_header() << '\n';
    for (const SweepRow& row : rows) os << csv_row(spec, row) << '\n';
}

std::string csv_string(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    write_csv(os, spec, rows);
    return os.str();
}

}  // namespace ybcorr
