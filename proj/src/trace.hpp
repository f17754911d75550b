#pragma once

#include <iosfwd>
#include <string>

#include "solver.hpp"

namespace cdkit {

// One header plus one row per record:
//   k,elapsed_s,f,gap,j1,j2,theta_or_a,gamma_num,gamma_den,energy
// Floats are %.17g (round-trip exact), missing values are "nan", line
// endings are LF.  Coordinate columns are 0-based; -1 means "none".
void write_trace_csv(const Trace& t, std::ostream& out);
void write_trace_csv_file(const Trace& t, const std::string& path);

}  // namespace cdkit
