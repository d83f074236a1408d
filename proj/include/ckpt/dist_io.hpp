#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ckpt/distribution.hpp"

namespace ckpt {

// Distribution file format, shared by every tool:
//   # ckpt-dist v1 t_start=<int> t_end=<int>
//   <time>,<count>
// One pair per line, sorted by time. Blank lines and further '#' comments
// are ignored. The header must be the first line.
FaultDistribution read_distribution(std::istream& in, const std::string& source_name = "<stream>");
FaultDistribution read_distribution_file(const std::string& path);

// extra_comments are emitted verbatim after the header, one '#' line each
// (provenance: generator parameters, seeds, ...).
void write_distribution(std::ostream& out, const FaultDistribution& d,
                        const std::vector<std::string>& extra_comments = {});
void write_distribution_file(const std::string& path, const FaultDistribution& d,
                             const std::vector<std::string>& extra_comments = {});

// Rectangle breakdown as CSV: a '#' summary line, a header row, then one
// left,right,height,area row per rectangle.
void write_savings_csv(std::ostream& out, const SavingsReport& report);

// Shortest round-trip decimal form (to_chars), used everywhere a double goes
// into CSV or JSON so that identical values always print identically.
std::string format_double(double value);

} // namespace ckpt
