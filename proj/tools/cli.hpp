#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "softhybrid/soft_set.hpp"

namespace softhybrid::cli {

// Display form used in human reports: two decimals, truncated toward zero
// (a tiny guard absorbs float noise on exact hundredths). Matches the
// reference tables; JSON reports always carry the raw values.
std::string format_display(double x);

// Shortest decimal that round-trips, for exact quantities like cardinality.
std::string format_raw(double x);

std::string format_pair_display(double a, double b);
std::string format_pair_raw(double a, double b);

// Runs one command line (without the program name). Writes the report to
// `out` and diagnostics to `err`. Returns 0 on success, 1 on a computation
// -level failure (failing identity check under --strict), 2 on input or
// usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace softhybrid::cli
