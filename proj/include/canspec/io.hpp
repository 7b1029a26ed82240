#pragma once

#include "canspec/types.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace canspec {

/// 17 significant digits, "%.17g".
std::string format_double(double x);

/// Relative paths are resolved against $CANSPEC_OUT_DIR when it is set.
std::string resolve_output_path(const std::string& path);

/// One header line, ',' separated, equal-length columns.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<Vector<double>>& columns);
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<Vector<double>>& columns);

struct SampleTable {
  std::vector<double> ts;
  std::vector<double> values;
};

/// Two whitespace-separated columns per line; blank lines and '#' comments skipped.
SampleTable read_samples(std::istream& is);
SampleTable read_samples(const std::string& path);

/// Comma-separated reals, e.g. "1,3,6,10".
std::vector<double> parse_list(const std::string& text);

}  // namespace canspec
