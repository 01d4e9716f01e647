// Deterministic CSV emission: 17 significant digits, '.' decimal separator,
// ',' delimiter, '\n' line endings, atomic file replacement.

#pragma once

#include <string>
#include <vector>

namespace dsq {

/// printf "%.17g" with the C locale (byte-stable across runs).
std::string format_sig17(double x);

std::string csv_line(const std::vector<std::string>& fields);

/// Write via temp file + rename in the target directory.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace dsq
