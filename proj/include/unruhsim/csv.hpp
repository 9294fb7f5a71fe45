#pragma once

#include <string>
#include <vector>

namespace unruhsim {

/// Render a real with 12 significant digits, lowercase scientific notation
/// for |x| < 1e-4. Round-trips doubles closely enough for golden-file tests
/// and is byte-stable across runs.
std::string format_real(double x);

/// Join values with `sep` (CSV row or in-cell list).
std::string join(const std::vector<std::string>& parts, char sep = ',');

}  // namespace unruhsim
