#include "unruhsim/csv.hpp"

#include <cmath>
#include <cstdio>

namespace unruhsim {

std::string format_real(double x) {
  if (x == 0.0) return "0";  // also normalizes -0
  char buf[40];
  if (std::abs(x) < 1e-4) {
    std::snprintf(buf, sizeof(buf), "%.11e", x);
  } else {
    std::snprintf(buf, sizeof(buf), "%.12g", x);
  }
  return buf;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace unruhsim
