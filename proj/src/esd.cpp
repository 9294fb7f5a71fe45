#include "unruhsim/esd.hpp"

#include <stdexcept>

namespace unruhsim {

EsdResult find_esd(const ScenarioConfig& base, SweepVar var, int grid, double tol) {
  if (var != SweepVar::P1 && var != SweepVar::P2 && var != SweepVar::P3) {
    throw std::invalid_argument("find_esd: sweep variable must be p1, p2 or p3");
  }
  if (grid < 16) throw std::invalid_argument("find_esd: grid must be >= 16");
  if (!(tol > 0.0 && tol <= 1e-6)) {
    throw std::invalid_argument("find_esd: tol must lie in (0, 1e-6]");
  }

  const auto conc = [&](double v) {
    ScenarioConfig cfg = base;
    set_sweep_value(cfg, var, v);
    return concurrence_of(cfg);
  };

  if (conc(0.0) <= kEsdZero) {
    return {0.0, 0.0, 0.0, EsdStatus::AlwaysZero};
  }

  double alive = 0.0;
  for (int k = 1; k < grid; ++k) {
    const double v = static_cast<double>(k) / (grid - 1);
    if (conc(v) > kEsdZero) {
      alive = v;
      continue;
    }
    double lo = alive, hi = v;
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      (conc(mid) <= kEsdZero ? hi : lo) = mid;
    }
    const double threshold = 0.5 * (lo + hi);
    if (threshold <= 1.0 - tol) {
      return {threshold, lo, hi, EsdStatus::Found};
    }
    return {std::nullopt, lo, hi, EsdStatus::NoDeath};
  }
  return {std::nullopt, 1.0, 1.0, EsdStatus::NoDeath};
}

const char* to_string(EsdStatus s) {
  switch (s) {
    case EsdStatus::Found: return "Found";
    case EsdStatus::NoDeath: return "NoDeath";
    case EsdStatus::AlwaysZero: return "AlwaysZero";
  }
  return "?";
}

}  // namespace unruhsim
