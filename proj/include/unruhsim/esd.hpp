#pragma once

#include <optional>

#include "unruhsim/scenarios.hpp"

namespace unruhsim {

enum class EsdStatus { Found, NoDeath, AlwaysZero };

/// Result of a sudden-death search along one sweep variable. Concurrence is
/// considered dead when it is <= 1e-12, which sits above the ~1e-13 noise
/// floor of the concurrence pipeline on these real states. A crossing is
/// "sudden death" only if it happens at a parameter value <= 1 - tol; the
/// concurrence reaching zero exactly at full decoherence is NoDeath.
struct EsdResult {
  std::optional<double> threshold;  // set for Found (bracket midpoint) and AlwaysZero (0)
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  EsdStatus status = EsdStatus::NoDeath;
};

inline constexpr double kEsdZero = 1e-12;

/// Scan the sweep variable over a uniform grid on [0, 1], bracket the first
/// entry into the dead region, and bisect the bracket to width <= tol.
/// Requires var in {P1, P2, P3}, grid >= 16 and 0 < tol <= 1e-6. No search
/// for revival is made: none of the studied configurations shows one.
EsdResult find_esd(const ScenarioConfig& base, SweepVar var, int grid, double tol);

const char* to_string(EsdStatus s);

}  // namespace unruhsim
