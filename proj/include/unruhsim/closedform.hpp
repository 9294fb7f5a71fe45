#pragma once

#include <array>
#include <string>
#include <vector>

#include "unruhsim/qmat.hpp"

namespace unruhsim {

// Literal evaluation of the published closed forms for scenario 1 density
// elements and the scenario 1 / scenario 3 eigenvalue sets, with documented
// transcription corrections (see closedform_corrections). These exist purely
// as cross-checks against the numeric Kraus pipeline: once calibrated they
// catch pipeline regressions, and the pipeline in turn catches typos here.

struct DensityElementsS1 {
  cplx rho11, rho14, rho22, rho33, rho41, rho44;
};

/// Nonzero elements of the scenario 1 final density matrix under the global
/// environment, with rho41 corrected to use cos r (Hermiticity of the real
/// matrix forces rho41 = rho14; the printed cos 2r does not match the
/// pipeline anywhere).
DensityElementsS1 density_elements_s1(double r, double p1, double p2, double p3);

/// Scenario 1 eigenvalues of rho * rho~ in the order {l+, l-, l3, l4} where
/// l+/l- carry the +- branch and l3 = l4. The one bare-subscript parameter
/// in the radicand resolves to p3 (calibrated against the pipeline).
/// A radicand below -1e-12 throws std::runtime_error; smaller negatives are
/// clamped to zero.
std::array<double, 4> eigenvalues_s1(double r, double p1, double p2, double p3);

/// Scenario 3 analogue. Both bare-subscript parameters in l3,4 resolve to p3.
std::array<double, 4> eigenvalues_s3(double r, double p1, double p2, double p3);

/// Human-readable list of the transcription corrections baked into the
/// evaluators above.
const std::vector<std::string>& closedform_corrections();

struct ClosedFormRecord {
  std::string family;  // "density_s1", "eig_s1", "eig_s3"
  double r, p1, p2, p3;
  std::vector<double> pipeline_values;
  std::vector<double> printed_values;
  double max_abs_deviation;
  bool validated;  // deviation <= 1e-6; anything larger marks the point unvalidated
};

/// Compare the closed forms against the Kraus pipeline on `points` random
/// parameter points (deterministic for a fixed seed). Three records per
/// point, one per family.
std::vector<ClosedFormRecord> validate_closedform(int points, unsigned long long seed);

}  // namespace unruhsim
