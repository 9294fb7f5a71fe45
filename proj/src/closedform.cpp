#include "unruhsim/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "unruhsim/entanglement.hpp"
#include "unruhsim/scenarios.hpp"

namespace unruhsim {

namespace {

double checked_sqrt(double radicand, const char* where) {
  if (radicand < -1e-12) {
    throw std::runtime_error(std::string(where) + ": negative radicand beyond tolerance");
  }
  return std::sqrt(std::max(radicand, 0.0));
}

}  // namespace

DensityElementsS1 density_elements_s1(double r, double p1, double p2, double p3) {
  const double c2r = std::cos(2 * r);
  const double cr = std::cos(r);
  const double corner = std::sqrt((-1 + p1) * (-1 + p2));
  const double q = (3 - 4 * p3) * (3 - 4 * p3);

  DensityElementsS1 e;
  e.rho11 = (1.0 / 36) * (-8 * p3 * p3 * (p1 - 1) - (2 * p3 * (4 * p3 - 9) + 9) * (p1 - 1) * c2r
                          - 6 * p3 * (p1 + 1) + 9 * (p1 + 1));
  e.rho14 = (1.0 / 18) * q * corner * cr;
  e.rho22 = (1.0 / 36) * (9 + 8 * p3 * p3 * (-1 + p1) - 9 * p1 + 6 * p3 * (1 + p1)
                          + (9 + 2 * p3 * (-9 + 4 * p3)) * (-1 + p1) * c2r);
  e.rho33 = (1.0 / 18) * (p3 * (9 + 4 * p3 * (-1 + p1) - 15 * p1) + 9 * p1
                          + p3 * (-3 + 4 * p3) * (-1 + p1) * c2r);
  // printed with cos 2r; corrected to cos r (Hermiticity, confirmed by the pipeline)
  e.rho41 = (1.0 / 18) * q * corner * cr;
  e.rho44 = (1.0 / 18) * (9 - 9 * p1 + p3 * (-9 - 4 * p3 * (-1 + p1) + 15 * p1)
                          - p3 * (-3 + 4 * p3) * (-1 + p1) * c2r);
  return e;
}

std::array<double, 4> eigenvalues_s1(double r, double p1, double p2, double p3) {
  const double cr2 = std::cos(r) * std::cos(r);
  const double cr4 = cr2 * cr2;
  const double c2r = std::cos(2 * r);
  const double c4r = std::cos(4 * r);
  const double q = (3 - 4 * p3) * (3 - 4 * p3);

  const double body =
      54 * p3 - 36 * p3 * p3 + 81 * p1 - 216 * p3 * p1 + 144 * p3 * p3 * p1 - 81 * p1 * p1
      + 216 * p3 * p1 * p1 - 144 * p3 * p3 * p1 * p1
      + q * (-1 + p1) * (-24 * p3 * (-1 + p2) + 16 * p3 * p3 * (-1 + p2) + 9 * (-2 + p1 + p2))
            * cr2
      + 2 * q * p3 * (-3 + 2 * p3) * (-1 + p1) * (-1 + p1) * cr4;

  // bare "4p^2" resolved to p3 by calibration against the pipeline
  const double radicand =
      q * q * (-1 + p1) * (-1 + p2) * cr2
      * (-9 * (-6 * p3 * (1 - 2 * p1) * (1 - 2 * p1) + 4 * p3 * p3 * (1 - 2 * p1) * (1 - 2 * p1)
               + 9 * (-1 + p1) * p1)
         + 9 * q * (-1 + p1) * (-1 + p1) * cr2
         + 2 * q * p3 * (-3 + 2 * p3) * (-1 + p1) * (-1 + p1) * cr4);
  const double root = checked_sqrt(radicand, "eigenvalues_s1");

  const double l34 =
      (1.0 / 1296)
      * (3 * (-96 * p3 * p3 * p3 * (-1 + p1) * (-1 + p1)
              + 32 * p3 * p3 * p3 * p3 * (-1 + p1) * (-1 + p1) - 54 * (-1 + p1) * p1
              - 6 * p3 * p3 * (-7 + 14 * p1 + p1 * p1) + 9 * p3 * (5 - 10 * p1 + 13 * p1 * p1))
         + 2 * q * (-1 + p1) * (-6 * p3 * (-1 + p1) + 4 * p3 * p3 * (-1 + p1) + 9 * p1) * c2r
         + q * p3 * (-3 + 2 * p3) * (-1 + p1) * (-1 + p1) * c4r);

  return {(body + 2 * root) / 324, (body - 2 * root) / 324, l34, l34};
}

std::array<double, 4> eigenvalues_s3(double r, double p1, double p2, double p3) {
  const double cr2 = std::cos(r) * std::cos(r);
  const double c2r = std::cos(2 * r);
  const double c4r = std::cos(4 * r);
  const double s2 = std::sin(r) * std::sin(r);
  const double s4 = s2 * s2;
  const double q = (3 - 4 * p3) * (3 - 4 * p3);
  const double dp = -1 + p1;

  const double base = 18 + 9 * p1 * p1 - 9 * p2 - 36 * p3 + 12 * p1 * p3 - 12 * p1 * p1 * p3
                      + 24 * p2 * p3 + 20 * p3 * p3 - 8 * p1 * p3 * p3 + 4 * p1 * p1 * p3 * p3
                      - 16 * p2 * p3 * p3;
  const double radicand =
      -(-1 + p2) * q * cr2 * (-3 + p3 + p3 * c2r)
      * (-3 * (1 + p1 + 2 * p1 * p1) + 2 * dp * dp * p3 + dp * (3 + 2 * dp * p3) * c2r);
  const double root = checked_sqrt(radicand, "eigenvalues_s3");
  const double tail = (9 * (-2 + p1 + p2) + 6 * (7 - 3 * p1 + 2 * p1 * p1 - 4 * p2) * p3
                       - 8 * (3 - 2 * p1 + p1 * p1 - 2 * p2) * p3 * p3)
                          * s2
                      + 2 * dp * p3 * (3 + 2 * dp * p3) * s4;
  const double pref = (1.0 / 36) * dp * dp;

  // both bare "p" occurrences resolved to p3 by calibration against the pipeline
  const double l34 = (1.0 / 144) * dp * dp
                     * (3 * (2 * p3 * p3 * dp * dp + 6 * p1 * (1 + 2 * p1)
                             + p3 * (1 + 7 * p1 - 8 * p1 * p1))
                        + 2 * (4 * p3 * p3 * dp * dp - 9 * p1 - 12 * p3 * dp * p1) * c2r
                        + p3 * (3 + 2 * p3 * dp) * dp * c4r);

  const double sqrt2 = std::numbers::sqrt2;
  return {pref * (base + sqrt2 * root + tail), pref * (base - sqrt2 * root + tail), l34, l34};
}

const std::vector<std::string>& closedform_corrections() {
  static const std::vector<std::string> corrections = {
      "density_s1: rho41 cos 2r -> cos r (Hermiticity)",
      "eig_s1: bare 4p^2 in the radicand -> 4 p3^2",
      "eig_s3: bare p in l3,4 -> p3 (both occurrences)",
  };
  return corrections;
}

namespace {

// Deterministic uniform in [0, 1) independent of the standard library's
// distribution implementation.
double next_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

std::array<double, 4> pipeline_wootters_eigs(const DensityMatrix& rho) {
  const auto eigs = eigenvalues4(mul(rho.mat(), spin_flip(rho)));
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) out[i] = std::max(eigs[i].real(), 0.0);
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

ClosedFormRecord make_record(const char* family, double r, double p1, double p2, double p3,
                             std::vector<double> pipeline, std::vector<double> printed) {
  double dev = 0.0;
  for (std::size_t i = 0; i < pipeline.size(); ++i) {
    dev = std::max(dev, std::abs(pipeline[i] - printed[i]));
  }
  return {family, r, p1, p2, p3, std::move(pipeline), std::move(printed), dev, dev <= 1e-6};
}

}  // namespace

std::vector<ClosedFormRecord> validate_closedform(int points, unsigned long long seed) {
  if (points < 1) throw std::invalid_argument("validate_closedform: points must be >= 1");
  std::mt19937_64 gen(seed);
  std::vector<ClosedFormRecord> records;
  records.reserve(3 * static_cast<std::size_t>(points));

  for (int i = 0; i < points; ++i) {
    const double r = next_uniform(gen) * (std::numbers::pi / 4);
    const double p1 = next_uniform(gen);
    const double p2 = next_uniform(gen);
    const double p3 = next_uniform(gen);

    const DensityMatrix rho1 = evolve({ScenarioId::S1, Coupling::Global, r, p1, p2, p3});
    const DensityElementsS1 e = density_elements_s1(r, p1, p2, p3);
    records.push_back(make_record(
        "density_s1", r, p1, p2, p3,
        {rho1(0, 0).real(), rho1(0, 3).real(), rho1(1, 1).real(), rho1(2, 2).real(),
         rho1(3, 0).real(), rho1(3, 3).real()},
        {e.rho11.real(), e.rho14.real(), e.rho22.real(), e.rho33.real(), e.rho41.real(),
         e.rho44.real()}));

    auto cf1 = eigenvalues_s1(r, p1, p2, p3);
    std::sort(cf1.begin(), cf1.end(), std::greater<double>());
    const auto pl1 = pipeline_wootters_eigs(rho1);
    records.push_back(make_record("eig_s1", r, p1, p2, p3, {pl1.begin(), pl1.end()},
                                  {cf1.begin(), cf1.end()}));

    const DensityMatrix rho3 = evolve({ScenarioId::S3, Coupling::Global, r, p1, p2, p3});
    auto cf3 = eigenvalues_s3(r, p1, p2, p3);
    std::sort(cf3.begin(), cf3.end(), std::greater<double>());
    const auto pl3 = pipeline_wootters_eigs(rho3);
    records.push_back(make_record("eig_s3", r, p1, p2, p3, {pl3.begin(), pl3.end()},
                                  {cf3.begin(), cf3.end()}));
  }
  return records;
}

}  // namespace unruhsim
