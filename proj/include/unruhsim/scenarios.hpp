#pragma once

#include <string>
#include <vector>

#include "unruhsim/density.hpp"

namespace unruhsim {

/// The three channel configurations studied here. The decoherence parameters
/// are tied to channel kinds, not to qubits: p1 always parameterizes
/// amplitude damping, p2 phase damping, p3 depolarizing.
///   S1: Alice <- phase damping(p2), Rob <- amplitude damping(p1),
///       collective <- depolarizing(p3)
///   S2: Alice <- amplitude damping(p1), Rob <- phase damping(p2),
///       collective <- depolarizing(p3)
///   S3: Alice <- depolarizing(p3), Rob <- phase damping(p2),
///       collective <- amplitude damping(p1)
enum class ScenarioId { S1, S2, S3 };

/// Multilocal switches the collective channel off (its parameter is ignored
/// and the map is the identity); Global applies locals plus collective.
enum class Coupling { Multilocal, Global };

enum class SweepVar { P1, P2, P3, AllEqual };  // AllEqual drives p1 = p2 = p3 together

struct ScenarioConfig {
  ScenarioId id;
  Coupling coupling;
  double r;             // in [0, pi/4]
  double p1, p2, p3;    // each in [0, 1]
};

struct SweepRecord {
  ScenarioId scenario;
  Coupling coupling;
  double r;
  double p1, p2, p3;
  double concurrence;
};

/// Channel preset behind one published curve family.
struct FigurePreset {
  std::string figure_id;  // "1a", "1b", "2a", "2b", "3", "4", "5a", "5b", "6"
  ScenarioId scenario;
  Coupling coupling;
  double p1, p2, p3;      // fixed values; the swept slot(s) are overwritten
  SweepVar sweep;
  std::vector<double> r_values;
};

DensityMatrix evolve(const ScenarioConfig& cfg);
double concurrence_of(const ScenarioConfig& cfg);

const std::vector<FigurePreset>& figure_presets();
const FigurePreset& figure_preset(const std::string& id);  // throws on unknown id

/// Uniform sweep of the preset's variable over [0, 1] with `samples` points
/// per r value. Records are ordered by r, then sweep value.
std::vector<SweepRecord> figure_data(const FigurePreset& preset, int samples);

void set_sweep_value(ScenarioConfig& cfg, SweepVar var, double value);

const char* to_string(ScenarioId id);
const char* to_string(Coupling c);
const char* to_string(SweepVar v);
ScenarioId scenario_from_string(const std::string& s);
Coupling coupling_from_string(const std::string& s);
SweepVar sweep_var_from_string(const std::string& s);

/// The r grid used by every figure preset: {0, pi/16, pi/8, 3pi/16, pi/4}.
const std::vector<double>& preset_r_grid();

}  // namespace unruhsim
