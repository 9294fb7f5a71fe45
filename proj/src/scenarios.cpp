#include "unruhsim/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "unruhsim/channels.hpp"
#include "unruhsim/entanglement.hpp"
#include "unruhsim/rindler.hpp"

namespace unruhsim {

namespace {

struct ScenarioKinds {
  ChannelKind alice;
  ChannelKind rob;
  ChannelKind collective;
};

ScenarioKinds kinds_of(ScenarioId id) {
  switch (id) {
    case ScenarioId::S1:
      return {ChannelKind::PhaseDamping, ChannelKind::AmplitudeDamping,
              ChannelKind::Depolarizing};
    case ScenarioId::S2:
      return {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping,
              ChannelKind::Depolarizing};
    case ScenarioId::S3:
      return {ChannelKind::Depolarizing, ChannelKind::PhaseDamping,
              ChannelKind::AmplitudeDamping};
  }
  throw std::invalid_argument("kinds_of: unknown scenario");
}

double param_for(ChannelKind kind, const ScenarioConfig& cfg) {
  switch (kind) {
    case ChannelKind::AmplitudeDamping: return cfg.p1;
    case ChannelKind::PhaseDamping: return cfg.p2;
    case ChannelKind::Depolarizing: return cfg.p3;
  }
  throw std::invalid_argument("param_for: unknown kind");
}

void validate(const ScenarioConfig& cfg) {
  if (!(cfg.r >= 0.0 && cfg.r <= kRMax + kRSlack)) {
    throw std::domain_error("ScenarioConfig: r must lie in [0, pi/4]");
  }
  for (double p : {cfg.p1, cfg.p2, cfg.p3}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::domain_error("ScenarioConfig: decoherence parameters must lie in [0, 1]");
    }
  }
}

}  // namespace

DensityMatrix evolve(const ScenarioConfig& cfg) {
  validate(cfg);
  const ScenarioKinds kinds = kinds_of(cfg.id);
  const double collective_p =
      cfg.coupling == Coupling::Global ? param_for(kinds.collective, cfg) : 0.0;

  const KrausChannel alice =
      lift_local(make_channel(kinds.alice, param_for(kinds.alice, cfg)),
                 ChannelPlacement::AliceLocal);
  const KrausChannel rob = lift_local(make_channel(kinds.rob, param_for(kinds.rob, cfg)),
                                      ChannelPlacement::RobLocal);
  const KrausChannel collective = lift_collective(make_channel(kinds.collective, collective_p));

  return apply_global(shared_state(cfg.r), alice, rob, collective);
}

double concurrence_of(const ScenarioConfig& cfg) { return concurrence(evolve(cfg)); }

const std::vector<double>& preset_r_grid() {
  static const std::vector<double> grid = {
      0.0, std::numbers::pi / 16, std::numbers::pi / 8, 3 * std::numbers::pi / 16,
      std::numbers::pi / 4};
  return grid;
}

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = [] {
    const auto& r = preset_r_grid();
    return std::vector<FigurePreset>{
        {"1a", ScenarioId::S1, Coupling::Multilocal, 0.5, 0.0, 0.0, SweepVar::P2, r},
        {"1b", ScenarioId::S1, Coupling::Multilocal, 0.0, 0.5, 0.0, SweepVar::P1, r},
        {"2a", ScenarioId::S1, Coupling::Global, 0.1, 0.1, 0.0, SweepVar::P3, r},
        {"2b", ScenarioId::S1, Coupling::Global, 0.0, 0.0, 0.0, SweepVar::AllEqual, r},
        {"3", ScenarioId::S2, Coupling::Multilocal, 0.0, 0.5, 0.0, SweepVar::P1, r},
        {"4", ScenarioId::S2, Coupling::Global, 0.1, 0.1, 0.0, SweepVar::P3, r},
        {"5a", ScenarioId::S3, Coupling::Multilocal, 0.0, 0.2, 0.0, SweepVar::P3, r},
        {"5b", ScenarioId::S3, Coupling::Multilocal, 0.0, 0.0, 0.2, SweepVar::P2, r},
        {"6", ScenarioId::S3, Coupling::Global, 0.0, 0.2, 0.2, SweepVar::P1, r},
    };
  }();
  return presets;
}

const FigurePreset& figure_preset(const std::string& id) {
  for (const auto& preset : figure_presets()) {
    if (preset.figure_id == id) return preset;
  }
  std::string known;
  for (const auto& preset : figure_presets()) {
    if (!known.empty()) known += ", ";
    known += preset.figure_id;
  }
  throw std::invalid_argument("unknown figure id '" + id + "' (valid: " + known + ")");
}

void set_sweep_value(ScenarioConfig& cfg, SweepVar var, double value) {
  switch (var) {
    case SweepVar::P1: cfg.p1 = value; return;
    case SweepVar::P2: cfg.p2 = value; return;
    case SweepVar::P3: cfg.p3 = value; return;
    case SweepVar::AllEqual:
      cfg.p1 = cfg.p2 = cfg.p3 = value;
      return;
  }
  throw std::invalid_argument("set_sweep_value: unknown sweep variable");
}

std::vector<SweepRecord> figure_data(const FigurePreset& preset, int samples) {
  if (samples < 2) throw std::invalid_argument("figure_data: samples must be >= 2");
  std::vector<SweepRecord> records;
  records.reserve(preset.r_values.size() * static_cast<std::size_t>(samples));
  for (double r : preset.r_values) {
    for (int k = 0; k < samples; ++k) {
      const double v = static_cast<double>(k) / (samples - 1);
      ScenarioConfig cfg{preset.scenario, preset.coupling, r, preset.p1, preset.p2, preset.p3};
      set_sweep_value(cfg, preset.sweep, v);
      records.push_back({cfg.id, cfg.coupling, cfg.r, cfg.p1, cfg.p2, cfg.p3,
                         concurrence_of(cfg)});
    }
  }
  return records;
}

const char* to_string(ScenarioId id) {
  switch (id) {
    case ScenarioId::S1: return "S1";
    case ScenarioId::S2: return "S2";
    case ScenarioId::S3: return "S3";
  }
  return "?";
}

const char* to_string(Coupling c) {
  return c == Coupling::Multilocal ? "multilocal" : "global";
}

const char* to_string(SweepVar v) {
  switch (v) {
    case SweepVar::P1: return "p1";
    case SweepVar::P2: return "p2";
    case SweepVar::P3: return "p3";
    case SweepVar::AllEqual: return "p";
  }
  return "?";
}

ScenarioId scenario_from_string(const std::string& s) {
  if (s == "S1") return ScenarioId::S1;
  if (s == "S2") return ScenarioId::S2;
  if (s == "S3") return ScenarioId::S3;
  throw std::invalid_argument("unknown scenario '" + s + "' (valid: S1, S2, S3)");
}

Coupling coupling_from_string(const std::string& s) {
  if (s == "multilocal") return Coupling::Multilocal;
  if (s == "global") return Coupling::Global;
  throw std::invalid_argument("unknown coupling '" + s + "' (valid: multilocal, global)");
}

SweepVar sweep_var_from_string(const std::string& s) {
  if (s == "p1") return SweepVar::P1;
  if (s == "p2") return SweepVar::P2;
  if (s == "p3") return SweepVar::P3;
  if (s == "p") return SweepVar::AllEqual;
  throw std::invalid_argument("unknown sweep variable '" + s + "' (valid: p1, p2, p3, p)");
}

}  // namespace unruhsim
