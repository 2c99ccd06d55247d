#pragma once
// Scenario grid over PV sizes and battery ratios, and the avoided-transmission
// metrics read off one ratio's MPI-MPE curve.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpimpe/dispatch.hpp"
#include "mpimpe/error.hpp"
#include "mpimpe/metrics.hpp"
#include "mpimpe/profiles.hpp"

namespace mpimpe::sweep {

std::vector<double> default_pv_sizes();     // 0, 10, ..., 480
std::vector<double> default_battery_ratios();  // 0, 1.5, 2.5, 3.5, 4.5

struct SweepSpec {
    std::vector<double> pv_sizes_pct = default_pv_sizes();
    std::vector<double> battery_ratios = default_battery_ratios();  // kWh per kW_PV
    std::optional<CurtailPolicy> curtailment;
    // Bisect on PV size around the MPI/MPE intersection of each ratio.
    bool refine = false;
    double refine_resolution_pct = 1.0;

    void validate() const;
};

struct MpiMpePoint {
    double pv_size_pct = 0.0;
    double battery_ratio = 0.0;
    double battery_mwh = 0.0;
    double mpi = 0.0;
    double mpe = 0.0;
    double grid_interaction = 0.0;
    std::optional<double> curtail_cap;
};

struct ScenarioFailure {
    double pv_size_pct = 0.0;
    double battery_ratio = 0.0;
    ErrorCode code = ErrorCode::SolverFailure;
    std::optional<std::size_t> window;
    std::string message;
};

struct SweepResult {
    std::vector<MpiMpePoint> points;  // by ratio order, then PV size
    std::vector<ScenarioFailure> failures;

    std::vector<MpiMpePoint> curve(double battery_ratio) const;
};

struct AvoidedTransmission {
    double reference_mpi = 0.0;
    double range_pct = 0.0;
    double degree_mw = 0.0;
    double degree_pct = 0.0;
    double argmin_pv_pct = 0.0;
    double min_grid_interaction = 0.0;
};

struct ScenarioEvent {
    double pv_size_pct;
    double battery_ratio;
    bool ok;
    std::size_t done;
    std::size_t total;  // grid scenarios; refinement adds to both
};

struct SweepOptions {
    std::size_t jobs = 1;
    BatterySpec battery;  // SOC fractions; capacity is set per scenario
    std::function<void(const ScenarioEvent&)> progress;
};

// MWh = MW × percent/100 × kWh/kW.
double battery_capacity(double peak_load_mw, double pv_size_pct, double ratio);

// One scenario: scale PV, decompose, optionally curtail, then dispatch (or
// read the PV-only maxima directly when the battery is empty).
MpiMpePoint evaluate_scenario(const LoadProfile& load, const PvUnitProfile& unit, double pv_size_pct,
                              double battery_ratio, const std::optional<CurtailPolicy>& curtailment,
                              const DispatchConfig& cfg, const BatterySpec& battery = {});

SweepResult run_sweep(const LoadProfile& load, const PvUnitProfile& unit, const SweepSpec& spec,
                      const DispatchConfig& cfg, const SweepOptions& options = {});

// Throws EmptyCurve / MissingReferencePoint.
AvoidedTransmission avoided_transmission(std::span<const MpiMpePoint> curve);

}  // namespace mpimpe::sweep
