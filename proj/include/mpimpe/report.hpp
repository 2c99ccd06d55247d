#pragma once
// Text serialisation of results. Numbers carry six decimals (CSV) or are
// rounded to six decimals (JSON) so reruns compare byte for byte.

#include <optional>
#include <string>
#include <vector>

#include "mpimpe/dispatch.hpp"
#include "mpimpe/metrics.hpp"
#include "mpimpe/sweep.hpp"

namespace mpimpe::report {

double round6(double value);

// rank,net_load_mw with 1-based ranks.
std::string duration_curve_csv(const DurationCurve& curve);

std::string case1_json(const NetLoadDecomposition& decomp, const Case1Metrics& metrics, double pv_size_pct,
                       const std::optional<CurtailmentResult>& curtailment);

// timestamp,rl,sg,ch,ds,dg,soc,import,export
std::string dispatch_csv(const NetLoadDecomposition& decomp, const DispatchSolution& sol);

std::string dispatch_summary_json(const NetLoadDecomposition& decomp, const DispatchSolution& sol,
                                  const BatterySpec& battery, double pv_size_pct, double battery_ratio,
                                  const std::optional<CurtailmentResult>& curtailment);

// pv_size_pct,battery_ratio,battery_mwh,mpi_mw,mpe_mw,grid_interaction_mw
std::string diagram_csv(const std::vector<sweep::MpiMpePoint>& points);

std::string sweep_summary_json(const sweep::SweepResult& result, const std::vector<double>& ratios);

}  // namespace mpimpe::report
