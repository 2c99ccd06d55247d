#pragma once
// PV-only analysis: annual maxima of residual load and surplus generation,
// net-load duration curves and the static feed-in cap.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mpimpe/profiles.hpp"

namespace mpimpe {

struct Case1Metrics {
    double mrl = 0.0;  // MW
    double msg = 0.0;  // MW
    std::size_t mrl_time_index = 0;
    std::size_t msg_time_index = 0;
};

struct DurationCurve {
    std::vector<double> sorted_net_load;  // descending, MW
    double dt = 1.0;
};

struct CurtailmentResult {
    double cap = 0.0;               // MW feed-in limit
    double curtailed_energy = 0.0;  // MWh
    double fraction_of_reference = 0.0;
};

inline constexpr double kDefaultCurtailFraction = 0.05;
inline constexpr double kCurtailCapTolerance = 1e-6;

// Energy the curtailment budget is a fraction of.
enum class CurtailBasis { PvGeneration, Surplus, Demand };

const char* to_string(CurtailBasis basis) noexcept;
std::optional<CurtailBasis> parse_curtail_basis(std::string_view text);

struct CurtailPolicy {
    double fraction = kDefaultCurtailFraction;
    CurtailBasis basis = CurtailBasis::PvGeneration;
};

double curtail_reference_energy(CurtailBasis basis, const TimeSeries& load, const TimeSeries& pv,
                                const NetLoadDecomposition& decomp);

Case1Metrics case1_metrics(const NetLoadDecomposition& decomp);
DurationCurve duration_curve(const NetLoadDecomposition& decomp);

// Smallest cap whose curtailed energy Σ max(0, sg - cap)·dt stays within
// fraction × reference_energy. Bisection on [0, MSG].
CurtailmentResult curtailment_cap(const NetLoadDecomposition& decomp, double reference_energy,
                                  double fraction);

// Cap from the policy applied to the surplus; nullopt when the reference
// energy is zero (nothing to curtail against).
std::optional<CurtailmentResult> curtail(NetLoadDecomposition& decomp, const TimeSeries& load, const TimeSeries& pv,
                                         const CurtailPolicy& policy);

// Surplus replaced by min(sg, cap); residual load untouched.
NetLoadDecomposition apply_curtailment(const NetLoadDecomposition& decomp, double cap);

}  // namespace mpimpe
