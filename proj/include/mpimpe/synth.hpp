#pragma once
// Deterministic synthetic community load and per-unit PV profiles.
//
// load(t) = base + daily_amp·cos(2π(h - peak_hour)/24)
//                + seasonal_amp·cos(2π(d - seasonal_peak_day)/365.25)
// pv(t)   = (clearsky + seasonal_amp·cos(2π(d - 172)/365.25))
//           · sin(π(h - sunrise)/day_length) · cloud(t)
//
// with h the local hour and d the fractional day of year at the interval
// midpoint. Day length varies sinusoidally around the June solstice. The cloud
// factor interpolates seeded knots in [0.3, 1.0] every three hours.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mpimpe/profiles.hpp"

namespace mpimpe::synth {

struct SynthSpec {
    std::size_t days = 365;
    double dt = 1.0;
    Timestamp start = Timestamp::from_civil(2017, 1, 1);

    double load_base_mw = 22.0;
    double load_daily_amp_mw = 8.0;
    double load_seasonal_amp_mw = 6.0;
    double load_peak_hour = 18.0;
    double load_seasonal_peak_day = 15.0;

    double pv_clearsky_peak_pu = 0.8;
    double pv_seasonal_amp_pu = 0.15;
    double day_length_mean_h = 12.2;
    double day_length_amp_h = 4.0;
    std::uint64_t cloud_seed = 1;

    void validate() const;
};

inline constexpr double kCloudMin = 0.3;
inline constexpr double kCloudMax = 1.0;

// Winter-peaking community with strongly seasonal PV: evening peaks after
// sunset in January.
SynthSpec winter_evening_peak();
// Summer-peaking community with mid-afternoon peaks and flatter PV seasonality.
SynthSpec summer_afternoon_peak();

std::vector<std::string> preset_names();
std::optional<SynthSpec> preset(std::string_view name);

std::pair<LoadProfile, PvUnitProfile> generate(const SynthSpec& spec);

}  // namespace mpimpe::synth
