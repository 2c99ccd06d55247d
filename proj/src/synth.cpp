#include "mpimpe/synth.hpp"

#include <cmath>
#include <algorithm>
#include <numbers>

#include "mpimpe/error.hpp"

namespace mpimpe::synth {

namespace {

constexpr double kYearDays = 365.25;
constexpr double kSolsticeDay = 172.0;
constexpr double kKnotHours = 3.0;

// splitmix64; fully specified so output is identical on every platform.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double knot_value(std::uint64_t seed, std::int64_t knot) {
    const std::uint64_t bits = mix(seed ^ mix(static_cast<std::uint64_t>(knot)));
    const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
    return kCloudMin + (kCloudMax - kCloudMin) * u;
}

double seasonal(double day, double peak_day) {
    return std::cos(2.0 * std::numbers::pi * (day - peak_day) / kYearDays);
}

}  // namespace

void SynthSpec::validate() const {
    auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidSpec, what); };
    if (days == 0) fail("days must be positive");
    if (dt != kQuarterHour && dt != kHour) fail("dt must be 0.25 h or 1 h");
    if (static_cast<double>(days) * 24.0 > kMaxSpanHours) fail("at most one year can be generated");
    if (load_daily_amp_mw < 0.0 || load_seasonal_amp_mw < 0.0) fail("amplitudes must be >= 0");
    if (load_base_mw - load_daily_amp_mw - load_seasonal_amp_mw < 0.0) {
        fail("load base must exceed the sum of amplitudes");
    }
    if (load_peak_hour < 0.0 || load_peak_hour >= 24.0) fail("peak hour must be in [0, 24)");
    if (pv_seasonal_amp_pu < 0.0 || pv_clearsky_peak_pu - pv_seasonal_amp_pu < 0.0 ||
        pv_clearsky_peak_pu + pv_seasonal_amp_pu > kMaxUnitPv) {
        fail("PV peak must stay within [0, 1.2] per unit");
    }
    if (day_length_amp_h < 0.0 || day_length_mean_h - day_length_amp_h <= 0.0 ||
        day_length_mean_h + day_length_amp_h >= 24.0) {
        fail("day length must stay within (0, 24) h");
    }
}

SynthSpec winter_evening_peak() { return SynthSpec{}; }

SynthSpec summer_afternoon_peak() {
    SynthSpec s;
    s.load_peak_hour = 15.0;
    s.load_seasonal_peak_day = 228.0;
    s.pv_clearsky_peak_pu = 0.75;
    s.pv_seasonal_amp_pu = 0.05;
    s.day_length_mean_h = 12.1;
    s.day_length_amp_h = 2.4;
    return s;
}

std::vector<std::string> preset_names() { return {"winter-evening-peak", "summer-afternoon-peak"}; }

std::optional<SynthSpec> preset(std::string_view name) {
    if (name == "winter-evening-peak") return winter_evening_peak();
    if (name == "summer-afternoon-peak") return summer_afternoon_peak();
    return std::nullopt;
}

std::pair<LoadProfile, PvUnitProfile> generate(const SynthSpec& spec) {
    spec.validate();
    const auto steps = static_cast<std::size_t>(std::llround(static_cast<double>(spec.days) * 24.0 / spec.dt));
    const double start_hour = spec.start.seconds_of_day() / 3600.0;
    const double start_day = spec.start.day_of_year();
    std::vector<double> load(steps);
    std::vector<double> pv(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double elapsed = (static_cast<double>(i) + 0.5) * spec.dt;  // hours since start
        const double clock = start_hour + elapsed;
        const double hour = std::fmod(clock, 24.0);
        const double day = start_day + clock / 24.0;

        load[i] = spec.load_base_mw +
                  spec.load_daily_amp_mw *
                      std::cos(2.0 * std::numbers::pi * (hour - spec.load_peak_hour) / 24.0) +
                  spec.load_seasonal_amp_mw * seasonal(day, spec.load_seasonal_peak_day);
        load[i] = std::max(load[i], 0.0);

        const double day_length =
            spec.day_length_mean_h + spec.day_length_amp_h * seasonal(day, kSolsticeDay);
        const double sunrise = 12.0 - 0.5 * day_length;
        double envelope = 0.0;
        if (hour > sunrise && hour < sunrise + day_length) {
            envelope = std::sin(std::numbers::pi * (hour - sunrise) / day_length);
        }
        const double peak = spec.pv_clearsky_peak_pu + spec.pv_seasonal_amp_pu * seasonal(day, kSolsticeDay);

        const double knot_pos = elapsed / kKnotHours;
        const auto knot = static_cast<std::int64_t>(std::floor(knot_pos));
        const double frac = knot_pos - static_cast<double>(knot);
        const double cloud = (1.0 - frac) * knot_value(spec.cloud_seed, knot) +
                             frac * knot_value(spec.cloud_seed, knot + 1);
        pv[i] = std::clamp(peak * envelope * cloud, 0.0, kMaxUnitPv);
    }
    return {LoadProfile(TimeSeries(spec.start, spec.dt, std::move(load))),
            PvUnitProfile(TimeSeries(spec.start, spec.dt, std::move(pv)))};
}

}  // namespace mpimpe::synth
