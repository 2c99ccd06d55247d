#include <gtest/gtest.h>

#include <algorithm>
#include <cstring>

#include "mpimpe/error.hpp"
#include "mpimpe/metrics.hpp"
#include "mpimpe/synth.hpp"

using namespace mpimpe;

namespace {

bool bitwise_equal(std::span<const double> a, std::span<const double> b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST(Synth, Validation) {
    synth::SynthSpec s;
    EXPECT_NO_THROW(s.validate());
    s.days = 0;
    EXPECT_THROW(s.validate(), Error);
    s = {};
    s.days = 367;
    EXPECT_THROW(s.validate(), Error);
    s = {};
    s.dt = 0.5;
    EXPECT_THROW(s.validate(), Error);
    s = {};
    s.load_base_mw = 5;
    s.load_daily_amp_mw = 4;
    s.load_seasonal_amp_mw = 4;
    EXPECT_THROW(s.validate(), Error);
    s = {};
    s.pv_clearsky_peak_pu = 1.1;
    s.pv_seasonal_amp_pu = 0.2;
    EXPECT_THROW(s.validate(), Error);
}

TEST(Synth, Deterministic) {
    auto spec = synth::winter_evening_peak();
    spec.days = 30;
    const auto [l1, p1] = synth::generate(spec);
    const auto [l2, p2] = synth::generate(spec);
    EXPECT_TRUE(bitwise_equal(l1.series().values(), l2.series().values()));
    EXPECT_TRUE(bitwise_equal(p1.series().values(), p2.series().values()));
    spec.cloud_seed = 2;
    const auto [l3, p3] = synth::generate(spec);
    EXPECT_TRUE(bitwise_equal(l1.series().values(), l3.series().values()));
    EXPECT_FALSE(bitwise_equal(p1.series().values(), p3.series().values()));
}

TEST(Synth, FlatSpecGivesConstantLoad) {
    synth::SynthSpec spec;
    spec.days = 3;
    spec.load_daily_amp_mw = 0;
    spec.load_seasonal_amp_mw = 0;
    const auto [load, pv] = synth::generate(spec);
    for (double v : load.series().values()) EXPECT_EQ(v, spec.load_base_mw);
    // PV is zero at midnight and positive at noon.
    EXPECT_EQ(pv.series()[0], 0.0);
    EXPECT_GT(pv.series()[12], 0.0);
}

TEST(Synth, RangesAndShape) {
    for (const auto& name : synth::preset_names()) {
        auto spec = *synth::preset(name);
        spec.dt = 0.25;
        const auto [load, pv] = synth::generate(spec);
        EXPECT_EQ(load.series().size(), 365u * 96u);
        const auto lv = load.series().values();
        const auto pvv = pv.series().values();
        EXPECT_GE(*std::min_element(lv.begin(), lv.end()), 0.0);
        EXPECT_GE(*std::min_element(pvv.begin(), pvv.end()), 0.0);
        EXPECT_LE(*std::max_element(pvv.begin(), pvv.end()), 1.2);
        const double yield = pv.unit_annual_energy();
        EXPECT_GT(yield, 700.0) << name;
        EXPECT_LT(yield, 2000.0) << name;
    }
    EXPECT_FALSE(synth::preset("nope").has_value());
}

TEST(Synth, WinterPresetPeaksAfterSunset) {
    const auto [load, pv] = synth::generate(synth::winter_evening_peak());
    const auto d = decompose(load.series(), pv_generation(pv, PvSize::from_percent(load.peak(), 0)));
    const auto base = case1_metrics(d);
    // Peak import is set by a winter evening with no PV, so it barely moves.
    for (double pct : {100.0, 200.0, 300.0}) {
        const auto dp = decompose(load.series(), pv_generation(pv, PvSize::from_percent(load.peak(), pct)));
        EXPECT_NEAR(case1_metrics(dp).mrl, base.mrl, 1e-9 + 0.01 * base.mrl) << pct;
    }
    const auto t = load.series().time_at(base.mrl_time_index);
    EXPECT_GE(t.seconds_of_day() / 3600, 16);
    EXPECT_TRUE(t.day_of_year() < 60 || t.day_of_year() > 330);
}

TEST(Synth, SummerPresetPvLowersPeakImport) {
    const auto [load, pv] = synth::generate(synth::summer_afternoon_peak());
    const auto mrl = [&](double pct) {
        return case1_metrics(decompose(load.series(), pv_generation(pv, PvSize::from_percent(load.peak(), pct)))).mrl;
    };
    EXPECT_LT(mrl(150), mrl(0) - 1e-3);
}
