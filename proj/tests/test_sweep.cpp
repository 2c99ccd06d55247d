#include <gtest/gtest.h>

#include <cmath>

#include "mpimpe/error.hpp"
#include "mpimpe/metrics.hpp"
#include "mpimpe/sweep.hpp"
#include "mpimpe/synth.hpp"

using namespace mpimpe;
using sweep::MpiMpePoint;

namespace {

MpiMpePoint pt(double size, double mpi, double mpe) {
    return {size, 0.0, 0.0, mpi, mpe, std::max(mpi, mpe), std::nullopt};
}

std::pair<LoadProfile, PvUnitProfile> profiles(std::string_view preset, std::size_t days, Timestamp start) {
    auto spec = *synth::preset(preset);
    spec.days = days;
    spec.start = start;
    return synth::generate(spec);
}

const Timestamp kAugust = Timestamp::from_civil(2017, 8, 1);

}  // namespace

TEST(BatteryCapacity, ReferenceArithmetic) {
    EXPECT_NEAR(sweep::battery_capacity(36.22, 426, 4.5), 694.0, 0.5);
    EXPECT_NEAR(sweep::battery_capacity(36.22, 387, 4.5), 631.0, 0.5);
    EXPECT_EQ(sweep::battery_capacity(36.22, 387, 0.0), 0.0);
}

TEST(SweepSpec, Validation) {
    sweep::SweepSpec s;
    EXPECT_NO_THROW(s.validate());
    EXPECT_EQ(s.pv_sizes_pct.size(), 49u);
    EXPECT_EQ(s.battery_ratios, (std::vector<double>{0, 1.5, 2.5, 3.5, 4.5}));
    s.pv_sizes_pct = {0, 20, 10};
    EXPECT_THROW(s.validate(), Error);
    s = {};
    s.battery_ratios = {-1};
    EXPECT_THROW(s.validate(), Error);
    s = {};
    s.curtailment = CurtailPolicy{1.0};
    EXPECT_THROW(s.validate(), Error);
}

TEST(AvoidedTransmission, CrossingCurve) {
    const std::vector<MpiMpePoint> c{pt(0, 10, 0), pt(100, 8, 7), pt(200, 6, 12)};
    const auto at = sweep::avoided_transmission(c);
    EXPECT_EQ(at.reference_mpi, 10.0);
    EXPECT_EQ(at.min_grid_interaction, 8.0);
    EXPECT_EQ(at.argmin_pv_pct, 100.0);
    EXPECT_DOUBLE_EQ(at.degree_mw, 2.0);
    EXPECT_DOUBLE_EQ(at.degree_pct, 20.0);
    EXPECT_NEAR(at.range_pct, 160.0, 1e-9);
}

TEST(AvoidedTransmission, FlatMpiGivesNoDegree) {
    const std::vector<MpiMpePoint> c{pt(0, 10, 0), pt(100, 10, 5), pt(200, 10, 15), pt(300, 10, 25)};
    const auto at = sweep::avoided_transmission(c);
    EXPECT_EQ(at.degree_mw, 0.0);
    EXPECT_EQ(at.argmin_pv_pct, 0.0);
    EXPECT_NEAR(at.range_pct, 150.0, 1e-9);
}

TEST(AvoidedTransmission, EdgeCases) {
    const std::vector<MpiMpePoint> only{pt(0, 10, 0)};
    auto at = sweep::avoided_transmission(only);
    EXPECT_EQ(at.degree_mw, 0.0);
    EXPECT_EQ(at.range_pct, 0.0);
    // Never exceeding the reference: range extends to the largest size.
    const std::vector<MpiMpePoint> below{pt(0, 10, 0), pt(50, 9, 4), pt(100, 9, 9)};
    at = sweep::avoided_transmission(below);
    EXPECT_EQ(at.range_pct, 100.0);
    // Unsorted input is accepted.
    const std::vector<MpiMpePoint> shuffled{pt(200, 6, 12), pt(0, 10, 0), pt(100, 8, 7)};
    EXPECT_NEAR(sweep::avoided_transmission(shuffled).range_pct, 160.0, 1e-9);

    auto code = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Io;
    };
    EXPECT_EQ(code([] { sweep::avoided_transmission(std::vector<MpiMpePoint>{}); }), ErrorCode::EmptyCurve);
    EXPECT_EQ(code([] { sweep::avoided_transmission(std::vector<MpiMpePoint>{pt(10, 1, 1)}); }),
              ErrorCode::MissingReferencePoint);
}

TEST(RunSweep, RatioZeroIsCaseOne) {
    const auto [load, unit] = profiles("summer-afternoon-peak", 14, kAugust);
    sweep::SweepSpec spec;
    spec.pv_sizes_pct = {0, 50, 100, 200, 400};
    spec.battery_ratios = {0};
    const auto r = sweep::run_sweep(load, unit, spec, {});
    ASSERT_EQ(r.points.size(), 5u);
    EXPECT_TRUE(r.failures.empty());
    EXPECT_EQ(r.points[0].mpi, load.peak());
    EXPECT_EQ(r.points[0].mpe, 0.0);
    for (std::size_t i = 0; i < 5; ++i) {
        const auto m = case1_metrics(
            decompose(load.series(), pv_generation(unit, PvSize::from_percent(load.peak(), spec.pv_sizes_pct[i]))));
        EXPECT_EQ(r.points[i].mpi, m.mrl);
        EXPECT_EQ(r.points[i].mpe, m.msg);
        if (i > 0) {
            EXPECT_LE(r.points[i].mpi, r.points[i - 1].mpi);
            EXPECT_GE(r.points[i].mpe, r.points[i - 1].mpe);
        }
    }
}

TEST(RunSweep, ParallelMatchesSerial) {
    const auto [load, unit] = profiles("summer-afternoon-peak", 9, kAugust);
    sweep::SweepSpec spec;
    spec.pv_sizes_pct = {0, 100, 200, 300};
    spec.battery_ratios = {0, 2.5};
    std::size_t events = 0;
    sweep::SweepOptions serial;
    serial.progress = [&](const sweep::ScenarioEvent& e) {
        ++events;
        EXPECT_EQ(e.total, 8u);
    };
    const auto a = sweep::run_sweep(load, unit, spec, {}, serial);
    EXPECT_EQ(events, 8u);
    sweep::SweepOptions parallel;
    parallel.jobs = 3;
    const auto b = sweep::run_sweep(load, unit, spec, {}, parallel);
    ASSERT_EQ(a.points.size(), b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        EXPECT_EQ(a.points[i].pv_size_pct, b.points[i].pv_size_pct);
        EXPECT_EQ(a.points[i].battery_ratio, b.points[i].battery_ratio);
        EXPECT_EQ(a.points[i].mpi, b.points[i].mpi);
        EXPECT_EQ(a.points[i].mpe, b.points[i].mpe);
    }
    EXPECT_EQ(a.curve(2.5).size(), 4u);
}

TEST(RunSweep, FailuresAreReportedPerScenario) {
    const auto [load, unit] = profiles("summer-afternoon-peak", 9, kAugust);
    sweep::SweepSpec spec;
    spec.pv_sizes_pct = {0, 100, 200};
    spec.battery_ratios = {0, 1.5};
    DispatchConfig cfg;
    cfg.solver.max_iterations = 1;
    const auto r = sweep::run_sweep(load, unit, spec, cfg, {.jobs = 2});
    // Empty batteries never reach the solver.
    EXPECT_EQ(r.points.size(), 4u);
    ASSERT_EQ(r.failures.size(), 2u);
    EXPECT_EQ(r.failures[0].pv_size_pct, 100.0);
    EXPECT_EQ(r.failures[1].pv_size_pct, 200.0);
    for (const auto& f : r.failures) {
        EXPECT_EQ(f.battery_ratio, 1.5);
        EXPECT_EQ(f.code, ErrorCode::SolverFailure);
        EXPECT_TRUE(f.window.has_value());
    }
}

TEST(RunSweep, CurtailmentLowersExportOnly) {
    const auto [load, unit] = profiles("summer-afternoon-peak", 14, kAugust);
    sweep::SweepSpec spec;
    spec.pv_sizes_pct = {0, 100, 200, 300, 400};
    spec.battery_ratios = {0};
    const auto plain = sweep::run_sweep(load, unit, spec, {});
    spec.curtailment = CurtailPolicy{0.05};
    const auto cut = sweep::run_sweep(load, unit, spec, {});
    for (std::size_t i = 0; i < plain.points.size(); ++i) {
        EXPECT_EQ(cut.points[i].mpi, plain.points[i].mpi);
        EXPECT_LE(cut.points[i].mpe, plain.points[i].mpe);
        EXPECT_EQ(cut.points[i].curtail_cap.has_value(), i > 0);
    }
    const auto a = sweep::avoided_transmission(plain.points);
    const auto b = sweep::avoided_transmission(cut.points);
    EXPECT_GE(b.range_pct, a.range_pct);
    EXPECT_GE(b.degree_mw, a.degree_mw);
}

TEST(RunSweep, CurtailmentBasisSetsBudget) {
    const auto [load, unit] = profiles("summer-afternoon-peak", 14, kAugust);
    const double pct = 300;
    const auto pv = pv_generation(unit, PvSize::from_percent(load.peak(), pct));
    const auto decomp = decompose(load.series(), pv);
    const std::pair<CurtailBasis, double> cases[] = {{CurtailBasis::PvGeneration, pv.energy()},
                                                     {CurtailBasis::Surplus, decomp.sg().energy()},
                                                     {CurtailBasis::Demand, load.series().energy()}};
    for (const auto& [basis, reference] : cases) {
        const auto point = sweep::evaluate_scenario(load, unit, pct, 0, CurtailPolicy{0.05, basis}, {}, {});
        ASSERT_TRUE(point.curtail_cap.has_value());
        EXPECT_NEAR(*point.curtail_cap, curtailment_cap(decomp, reference, 0.05).cap, 1e-12) << to_string(basis);
    }
    // Surplus is the smallest reference, so its cap is the highest.
    const auto by_pv = sweep::evaluate_scenario(load, unit, pct, 0, CurtailPolicy{0.05}, {}, {});
    const auto by_sg = sweep::evaluate_scenario(load, unit, pct, 0, CurtailPolicy{0.05, CurtailBasis::Surplus}, {}, {});
    EXPECT_GE(*by_sg.curtail_cap, *by_pv.curtail_cap);
    EXPECT_GE(by_sg.mpe, by_pv.mpe);
}

TEST(RunSweep, LargerBatteryNeverRaisesInteraction) {
    const auto [load, unit] = profiles("summer-afternoon-peak", 7, kAugust);
    sweep::SweepSpec spec;
    spec.pv_sizes_pct = {100, 250};
    spec.battery_ratios = {0, 1.5, 4.5};
    const auto r = sweep::run_sweep(load, unit, spec, {});
    for (double size : spec.pv_sizes_pct) {
        double last = 1e300;
        for (const auto& p : r.points) {
            if (p.pv_size_pct != size) continue;
            EXPECT_LE(p.grid_interaction, last + 1e-7);
            last = p.grid_interaction;
        }
    }
}

TEST(RunSweep, RefinementReachesResolution) {
    const auto [load, unit] = profiles("summer-afternoon-peak", 14, kAugust);
    sweep::SweepSpec spec;
    spec.pv_sizes_pct = {0, 40, 80, 120, 160, 200, 240};
    spec.battery_ratios = {0};
    spec.refine = true;
    const auto r = sweep::run_sweep(load, unit, spec, {});
    ASSERT_GT(r.points.size(), spec.pv_sizes_pct.size());
    // Adjacent points bracketing the intersection are at most 1 % apart.
    bool found = false;
    for (std::size_t k = 1; k < r.points.size(); ++k) {
        const auto& a = r.points[k - 1];
        const auto& b = r.points[k];
        EXPECT_LT(a.pv_size_pct, b.pv_size_pct);
        if (a.mpi >= a.mpe && b.mpi < b.mpe) {
            found = true;
            EXPECT_LE(b.pv_size_pct - a.pv_size_pct, 1.0 + 1e-9);
            EXPECT_EQ(std::round(a.pv_size_pct), a.pv_size_pct);
        }
    }
    EXPECT_TRUE(found);
}
