#include "mpimpe/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include "mpimpe/metrics.hpp"

namespace mpimpe::sweep {

std::vector<double> default_pv_sizes() {
    std::vector<double> sizes;
    for (int p = 0; p <= 480; p += 10) sizes.push_back(p);
    return sizes;
}

std::vector<double> default_battery_ratios() { return {0.0, 1.5, 2.5, 3.5, 4.5}; }

void SweepSpec::validate() const {
    if (pv_sizes_pct.empty()) throw Error(ErrorCode::InvalidArgument, "no PV sizes given");
    if (battery_ratios.empty()) throw Error(ErrorCode::InvalidArgument, "no battery ratios given");
    for (std::size_t i = 0; i < pv_sizes_pct.size(); ++i) {
        if (!(pv_sizes_pct[i] >= 0.0) || !std::isfinite(pv_sizes_pct[i])) {
            throw Error(ErrorCode::InvalidArgument, "PV sizes must be finite and >= 0");
        }
        if (i > 0 && !(pv_sizes_pct[i] > pv_sizes_pct[i - 1])) {
            throw Error(ErrorCode::InvalidArgument, "PV sizes must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i < battery_ratios.size(); ++i) {
        if (!(battery_ratios[i] >= 0.0) || !std::isfinite(battery_ratios[i])) {
            throw Error(ErrorCode::InvalidArgument, "battery ratios must be finite and >= 0");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (battery_ratios[j] == battery_ratios[i]) {
                throw Error(ErrorCode::InvalidArgument, "battery ratios must be distinct");
            }
        }
    }
    if (curtailment && !(curtailment->fraction >= 0.0 && curtailment->fraction < 1.0)) {
        throw Error(ErrorCode::InvalidFraction, "curtailment fraction must be in [0, 1)");
    }
    if (!(refine_resolution_pct > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "refinement resolution must be > 0");
    }
}

std::vector<MpiMpePoint> SweepResult::curve(double battery_ratio) const {
    std::vector<MpiMpePoint> out;
    for (const auto& p : points) {
        if (p.battery_ratio == battery_ratio) out.push_back(p);
    }
    return out;
}

double battery_capacity(double peak_load_mw, double pv_size_pct, double ratio) {
    return peak_load_mw * pv_size_pct / 100.0 * ratio;
}

MpiMpePoint evaluate_scenario(const LoadProfile& load, const PvUnitProfile& unit, double pv_size_pct,
                              double battery_ratio, const std::optional<CurtailPolicy>& curtailment,
                              const DispatchConfig& cfg, const BatterySpec& battery) {
    const auto pv = pv_generation(unit, PvSize::from_percent(load.peak(), pv_size_pct));
    auto decomp = decompose(load.series(), pv);

    MpiMpePoint point;
    point.pv_size_pct = pv_size_pct;
    point.battery_ratio = battery_ratio;
    point.battery_mwh = battery_capacity(load.peak(), pv_size_pct, battery_ratio);

    if (curtailment) {
        if (const auto cut = curtail(decomp, load.series(), pv, *curtailment)) point.curtail_cap = cut->cap;
    }

    if (point.battery_mwh == 0.0) {
        const auto m = case1_metrics(decomp);
        point.mpi = m.mrl;
        point.mpe = m.msg;
    } else {
        BatterySpec b = battery;
        b.capacity_mwh = point.battery_mwh;
        const auto sol = rolling_horizon(decomp, b, cfg);
        point.mpi = sol.mpi;
        point.mpe = sol.mpe;
    }
    point.grid_interaction = std::max(point.mpi, point.mpe);
    return point;
}

namespace {

struct Scenario {
    double size;
    double ratio;
};

class Runner {
public:
    Runner(const LoadProfile& load, const PvUnitProfile& unit, const SweepSpec& spec,
           const DispatchConfig& cfg, const SweepOptions& options)
        : load_(load), unit_(unit), spec_(spec), cfg_(cfg), options_(options) {}

    // Returns the point or records the failure.
    std::optional<MpiMpePoint> run(const Scenario& s) {
        std::optional<MpiMpePoint> point;
        std::optional<ScenarioFailure> failure;
        try {
            point = evaluate_scenario(load_, unit_, s.size, s.ratio, spec_.curtailment, cfg_, options_.battery);
        } catch (const Error& e) {
            failure = ScenarioFailure{s.size, s.ratio, e.code(), e.window(), e.what()};
        } catch (const std::exception& e) {
            failure = ScenarioFailure{s.size, s.ratio, ErrorCode::SolverFailure, std::nullopt, e.what()};
        }
        std::lock_guard lock(mutex_);
        if (failure) failures_.push_back(*failure);
        ++done_;
        if (options_.progress) options_.progress({s.size, s.ratio, point.has_value(), done_, total_});
        return point;
    }

    void add_total(std::size_t n) {
        std::lock_guard lock(mutex_);
        total_ += n;
    }

    std::vector<ScenarioFailure> take_failures() { return std::move(failures_); }

private:
    const LoadProfile& load_;
    const PvUnitProfile& unit_;
    const SweepSpec& spec_;
    const DispatchConfig& cfg_;
    const SweepOptions& options_;
    std::mutex mutex_;
    std::vector<ScenarioFailure> failures_;
    std::size_t done_ = 0;
    std::size_t total_ = 0;
};

template <typename Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn&& fn) {
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    }
}

double snap(double value, double resolution) { return std::round(value / resolution) * resolution; }

// Bisection between the last size where MPI still dominates and the first
// where MPE does.
std::vector<MpiMpePoint> refine_intersection(std::vector<MpiMpePoint> curve, double ratio, double resolution,
                                             Runner& runner) {
    std::vector<MpiMpePoint> added;
    std::size_t k = 1;
    while (k < curve.size() && !(curve[k - 1].mpi >= curve[k - 1].mpe && curve[k].mpi < curve[k].mpe)) ++k;
    if (k >= curve.size()) return added;
    MpiMpePoint lo = curve[k - 1];
    MpiMpePoint hi = curve[k];
    while (hi.pv_size_pct - lo.pv_size_pct > resolution * (1.0 + 1e-9)) {
        const double mid = snap(0.5 * (lo.pv_size_pct + hi.pv_size_pct), resolution);
        if (!(mid > lo.pv_size_pct && mid < hi.pv_size_pct)) break;
        runner.add_total(1);
        const auto p = runner.run({mid, ratio});
        if (!p) break;
        added.push_back(*p);
        (p->mpi >= p->mpe ? lo : hi) = *p;
    }
    return added;
}

}  // namespace

SweepResult run_sweep(const LoadProfile& load, const PvUnitProfile& unit, const SweepSpec& spec,
                      const DispatchConfig& cfg, const SweepOptions& options) {
    spec.validate();
    cfg.validate();
    if (!load.series().aligned_with(unit.series())) {
        throw Error(ErrorCode::MisalignedSeries, "load and PV profiles are not aligned");
    }

    std::vector<Scenario> grid;
    for (double r : spec.battery_ratios) {
        for (double s : spec.pv_sizes_pct) grid.push_back({s, r});
    }
    Runner runner(load, unit, spec, cfg, options);
    runner.add_total(grid.size());
    std::vector<std::optional<MpiMpePoint>> slots(grid.size());
    parallel_for(grid.size(), options.jobs, [&](std::size_t i) { slots[i] = runner.run(grid[i]); });

    std::vector<std::vector<MpiMpePoint>> by_ratio(spec.battery_ratios.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (slots[i]) by_ratio[i / spec.pv_sizes_pct.size()].push_back(*slots[i]);
    }

    if (spec.refine) {
        std::vector<std::vector<MpiMpePoint>> extra(by_ratio.size());
        parallel_for(by_ratio.size(), options.jobs, [&](std::size_t r) {
            extra[r] = refine_intersection(by_ratio[r], spec.battery_ratios[r], spec.refine_resolution_pct, runner);
        });
        for (std::size_t r = 0; r < by_ratio.size(); ++r) {
            by_ratio[r].insert(by_ratio[r].end(), extra[r].begin(), extra[r].end());
            std::sort(by_ratio[r].begin(), by_ratio[r].end(),
                      [](const auto& a, const auto& b) { return a.pv_size_pct < b.pv_size_pct; });
        }
    }

    SweepResult result;
    for (auto& c : by_ratio) result.points.insert(result.points.end(), c.begin(), c.end());
    result.failures = runner.take_failures();
    std::map<double, std::size_t> ratio_rank;
    for (std::size_t r = 0; r < spec.battery_ratios.size(); ++r) ratio_rank[spec.battery_ratios[r]] = r;
    std::sort(result.failures.begin(), result.failures.end(), [&](const auto& a, const auto& b) {
        const auto ra = ratio_rank[a.battery_ratio], rb = ratio_rank[b.battery_ratio];
        return ra != rb ? ra < rb : a.pv_size_pct < b.pv_size_pct;
    });
    return result;
}

AvoidedTransmission avoided_transmission(std::span<const MpiMpePoint> curve) {
    if (curve.empty()) throw Error(ErrorCode::EmptyCurve, "curve has no points");
    std::vector<MpiMpePoint> pts(curve.begin(), curve.end());
    std::stable_sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.pv_size_pct < b.pv_size_pct; });
    if (pts.front().pv_size_pct != 0.0) {
        throw Error(ErrorCode::MissingReferencePoint, "curve has no point at 0 % PV");
    }

    AvoidedTransmission at;
    at.reference_mpi = pts.front().grid_interaction;
    at.min_grid_interaction = at.reference_mpi;
    for (const auto& p : pts) {
        if (p.grid_interaction < at.min_grid_interaction) {
            at.min_grid_interaction = p.grid_interaction;
            at.argmin_pv_pct = p.pv_size_pct;
        }
    }
    at.degree_mw = std::max(0.0, at.reference_mpi - at.min_grid_interaction);
    at.degree_pct = at.reference_mpi > 0.0 ? 100.0 * at.degree_mw / at.reference_mpi : 0.0;

    // Interaction within this band of the reference counts as not exceeding it.
    const double limit = at.reference_mpi + 1e-7 * std::max(1.0, at.reference_mpi);
    at.range_pct = pts.back().pv_size_pct;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        if (pts[k].grid_interaction <= limit) continue;
        const auto& a = pts[k - 1];
        const auto& b = pts[k];
        double crossing = b.pv_size_pct;
        for (auto member : {&MpiMpePoint::mpi, &MpiMpePoint::mpe}) {
            const double v0 = a.*member, v1 = b.*member;
            if (v1 <= limit || v0 > limit) continue;
            const double t = std::clamp((at.reference_mpi - v0) / (v1 - v0), 0.0, 1.0);
            crossing = std::min(crossing, a.pv_size_pct + t * (b.pv_size_pct - a.pv_size_pct));
        }
        at.range_pct = crossing;
        break;
    }
    return at;
}

}  // namespace mpimpe::sweep
