#include "mpimpe/dispatch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mpimpe/error.hpp"
#include "mpimpe/kernels.hpp"

namespace mpimpe {

namespace {

std::size_t hours_to_steps(double hours, double dt) {
    const double steps = hours / dt;
    const double rounded = std::round(steps);
    if (std::abs(steps - rounded) > 1e-9 || rounded < 1.0) {
        throw Error(ErrorCode::InvalidArgument,
                    "horizon of " + format_fixed(hours, 2) + " h is not a whole number of steps");
    }
    return static_cast<std::size_t>(rounded);
}

}  // namespace

void BatterySpec::validate() const {
    if (!(capacity_mwh >= 0.0) || !std::isfinite(capacity_mwh)) {
        throw Error(ErrorCode::InvalidArgument, "battery capacity must be >= 0");
    }
    if (!(soc_min_frac >= 0.0 && soc_min_frac < soc_max_frac && soc_max_frac <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "SOC bounds must satisfy 0 <= min < max <= 1");
    }
    if (!(initial_soc_frac >= soc_min_frac && initial_soc_frac <= soc_max_frac)) {
        throw Error(ErrorCode::InvalidArgument, "initial SOC must lie within the SOC bounds");
    }
}

void DispatchConfig::validate() const {
    if (!(lambda1 >= 0.0 && lambda1 <= 1.0 && lambda2 >= 0.0 && lambda2 <= 1.0 &&
          lambda1 + lambda2 < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "objective weights must satisfy 0 <= l1, l2 and l1 + l2 < 1");
    }
    if (!(control_horizon_h > 0.0) || !(prediction_horizon_h >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "horizons must be positive");
    }
    if (window_anchor_hour < 0 || window_anchor_hour > 23) {
        throw Error(ErrorCode::InvalidArgument, "anchor hour must be in 0..23");
    }
}

lp::LinearProgram build_window_lp(std::span<const double> rl, std::span<const double> sg,
                                  double dt, const BatterySpec& battery,
                                  const DispatchConfig& cfg, double s_start) {
    using lp::Relation;
    battery.validate();
    cfg.validate();
    if (rl.size() != sg.size() || rl.empty()) {
        throw Error(ErrorCode::MisalignedSeries, "window series must be non-empty and aligned");
    }
    const double lo = battery.soc_min();
    const double hi = battery.soc_max();
    const double tol = 1e-9 * std::max(1.0, battery.capacity_mwh);
    if (s_start < lo - tol || s_start > hi + tol) {
        throw Error(ErrorCode::InvalidArgument, "window start SOC outside the SOC bounds");
    }
    s_start = std::clamp(s_start, lo, hi);

    const std::size_t n = rl.size();
    const WindowLayout layout{n};
    const double w_peak = 1.0 - cfg.lambda1 - cfg.lambda2;
    const double dg_cap = (hi - lo) / dt;
    double zero_action_peak = 0.0;
    for (std::size_t t = 0; t < n; ++t) zero_action_peak = std::max({zero_action_peak, rl[t], sg[t]});

    lp::LinearProgram prog;
    for (std::size_t t = 0; t < n; ++t) {
        const std::string k = std::to_string(t);
        prog.add_variable(0.0, {0.0, sg[t]}, "ch_" + k);
        prog.add_variable(-cfg.lambda1, {0.0, rl[t]}, "ds_" + k);
        prog.add_variable(cfg.lambda2, {0.0, dg_cap}, "dg_" + k);
        prog.add_variable(0.0, {lo, hi}, "soc_" + k);
    }
    prog.add_variable(w_peak, {0.0, zero_action_peak}, "p_max");

    for (std::size_t t = 0; t < n; ++t) {
        const std::string k = std::to_string(t);
        std::vector<lp::Term> balance{{layout.soc(t), 1.0},
                                      {layout.ch(t), -dt},
                                      {layout.ds(t), dt},
                                      {layout.dg(t), dt}};
        if (t > 0) balance.push_back({layout.soc(t - 1), -1.0});
        prog.add_constraint(std::move(balance), Relation::Equal, t == 0 ? s_start : 0.0, "balance_" + k);
        prog.add_constraint({{layout.ds(t), 1.0}, {layout.p_max(), 1.0}}, Relation::GreaterEqual,
                            rl[t], "import_" + k);
        prog.add_constraint({{layout.ch(t), -1.0}, {layout.dg(t), 1.0}, {layout.p_max(), -1.0}},
                            Relation::LessEqual, -sg[t], "export_" + k);
    }
    return prog;
}

WindowSolution solve_window(std::span<const double> rl, std::span<const double> sg, double dt,
                            const BatterySpec& battery, const DispatchConfig& cfg, double s_start) {
    const auto prog = build_window_lp(rl, sg, dt, battery, cfg, s_start);
    const auto sol = lp::solve(prog, cfg.solver);
    if (sol.status != lp::Status::Optimal) {
        // Zero action is always feasible and the peak is bounded, so anything
        // else is a numerical failure.
        throw Error(ErrorCode::SolverFailure,
                    std::string("window program ended with status ") + lp::to_string(sol.status));
    }
    const WindowLayout layout{rl.size()};
    WindowSolution out;
    out.p_max = sol.x[layout.p_max()];
    out.ch.resize(rl.size());
    out.ds.resize(rl.size());
    out.dg.resize(rl.size());
    out.soc.resize(rl.size());
    for (std::size_t t = 0; t < rl.size(); ++t) {
        out.ch[t] = sol.x[layout.ch(t)];
        out.ds[t] = sol.x[layout.ds(t)];
        out.dg[t] = sol.x[layout.dg(t)];
        out.soc[t] = sol.x[layout.soc(t)];
    }
    return out;
}

std::size_t leading_block_steps(Timestamp start, double dt, int anchor_hour) {
    const std::int64_t day = 86400;
    const std::int64_t offset =
        ((static_cast<std::int64_t>(anchor_hour) * 3600 - start.seconds_of_day()) % day + day) % day;
    const auto step = static_cast<std::int64_t>(std::llround(dt * 3600.0));
    return static_cast<std::size_t>((offset + step - 1) / step);
}

DispatchSolution rolling_horizon(const NetLoadDecomposition& decomp, const BatterySpec& battery,
                                 const DispatchConfig& cfg) {
    battery.validate();
    cfg.validate();
    const double dt = decomp.dt();
    const std::size_t total = decomp.size();
    const std::size_t control = hours_to_steps(cfg.control_horizon_h, dt);
    const std::size_t window = hours_to_steps(cfg.window_hours(), dt);
    const auto rl = decomp.rl().values();
    const auto sg = decomp.sg().values();

    DispatchSolution out;
    out.ch.resize(total);
    out.ds.resize(total);
    out.dg.resize(total);
    out.soc.resize(total);

    std::size_t pos = 0;
    std::size_t block = leading_block_steps(decomp.start(), dt, cfg.window_anchor_hour);
    if (block == 0) block = control;
    double s_start = battery.initial_soc();
    while (pos < total) {
        const std::size_t len = std::min(window, total - pos);
        const bool last = pos + len == total;
        const std::size_t commit = last ? len : std::min(block, len);
        WindowSolution ws;
        try {
            ws = solve_window(rl.subspan(pos, len), sg.subspan(pos, len), dt, battery, cfg, s_start);
        } catch (const Error& e) {
            throw Error(e.code(),
                        "window " + std::to_string(out.windows.size()) + " (step " +
                            std::to_string(pos) + "): " + e.what(),
                        std::nullopt, out.windows.size());
        }
        std::copy_n(ws.ch.begin(), commit, out.ch.begin() + pos);
        std::copy_n(ws.ds.begin(), commit, out.ds.begin() + pos);
        std::copy_n(ws.dg.begin(), commit, out.dg.begin() + pos);
        std::copy_n(ws.soc.begin(), commit, out.soc.begin() + pos);
        out.windows.push_back({pos, len, commit, ws.p_max});
        s_start = ws.soc[commit - 1];
        pos += commit;
        block = control;
    }
    const auto m = extract_mpi_mpe(out, decomp);
    out.mpi = m.mpi;
    out.mpe = m.mpe;
    return out;
}

MpiMpe extract_mpi_mpe(const DispatchSolution& sol, const NetLoadDecomposition& decomp) {
    const std::size_t n = decomp.size();
    if (sol.ch.size() != n || sol.ds.size() != n || sol.dg.size() != n) {
        throw Error(ErrorCode::MisalignedSeries, "dispatch series do not match the decomposition");
    }
    const auto& k = kernels::active();
    const double mpi = k.max_combined(decomp.rl().values(), sol.ds, {}).value;
    const double mpe = k.max_combined(decomp.sg().values(), sol.ch, sol.dg).value;
    return {std::max(mpi, 0.0), std::max(mpe, 0.0)};
}

}  // namespace mpimpe
