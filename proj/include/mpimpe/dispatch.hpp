#pragma once
// Battery scheduling that minimises the peak power exchanged with the public
// grid. Each rolling-horizon window is one linear program over the variables
//
//   ch_t  charging from surplus generation        0 <= ch_t <= sg_t
//   ds_t  discharging for local consumption       0 <= ds_t <= rl_t
//   dg_t  discharging into the grid               dg_t >= 0
//   s_t   stored energy, MWh                      soc_min*C <= s_t <= soc_max*C
//   p     peak exchange, MW
//
// minimising (1 - l1 - l2) p - l1 Σ ds_t + l2 Σ dg_t subject to
//
//   s_t = s_{t-1} + (ch_t - ds_t - dg_t) dt
//   rl_t - ds_t <= p
//   sg_t - ch_t + dg_t <= p
//
// There are no power limits and no conversion losses.

#include <cstddef>
#include <span>
#include <vector>

#include "mpimpe/lp.hpp"
#include "mpimpe/profiles.hpp"

namespace mpimpe {

struct BatterySpec {
    double capacity_mwh = 0.0;
    double soc_min_frac = 0.1;
    double soc_max_frac = 0.9;
    double initial_soc_frac = 0.5;

    double soc_min() const { return soc_min_frac * capacity_mwh; }
    double soc_max() const { return soc_max_frac * capacity_mwh; }
    double initial_soc() const { return initial_soc_frac * capacity_mwh; }
    void validate() const;
};

struct DispatchConfig {
    double lambda1 = 1e-3;
    double lambda2 = 1e-6;
    double control_horizon_h = 24.0;
    double prediction_horizon_h = 144.0;
    int window_anchor_hour = 9;
    lp::SolveOptions solver{};

    double window_hours() const { return control_horizon_h + prediction_horizon_h; }
    void validate() const;
};

// Variable layout of a window program with n steps.
struct WindowLayout {
    std::size_t steps = 0;
    std::size_t ch(std::size_t t) const { return 4 * t; }
    std::size_t ds(std::size_t t) const { return 4 * t + 1; }
    std::size_t dg(std::size_t t) const { return 4 * t + 2; }
    std::size_t soc(std::size_t t) const { return 4 * t + 3; }
    std::size_t p_max() const { return 4 * steps; }
};

struct WindowSolution {
    double p_max = 0.0;
    std::vector<double> ch, ds, dg, soc;
};

struct WindowRecord {
    std::size_t start = 0;      // first step of the window
    std::size_t steps = 0;      // steps optimised
    std::size_t committed = 0;  // steps kept
    double p_max = 0.0;
};

struct DispatchSolution {
    std::vector<double> ch, ds, dg, soc;
    std::vector<WindowRecord> windows;
    double mpi = 0.0;
    double mpe = 0.0;

    double grid_interaction() const { return mpi > mpe ? mpi : mpe; }
};

lp::LinearProgram build_window_lp(std::span<const double> rl, std::span<const double> sg,
                                  double dt, const BatterySpec& battery,
                                  const DispatchConfig& cfg, double s_start);

// Builds and solves one window; throws Error(SolverFailure) if the solver
// does not reach optimality.
WindowSolution solve_window(std::span<const double> rl, std::span<const double> sg, double dt,
                            const BatterySpec& battery, const DispatchConfig& cfg, double s_start);

// Windows start at the first anchor hour (a leading partial block before it
// forms its own window), span control + prediction hours and commit the
// control block. The window that reaches the end of the data commits all of
// its steps.
DispatchSolution rolling_horizon(const NetLoadDecomposition& decomp, const BatterySpec& battery,
                                 const DispatchConfig& cfg);

struct MpiMpe {
    double mpi = 0.0;
    double mpe = 0.0;
};

// MPI = max(rl - ds), MPE = max(sg - ch + dg), both clamped at zero.
MpiMpe extract_mpi_mpe(const DispatchSolution& sol, const NetLoadDecomposition& decomp);

// Steps in the leading block before the first anchor (0 when the data
// starts on an anchor).
std::size_t leading_block_steps(Timestamp start, double dt, int anchor_hour);

}  // namespace mpimpe
