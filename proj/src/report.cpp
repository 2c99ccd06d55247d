#include "mpimpe/report.hpp"

#include <cmath>

#include <json.hpp>

namespace mpimpe::report {

using nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json curtailment_json(const std::optional<CurtailmentResult>& c) {
    if (!c) return nullptr;
    return {{"cap_mw", round6(c->cap)},
            {"curtailed_mwh", round6(c->curtailed_energy)},
            {"fraction_of_reference", round6(c->fraction_of_reference)}};
}

void append_row(std::string& out, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) out += ',';
        out += format_fixed(v);
        first = false;
    }
    out += '\n';
}

}  // namespace

double round6(double value) {
    const double r = std::round(value * 1e6) / 1e6;
    return r == 0.0 ? 0.0 : r;
}

std::string duration_curve_csv(const DurationCurve& curve) {
    std::string out = "rank,net_load_mw\n";
    for (std::size_t i = 0; i < curve.sorted_net_load.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += format_fixed(curve.sorted_net_load[i]);
        out += '\n';
    }
    return out;
}

std::string case1_json(const NetLoadDecomposition& decomp, const Case1Metrics& metrics, double pv_size_pct,
                       const std::optional<CurtailmentResult>& curtailment) {
    ordered_json j;
    j["pv_size_pct"] = round6(pv_size_pct);
    j["mrl_mw"] = round6(metrics.mrl);
    j["mrl_time"] = decomp.rl().time_at(metrics.mrl_time_index).iso();
    j["msg_mw"] = round6(metrics.msg);
    j["msg_time"] = decomp.sg().time_at(metrics.msg_time_index).iso();
    j["mpi_mw"] = round6(metrics.mrl);
    j["mpe_mw"] = round6(metrics.msg);
    j["grid_interaction_mw"] = round6(std::max(metrics.mrl, metrics.msg));
    j["residual_load_mwh"] = round6(decomp.rl().energy());
    j["surplus_mwh"] = round6(decomp.sg().energy());
    j["steps"] = decomp.size();
    j["dt_h"] = decomp.dt();
    j["curtailment"] = curtailment_json(curtailment);
    return dump(j);
}

std::string dispatch_csv(const NetLoadDecomposition& decomp, const DispatchSolution& sol) {
    std::string out = "timestamp,rl,sg,ch,ds,dg,soc,import,export\n";
    out.reserve(out.size() + decomp.size() * 96);
    for (std::size_t t = 0; t < decomp.size(); ++t) {
        out += decomp.rl().time_at(t).iso();
        out += ',';
        const double rl = decomp.rl()[t], sg = decomp.sg()[t];
        append_row(out, {rl, sg, sol.ch[t], sol.ds[t], sol.dg[t], sol.soc[t], std::max(0.0, rl - sol.ds[t]),
                         std::max(0.0, sg - sol.ch[t] + sol.dg[t])});
    }
    return out;
}

std::string dispatch_summary_json(const NetLoadDecomposition& decomp, const DispatchSolution& sol,
                                  const BatterySpec& battery, double pv_size_pct, double battery_ratio,
                                  const std::optional<CurtailmentResult>& curtailment) {
    ordered_json j;
    j["pv_size_pct"] = round6(pv_size_pct);
    j["battery_ratio"] = round6(battery_ratio);
    j["battery_mwh"] = round6(battery.capacity_mwh);
    j["mpi_mw"] = round6(sol.mpi);
    j["mpe_mw"] = round6(sol.mpe);
    j["grid_interaction_mw"] = round6(sol.grid_interaction());
    j["curtailment"] = curtailment_json(curtailment);
    ordered_json windows = ordered_json::array();
    for (std::size_t k = 0; k < sol.windows.size(); ++k) {
        const auto& w = sol.windows[k];
        windows.push_back({{"index", k},
                           {"start", decomp.rl().time_at(w.start).iso()},
                           {"steps", w.steps},
                           {"committed", w.committed},
                           {"p_max_mw", round6(w.p_max)}});
    }
    j["windows"] = std::move(windows);
    return dump(j);
}

std::string diagram_csv(const std::vector<sweep::MpiMpePoint>& points) {
    std::string out = "pv_size_pct,battery_ratio,battery_mwh,mpi_mw,mpe_mw,grid_interaction_mw\n";
    for (const auto& p : points) {
        append_row(out, {p.pv_size_pct, p.battery_ratio, p.battery_mwh, p.mpi, p.mpe, p.grid_interaction});
    }
    return out;
}

std::string sweep_summary_json(const sweep::SweepResult& result, const std::vector<double>& ratios) {
    ordered_json j;
    ordered_json curves = ordered_json::array();
    for (double r : ratios) {
        ordered_json c;
        c["battery_ratio"] = round6(r);
        const auto curve = result.curve(r);
        c["points"] = curve.size();
        try {
            const auto at = sweep::avoided_transmission(curve);
            c["avoided_transmission"] = {{"reference_mpi_mw", round6(at.reference_mpi)},
                                         {"range_pct", round6(at.range_pct)},
                                         {"degree_mw", round6(at.degree_mw)},
                                         {"degree_pct", round6(at.degree_pct)},
                                         {"argmin_pv_pct", round6(at.argmin_pv_pct)},
                                         {"min_grid_interaction_mw", round6(at.min_grid_interaction)}};
        } catch (const Error& e) {
            c["avoided_transmission"] = nullptr;
            c["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
        }
        curves.push_back(std::move(c));
    }
    j["curves"] = std::move(curves);
    ordered_json failures = ordered_json::array();
    for (const auto& f : result.failures) {
        ordered_json fj{{"pv_size_pct", round6(f.pv_size_pct)},
                        {"battery_ratio", round6(f.battery_ratio)},
                        {"code", to_string(f.code)},
                        {"message", f.message}};
        fj["window"] = f.window ? ordered_json(*f.window) : ordered_json(nullptr);
        failures.push_back(std::move(fj));
    }
    j["scenarios_ok"] = result.points.size();
    j["scenarios_failed"] = result.failures.size();
    j["failures"] = std::move(failures);
    return dump(j);
}

}  // namespace mpimpe::report
