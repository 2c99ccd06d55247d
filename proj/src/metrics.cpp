#include "mpimpe/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mpimpe/error.hpp"
#include "mpimpe/kernels.hpp"

namespace mpimpe {

Case1Metrics case1_metrics(const NetLoadDecomposition& decomp) {
    const auto& k = kernels::active();
    const auto rl = k.max(decomp.rl().values());
    const auto sg = k.max(decomp.sg().values());
    return {rl.value, sg.value, rl.index, sg.index};
}

DurationCurve duration_curve(const NetLoadDecomposition& decomp) {
    DurationCurve curve{decomp.net(), decomp.dt()};
    std::sort(curve.sorted_net_load.begin(), curve.sorted_net_load.end(), std::greater<>());
    return curve;
}

CurtailmentResult curtailment_cap(const NetLoadDecomposition& decomp, double reference_energy,
                                  double fraction) {
    if (!(fraction >= 0.0 && fraction < 1.0)) {
        throw Error(ErrorCode::InvalidFraction, "curtailment fraction must lie in [0, 1)");
    }
    if (!(reference_energy > 0.0)) {
        throw Error(ErrorCode::InvalidFraction, "curtailment reference energy must be positive");
    }
    const auto& k = kernels::active();
    const auto sg = decomp.sg().values();
    const double dt = decomp.dt();
    const double budget = fraction * reference_energy;
    const auto curtailed = [&](double cap) { return k.sum_excess(sg, cap) * dt; };

    const double msg = k.max(sg).value;
    double hi = msg;  // always within budget
    if (fraction > 0.0 && msg > 0.0) {
        double lo = 0.0;
        if (curtailed(0.0) <= budget) {
            hi = 0.0;
        } else {
            // lo stays over budget, hi within it.
            while (hi - lo > kCurtailCapTolerance) {
                const double mid = 0.5 * (lo + hi);
                if (curtailed(mid) <= budget) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
        }
    }
    const double energy = curtailed(hi);
    return {hi, energy, energy / reference_energy};
}

const char* to_string(CurtailBasis basis) noexcept {
    switch (basis) {
        case CurtailBasis::PvGeneration: return "pv";
        case CurtailBasis::Surplus: return "surplus";
        case CurtailBasis::Demand: return "demand";
    }
    return "pv";
}

std::optional<CurtailBasis> parse_curtail_basis(std::string_view text) {
    for (auto b : {CurtailBasis::PvGeneration, CurtailBasis::Surplus, CurtailBasis::Demand}) {
        if (text == to_string(b)) return b;
    }
    return std::nullopt;
}

double curtail_reference_energy(CurtailBasis basis, const TimeSeries& load, const TimeSeries& pv,
                                const NetLoadDecomposition& decomp) {
    switch (basis) {
        case CurtailBasis::PvGeneration: return pv.energy();
        case CurtailBasis::Surplus: return decomp.sg().energy();
        case CurtailBasis::Demand: return load.energy();
    }
    return pv.energy();
}

std::optional<CurtailmentResult> curtail(NetLoadDecomposition& decomp, const TimeSeries& load, const TimeSeries& pv,
                                         const CurtailPolicy& policy) {
    const double reference = curtail_reference_energy(policy.basis, load, pv, decomp);
    if (!(reference > 0.0)) return std::nullopt;
    auto cut = curtailment_cap(decomp, reference, policy.fraction);
    decomp = apply_curtailment(decomp, cut.cap);
    return cut;
}

NetLoadDecomposition apply_curtailment(const NetLoadDecomposition& decomp, double cap) {
    if (!(cap >= 0.0)) throw Error(ErrorCode::InvalidArgument, "feed-in cap must be >= 0");
    const auto sg = decomp.sg().values();
    std::vector<double> capped(sg.begin(), sg.end());
    for (double& v : capped) v = std::min(v, cap);
    return NetLoadDecomposition(decomp.rl(), TimeSeries(decomp.start(), decomp.dt(), std::move(capped)));
}

}  // namespace mpimpe
