#include "mpimpe/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "mpimpe/dispatch.hpp"
#include "mpimpe/error.hpp"
#include "mpimpe/kernels.hpp"
#include "mpimpe/metrics.hpp"
#include "mpimpe/profiles.hpp"
#include "mpimpe/report.hpp"
#include "mpimpe/sweep.hpp"
#include "mpimpe/synth.hpp"

#ifndef MPIMPE_VERSION
#define MPIMPE_VERSION "0.0.0"
#endif

namespace mpimpe::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr const char* kTool = "mpimpe";

// An input file failed validation; keeps the library error and names the file.
struct InputError {
    std::string file;
    Error error;
};

struct InputOptions {
    std::string load_path;
    std::string pv_path;
    std::string timestamp_column = "timestamp";
    std::string load_column = "value";
    std::string pv_column = "value";
    std::string resolution = "auto";
    std::optional<double> scale_peak;
    std::string out_dir;
};

struct CurtailOptions {
    bool enabled = false;
    CurtailPolicy policy;
};

struct BatteryOptions {
    double soc_min = 0.1;
    double soc_max = 0.9;
    double soc_initial = 0.5;
    DispatchConfig cfg;
    std::size_t max_iterations = 0;

    DispatchConfig config() const {
        DispatchConfig c = cfg;
        c.solver.max_iterations = max_iterations;
        return c;
    }
    BatterySpec battery(double capacity) const { return {capacity, soc_min, soc_max, soc_initial}; }
};

struct Inputs {
    LoadProfile load;
    PvUnitProfile unit;
};

class Diagnostics {
public:
    Diagnostics(std::ostream& err, const bool& json) : err_(err), json_(json) {}

    void error(const std::string& code, const std::string& message, const std::string& file = {},
               std::optional<std::size_t> row = std::nullopt, std::optional<std::size_t> window = std::nullopt) {
        emit("error", code, message, file, row, window);
    }
    void warning(const std::string& code, const std::string& message,
                 std::optional<std::size_t> window = std::nullopt) {
        emit("warning", code, message, {}, std::nullopt, window);
    }
    void progress(const sweep::ScenarioEvent& e) {
        if (json_) {
            ordered_json j{{"level", "progress"},         {"done", e.done},
                           {"total", e.total},            {"pv_size_pct", e.pv_size_pct},
                           {"battery_ratio", e.battery_ratio}, {"ok", e.ok}};
            err_ << j.dump() << '\n';
        } else {
            err_ << '[' << e.done << '/' << e.total << "] pv " << format_fixed(e.pv_size_pct, 1) << " % ratio "
                 << format_fixed(e.battery_ratio, 2) << (e.ok ? " ok" : " FAILED") << '\n';
        }
    }

private:
    void emit(const char* level, const std::string& code, const std::string& message, const std::string& file,
              std::optional<std::size_t> row, std::optional<std::size_t> window) {
        if (json_) {
            ordered_json j{{"level", level}, {"code", code}, {"message", message}};
            j["file"] = file.empty() ? ordered_json(nullptr) : ordered_json(file);
            j["row"] = row ? ordered_json(*row) : ordered_json(nullptr);
            j["window"] = window ? ordered_json(*window) : ordered_json(nullptr);
            err_ << j.dump() << '\n';
            return;
        }
        err_ << level << ": ";
        if (!file.empty()) err_ << file << ": ";
        err_ << message << " [" << code << "]\n";
    }

    std::ostream& err_;
    const bool& json_;
};

double parse_resolution(const std::string& text) {
    if (text == "auto") return kInferDt;
    if (text == "1" || text == "1.0" || text == "60min") return 1.0;
    if (text == "0.25" || text == "15min") return 0.25;
    throw Error(ErrorCode::IncompatibleResolution, "--resolution must be auto, 0.25 or 1");
}

TimeSeries read_series(const std::string& path, const std::string& ts_col, const std::string& val_col) {
    try {
        return ingest_csv(path, CsvSchema{ts_col, val_col, false}, kInferDt);
    } catch (const Error& e) {
        throw InputError{path, e};
    }
}

Inputs load_inputs(const InputOptions& in) {
    auto load_series = read_series(in.load_path, in.timestamp_column, in.load_column);
    auto pv_series = read_series(in.pv_path, in.timestamp_column, in.pv_column);
    double dt = parse_resolution(in.resolution);
    if (dt == kInferDt) dt = load_series.dt();
    if (load_series.dt() != dt) load_series = resample_to(load_series, dt);
    if (pv_series.dt() != dt) pv_series = resample_to(pv_series, dt);

    std::optional<LoadProfile> load;
    try {
        load.emplace(std::move(load_series));
    } catch (const Error& e) {
        throw InputError{in.load_path, e};
    }
    std::optional<PvUnitProfile> unit;
    try {
        unit.emplace(std::move(pv_series));
    } catch (const Error& e) {
        throw InputError{in.pv_path, e};
    }
    if (in.scale_peak) load = scale_to_peak(*load, *in.scale_peak);
    if (!load->series().aligned_with(unit->series())) {
        throw Error(ErrorCode::MisalignedSeries, "load and PV profiles differ in start, interval or length");
    }
    return {std::move(*load), std::move(*unit)};
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
    out << text;
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
}

fs::path prepare_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw Error(ErrorCode::Io, "cannot create output directory " + dir);
    return fs::path(dir);
}

ordered_json input_entry(const std::string& role, const std::string& path) {
    return {{"role", role}, {"path", path}, {"sha256", sha256_file(path)}, {"bytes", fs::file_size(path)}};
}

void write_manifest(const fs::path& dir, const std::string& command, ordered_json inputs, ordered_json config,
                    const std::vector<std::string>& outputs) {
    ordered_json j;
    j["tool"] = kTool;
    j["version"] = MPIMPE_VERSION;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["config"] = std::move(config);
    ordered_json files = ordered_json::array();
    for (const auto& name : outputs) files.push_back({{"path", name}, {"sha256", sha256_file(dir / name)}});
    j["outputs"] = std::move(files);
    write_file(dir / "manifest.json", j.dump(2) + "\n");
}

ordered_json input_config(const InputOptions& in, const Inputs& data) {
    ordered_json j;
    j["timestamp_column"] = in.timestamp_column;
    j["load_column"] = in.load_column;
    j["pv_column"] = in.pv_column;
    j["resolution_h"] = data.load.series().dt();
    j["scale_peak_mw"] = in.scale_peak ? ordered_json(*in.scale_peak) : ordered_json(nullptr);
    j["load_peak_mw"] = report::round6(data.load.peak());
    j["start"] = data.load.series().start().iso();
    j["steps"] = data.load.series().size();
    return j;
}

ordered_json battery_config(const BatteryOptions& b) {
    const auto cfg = b.config();
    return {{"lambda1", cfg.lambda1},
            {"lambda2", cfg.lambda2},
            {"control_hours", cfg.control_horizon_h},
            {"prediction_hours", cfg.prediction_horizon_h},
            {"anchor_hour", cfg.window_anchor_hour},
            {"soc_min_frac", b.soc_min},
            {"soc_max_frac", b.soc_max},
            {"soc_initial_frac", b.soc_initial},
            {"max_iterations", cfg.solver.max_iterations}};
}

ordered_json curtail_config(const CurtailOptions& c) {
    if (!c.enabled) return nullptr;
    return {{"fraction", c.policy.fraction}, {"basis", to_string(c.policy.basis)}};
}

ordered_json inputs_json(const InputOptions& in) {
    return ordered_json::array({input_entry("load", in.load_path), input_entry("pv_unit", in.pv_path)});
}

// Decomposition at the given PV size, curtailed when requested.
std::pair<NetLoadDecomposition, std::optional<CurtailmentResult>> prepare(const Inputs& data, double pv_size_pct,
                                                                            const CurtailOptions& curtail) {
    const auto pv = pv_generation(data.unit, PvSize::from_percent(data.load.peak(), pv_size_pct));
    auto decomp = decompose(data.load.series(), pv);
    std::optional<CurtailmentResult> cut;
    if (curtail.enabled) cut = mpimpe::curtail(decomp, data.load.series(), pv, curtail.policy);
    return {std::move(decomp), cut};
}

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    const auto number = [&](std::string_view s) {
        double v = 0.0;
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
            throw Error(ErrorCode::InvalidArgument, std::string("cannot parse ") + what + " '" + text + "'");
        }
        return v;
    };
    if (text.find(':') != std::string::npos) {
        // start:stop:step, inclusive of stop
        std::vector<double> parts;
        std::string_view rest = text;
        while (true) {
            const auto c = rest.find(':');
            parts.push_back(number(rest.substr(0, c)));
            if (c == std::string_view::npos) break;
            rest.remove_prefix(c + 1);
        }
        if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
            throw Error(ErrorCode::InvalidArgument, std::string(what) + " range must be start:stop:step");
        }
        const auto n = static_cast<std::size_t>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
        for (std::size_t i = 0; i <= n; ++i) out.push_back(parts[0] + static_cast<double>(i) * parts[2]);
        return out;
    }
    std::string_view rest = text;
    while (true) {
        const auto c = rest.find(',');
        out.push_back(number(rest.substr(0, c)));
        if (c == std::string_view::npos) break;
        rest.remove_prefix(c + 1);
    }
    return out;
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("load", in.load_path, "Community load CSV (MW)")->required()->check(CLI::ExistingFile);
    cmd->add_option("pv", in.pv_path, "Per-unit PV CSV (MW per MW_p, within [0, 1.2])")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("-o,--out", in.out_dir, "Output directory (created if missing)")->required();
    cmd->add_option("--timestamp-column", in.timestamp_column, "Timestamp column name in both CSVs")
        ->capture_default_str();
    cmd->add_option("--load-column", in.load_column, "Value column in the load CSV")->capture_default_str();
    cmd->add_option("--pv-column", in.pv_column, "Value column in the PV CSV")->capture_default_str();
    cmd->add_option("--resolution", in.resolution,
                    "Analysis interval in hours: auto (the load file's), 0.25 or 1; inputs are block-averaged "
                    "or repeated to match")
        ->capture_default_str();
    cmd->add_option("--scale-peak", in.scale_peak, "Rescale the load so its peak equals this value (MW)");
}

void add_curtail_options(CLI::App* cmd, CurtailOptions& c) {
    cmd->add_flag("--curtail", c.enabled,
                  "Apply static feed-in curtailment: surplus is capped at the smallest level that curtails at "
                  "most --curtail-fraction of the reference energy");
    cmd->add_option("--curtail-fraction", c.policy.fraction,
                    "Curtailment budget as a fraction of the reference energy; implies --curtail")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 0.999999))
        ->each([&c](const std::string&) { c.enabled = true; });
    cmd->add_option_function<std::string>(
           "--curtail-basis",
           [&c](const std::string& text) {
               c.policy.basis = *parse_curtail_basis(text);
               c.enabled = true;
           },
           "Reference energy of the curtailment budget: pv (PV generation), surplus or demand; implies --curtail")
        ->default_str("pv")
        ->check(CLI::IsMember({"pv", "surplus", "demand"}));
}

void add_battery_options(CLI::App* cmd, BatteryOptions& b) {
    cmd->add_option("--lambda1", b.cfg.lambda1,
                    "Weight l1 on the reward -l1*sum(DS) for serving load from storage in the window objective "
                    "(1-l1-l2)*P - l1*sum(DS) + l2*sum(DG)")
        ->capture_default_str();
    cmd->add_option("--lambda2", b.cfg.lambda2,
                    "Weight l2 on the penalty +l2*sum(DG) for discharging storage into the grid")
        ->capture_default_str();
    cmd->add_option("--control-hours", b.cfg.control_horizon_h,
                    "Control horizon: hours of each window's schedule that are committed")
        ->capture_default_str();
    cmd->add_option("--prediction-hours", b.cfg.prediction_horizon_h,
                    "Prediction horizon: extra look-ahead hours optimised but not committed")
        ->capture_default_str();
    cmd->add_option("--anchor-hour", b.cfg.window_anchor_hour, "Hour of day at which windows start")
        ->capture_default_str();
    cmd->add_option("--soc-min", b.soc_min, "Lower state-of-charge bound as a fraction of capacity")
        ->capture_default_str();
    cmd->add_option("--soc-max", b.soc_max, "Upper state-of-charge bound as a fraction of capacity")
        ->capture_default_str();
    cmd->add_option("--soc-initial", b.soc_initial, "State of charge at the first step, fraction of capacity")
        ->capture_default_str();
    cmd->add_option("--max-iterations", b.max_iterations, "Simplex iteration limit per window (0 = automatic)")
        ->capture_default_str();
}

// --- commands -----------------------------------------------------------------

int cmd_case1(const InputOptions& in, double pv_size_pct, const CurtailOptions& curtail, std::ostream& out) {
    const auto data = load_inputs(in);
    const auto [decomp, cut] = prepare(data, pv_size_pct, curtail);
    const auto m = case1_metrics(decomp);
    const auto dir = prepare_out_dir(in.out_dir);
    write_file(dir / "case1.json", report::case1_json(decomp, m, pv_size_pct, cut));
    write_file(dir / "duration_curve.csv", report::duration_curve_csv(duration_curve(decomp)));
    auto config = input_config(in, data);
    config["pv_size_pct"] = pv_size_pct;
    config["curtailment"] = curtail_config(curtail);
    write_manifest(dir, "case1", inputs_json(in), std::move(config), {"case1.json", "duration_curve.csv"});
    out << "mpi " << format_fixed(m.mrl) << " MW  mpe " << format_fixed(m.msg) << " MW\n";
    return kExitOk;
}

int cmd_dispatch(const InputOptions& in, double pv_size_pct, double ratio, const CurtailOptions& curtail,
                 const BatteryOptions& bopts, std::ostream& out) {
    const auto data = load_inputs(in);
    const auto [decomp, cut] = prepare(data, pv_size_pct, curtail);
    const auto battery = bopts.battery(sweep::battery_capacity(data.load.peak(), pv_size_pct, ratio));
    const auto cfg = bopts.config();
    const auto sol = rolling_horizon(decomp, battery, cfg);
    const auto dir = prepare_out_dir(in.out_dir);
    write_file(dir / "dispatch.csv", report::dispatch_csv(decomp, sol));
    write_file(dir / "summary.json", report::dispatch_summary_json(decomp, sol, battery, pv_size_pct, ratio, cut));
    auto config = input_config(in, data);
    config["pv_size_pct"] = pv_size_pct;
    config["battery_ratio"] = ratio;
    config["battery_mwh"] = report::round6(battery.capacity_mwh);
    config["curtailment"] = curtail_config(curtail);
    config["dispatch"] = battery_config(bopts);
    write_manifest(dir, "dispatch", inputs_json(in), std::move(config), {"dispatch.csv", "summary.json"});
    out << "battery " << format_fixed(battery.capacity_mwh) << " MWh  mpi " << format_fixed(sol.mpi) << " MW  mpe "
        << format_fixed(sol.mpe) << " MW  windows " << sol.windows.size() << '\n';
    return kExitOk;
}

int cmd_sweep(const InputOptions& in, const std::string& sizes, const std::string& ratios,
              const CurtailOptions& curtail, const BatteryOptions& bopts, std::size_t jobs, bool refine,
              double refine_resolution, Diagnostics& diag, std::ostream& out) {
    sweep::SweepSpec spec;
    spec.pv_sizes_pct = parse_list(sizes, "--sizes");
    spec.battery_ratios = parse_list(ratios, "--ratios");
    if (curtail.enabled) spec.curtailment = curtail.policy;
    spec.refine = refine;
    spec.refine_resolution_pct = refine_resolution;
    spec.validate();
    const auto data = load_inputs(in);

    sweep::SweepOptions options;
    options.jobs = jobs;
    options.battery = bopts.battery(0.0);
    options.progress = [&diag](const sweep::ScenarioEvent& e) { diag.progress(e); };
    const auto result = sweep::run_sweep(data.load, data.unit, spec, bopts.config(), options);
    for (const auto& f : result.failures) {
        diag.warning(to_string(f.code),
                     "scenario pv " + format_fixed(f.pv_size_pct, 1) + " % ratio " + format_fixed(f.battery_ratio, 2) +
                         " failed: " + f.message,
                     f.window);
    }

    const auto dir = prepare_out_dir(in.out_dir);
    write_file(dir / "diagram.csv", report::diagram_csv(result.points));
    write_file(dir / "avoided_transmission.json", report::sweep_summary_json(result, spec.battery_ratios));
    auto config = input_config(in, data);
    config["pv_sizes_pct"] = spec.pv_sizes_pct;
    config["battery_ratios"] = spec.battery_ratios;
    config["curtailment"] = curtail_config(curtail);
    config["refine"] = refine;
    config["refine_resolution_pct"] = refine_resolution;
    config["dispatch"] = battery_config(bopts);
    // Worker count does not change results, so it stays out of the manifest.
    write_manifest(dir, "sweep", inputs_json(in), std::move(config), {"diagram.csv", "avoided_transmission.json"});

    out << result.points.size() << " scenarios ok, " << result.failures.size() << " failed\n";
    for (double r : spec.battery_ratios) {
        const auto curve = result.curve(r);
        if (curve.empty() || curve.front().pv_size_pct != 0.0) continue;
        const auto at = sweep::avoided_transmission(curve);
        out << "ratio " << format_fixed(r, 2) << ": reference " << format_fixed(at.reference_mpi, 3) << " MW, degree "
            << format_fixed(at.degree_mw, 3) << " MW (" << format_fixed(at.degree_pct, 2) << " %) at "
            << format_fixed(at.argmin_pv_pct, 1) << " %, range " << format_fixed(at.range_pct, 1) << " %\n";
    }
    return result.points.empty() ? kExitSweepFailed : kExitOk;
}

int cmd_synth(const std::string& preset_name, std::size_t days, std::uint64_t seed, double dt,
              const std::string& start, const std::string& out_dir, std::ostream& out) {
    auto spec = *synth::preset(preset_name);
    spec.days = days;
    spec.cloud_seed = seed;
    spec.dt = dt;
    spec.start = Timestamp::parse(start);
    const auto [load, unit] = synth::generate(spec);
    const auto dir = prepare_out_dir(out_dir);
    write_file(dir / "load.csv", format_csv(load.series()));
    write_file(dir / "pv_unit.csv", format_csv(unit.series()));
    ordered_json config{{"preset", preset_name}, {"days", days},        {"seed", seed},
                        {"resolution_h", dt},    {"start", spec.start.iso()}};
    write_manifest(dir, "synth", ordered_json::array(), std::move(config), {"load.csv", "pv_unit.csv"});
    out << "load peak " << format_fixed(load.peak(), 3) << " MW, PV yield " << format_fixed(unit.unit_annual_energy(), 3)
        << " MWh/MW_p over " << days << " days\n";
    return kExitOk;
}

}  // namespace

std::string sha256_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
        throw Error(ErrorCode::Io, "SHA-256 unavailable");
    }
    std::vector<char> buf(1 << 16);
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), digest, &len);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Avoided-transmission analysis: maximum power import/export (MPI/MPE) of a community with PV "
                 "and battery storage"};
    app.set_version_flag("--version", std::string(kTool) + " " + MPIMPE_VERSION);
    app.require_subcommand(1);
    bool json_errors = false;
    app.add_flag("--json-errors", json_errors, "Write diagnostics to stderr as JSON lines");
    Diagnostics diag(err, json_errors);

    InputOptions in;
    CurtailOptions curtail;
    BatteryOptions bopts;
    double pv_size_pct = 0.0;
    double ratio = 0.0;

    auto* case1 = app.add_subcommand("case1", "PV only: peak import/export and the net-load duration curve");
    add_input_options(case1, in);
    case1->add_option("--pv-size-pct", pv_size_pct, "PV capacity in percent of the community peak load")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_curtail_options(case1, curtail);

    auto* dispatch = app.add_subcommand("dispatch", "PV and battery: rolling-horizon peak-minimising dispatch");
    add_input_options(dispatch, in);
    dispatch->add_option("--pv-size-pct", pv_size_pct, "PV capacity in percent of the community peak load")
        ->required()
        ->check(CLI::NonNegativeNumber);
    dispatch->add_option("--battery-ratio", ratio,
                         "Storage per PV capacity in kWh/kW_PV; capacity = peak x pv% x ratio (MWh)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_curtail_options(dispatch, curtail);
    add_battery_options(dispatch, bopts);

    std::string sizes = "0:480:10";
    std::string ratios = "0,1.5,2.5,3.5,4.5";
    std::size_t jobs = 1;
    bool refine = false;
    double refine_resolution = 1.0;
    auto* sweep_cmd = app.add_subcommand("sweep", "MPI-MPE diagram over PV sizes and battery ratios");
    add_input_options(sweep_cmd, in);
    sweep_cmd->add_option("--sizes", sizes, "PV sizes in percent: start:stop:step or a comma list")
        ->capture_default_str();
    sweep_cmd->add_option("--ratios", ratios, "Battery ratios in kWh/kW_PV, comma separated")->capture_default_str();
    sweep_cmd->add_option("-j,--jobs", jobs, "Concurrent scenario workers")
        ->envname("MPIMPE_JOBS")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--refine", refine, "Bisect on PV size around each ratio's MPI/MPE intersection");
    sweep_cmd->add_option("--refine-resolution", refine_resolution, "Refinement resolution in percent")
        ->capture_default_str();
    add_curtail_options(sweep_cmd, curtail);
    add_battery_options(sweep_cmd, bopts);

    std::string preset_name;
    std::size_t days = 365;
    std::uint64_t seed = 1;
    double synth_dt = 1.0;
    std::string start = "2017-01-01T00:00";
    std::string synth_out;
    auto* synth_cmd = app.add_subcommand("synth", "Write synthetic load and per-unit PV profiles");
    synth_cmd->add_option("--preset", preset_name, "Profile family")
        ->required()
        ->check(CLI::IsMember(synth::preset_names()));
    synth_cmd->add_option("--days", days, "Number of days")->capture_default_str();
    synth_cmd->add_option("--seed", seed, "Cloud-factor seed")->capture_default_str();
    synth_cmd->add_option("--resolution", synth_dt, "Interval in hours (0.25 or 1)")->capture_default_str();
    synth_cmd->add_option("--start", start, "First timestamp (YYYY-MM-DDTHH:MM)")->capture_default_str();
    synth_cmd->add_option("out_dir", synth_out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        diag.error("InvalidArgument", e.what());
        return kExitValidation;
    }

    try {
        if (*case1) return cmd_case1(in, pv_size_pct, curtail, out);
        if (*dispatch) return cmd_dispatch(in, pv_size_pct, ratio, curtail, bopts, out);
        if (*sweep_cmd) {
            return cmd_sweep(in, sizes, ratios, curtail, bopts, jobs, refine, refine_resolution, diag, out);
        }
        if (*synth_cmd) return cmd_synth(preset_name, days, seed, synth_dt, start, synth_out, out);
    } catch (const InputError& e) {
        diag.error(to_string(e.error.code()), e.error.what(), e.file, e.error.row());
        return kExitValidation;
    } catch (const Error& e) {
        diag.error(to_string(e.code()), e.what(), {}, e.row(), e.window());
        return e.code() == ErrorCode::SolverFailure ? kExitSolver : kExitValidation;
    } catch (const std::exception& e) {
        diag.error("Internal", e.what());
        return kExitUnexpected;
    }
    return kExitUnexpected;
}

}  // namespace mpimpe::cli
