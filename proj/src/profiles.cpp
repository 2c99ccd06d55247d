#include "mpimpe/profiles.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mpimpe/error.hpp"
#include "mpimpe/kernels.hpp"

namespace mpimpe {

namespace chr = std::chrono;

namespace {

constexpr std::int64_t kSecondsPerDay = 86400;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t step_seconds(double dt_hours) { return std::llround(dt_hours * 3600.0); }

bool is_supported_dt(double dt) { return dt == kQuarterHour || dt == kHour; }

template <typename Int>
bool parse_int(std::string_view s, Int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::string_view trim_cr(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        out.push_back(trim_cr(line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

// Data rows are 0-based; the file line adds the header and 1-based counting.
std::string row_label(std::size_t row) {
    return "data row " + std::to_string(row) + " (line " + std::to_string(row + 2) + ")";
}

}  // namespace

// --- Timestamp ---------------------------------------------------------------

Timestamp Timestamp::from_civil(int year, unsigned month, unsigned day, int hour, int minute,
                                int second) {
    const chr::year_month_day ymd{chr::year{year}, chr::month{month}, chr::day{day}};
    if (!ymd.ok() || hour < 0 || hour > 23 || minute < 0 || minute > 59 || second < 0 ||
        second > 59) {
        throw Error(ErrorCode::InvalidArgument, "invalid calendar timestamp");
    }
    const std::int64_t days = chr::sys_days{ymd}.time_since_epoch().count();
    return Timestamp(days * kSecondsPerDay + hour * 3600 + minute * 60 + second);
}

Timestamp Timestamp::parse(std::string_view text) {
    // YYYY-MM-DDTHH:MM[:SS]
    auto fail = [&]() -> Timestamp {
        throw Error(ErrorCode::MalformedRow, "unparseable timestamp '" + std::string(text) + "'");
    };
    if (text.size() != 16 && text.size() != 19) return fail();
    if (text[4] != '-' || text[7] != '-' || (text[10] != 'T' && text[10] != ' ') || text[13] != ':')
        return fail();
    if (text.size() == 19 && text[16] != ':') return fail();
    int year = 0;
    unsigned month = 0, day = 0;
    int hour = 0, minute = 0, second = 0;
    if (!parse_int(text.substr(0, 4), year) || !parse_int(text.substr(5, 2), month) ||
        !parse_int(text.substr(8, 2), day) || !parse_int(text.substr(11, 2), hour) ||
        !parse_int(text.substr(14, 2), minute)) {
        return fail();
    }
    if (text.size() == 19 && !parse_int(text.substr(17, 2), second)) return fail();
    try {
        return from_civil(year, month, day, hour, minute, second);
    } catch (const Error&) {
        return fail();
    }
}

std::string Timestamp::iso() const {
    const std::int64_t days = floor_div(seconds_, kSecondsPerDay);
    const std::int64_t sod = seconds_ - days * kSecondsPerDay;
    const chr::year_month_day ymd{chr::sys_days{chr::days{days}}};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                  static_cast<int>(sod / 3600), static_cast<int>((sod / 60) % 60),
                  static_cast<int>(sod % 60));
    return buf;
}

int Timestamp::seconds_of_day() const {
    return static_cast<int>(seconds_ - floor_div(seconds_, kSecondsPerDay) * kSecondsPerDay);
}

int Timestamp::day_of_year() const {
    const chr::sys_days today{chr::days{floor_div(seconds_, kSecondsPerDay)}};
    const chr::year_month_day ymd{today};
    const chr::sys_days jan1{ymd.year() / chr::January / 1};
    return static_cast<int>((today - jan1).count());
}

// --- TimeSeries --------------------------------------------------------------

TimeSeries::TimeSeries(Timestamp start, double dt_hours, std::vector<double> values)
    : start_(start), dt_(dt_hours), values_(std::move(values)) {
    if (!(dt_ > 0.0) || !std::isfinite(dt_)) {
        throw Error(ErrorCode::InvalidArgument, "time step must be positive");
    }
    if (values_.empty()) throw Error(ErrorCode::InvalidArgument, "time series is empty");
    if (static_cast<double>(values_.size()) * dt_ > kMaxSpanHours + 1e-9) {
        throw Error(ErrorCode::InvalidArgument, "time series spans more than one year");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw Error(ErrorCode::InvalidArgument, "non-finite sample at index " + std::to_string(i), i);
        }
    }
}

Timestamp TimeSeries::time_at(std::size_t i) const {
    return start_.plus_seconds(static_cast<std::int64_t>(i) * step_seconds(dt_));
}

double TimeSeries::energy() const { return kernels::active().sum(values_) * dt_; }

bool TimeSeries::aligned_with(const TimeSeries& other) const {
    return start_ == other.start_ && dt_ == other.dt_ && values_.size() == other.values_.size();
}

LoadProfile::LoadProfile(TimeSeries series) : series_(std::move(series)) {
    const auto v = series_.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0.0) {
            throw Error(ErrorCode::NegativeValue, "negative load at index " + std::to_string(i), i);
        }
    }
    peak_ = kernels::active().max(v).value;
    annual_energy_ = series_.energy();
}

PvUnitProfile::PvUnitProfile(TimeSeries series) : series_(std::move(series)) {
    const auto v = series_.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0.0) {
            throw Error(ErrorCode::NegativeValue, "negative PV sample at index " + std::to_string(i), i);
        }
        if (v[i] > kMaxUnitPv) {
            throw Error(ErrorCode::InvalidArgument,
                        "per-unit PV sample above 1.2 at index " + std::to_string(i), i);
        }
    }
    unit_annual_energy_ = series_.energy();
}

PvSize PvSize::from_percent(double peak_load_mw, double capacity_pct) {
    if (!(capacity_pct >= 0.0)) throw Error(ErrorCode::InvalidArgument, "PV size must be >= 0 %");
    return {capacity_pct, peak_load_mw * capacity_pct / 100.0};
}

NetLoadDecomposition::NetLoadDecomposition(TimeSeries rl, TimeSeries sg)
    : rl_(std::move(rl)), sg_(std::move(sg)) {
    if (!rl_.aligned_with(sg_)) {
        throw Error(ErrorCode::MisalignedSeries, "residual load and surplus series are misaligned");
    }
    for (std::size_t i = 0; i < rl_.size(); ++i) {
        if (rl_[i] < 0.0 || sg_[i] < 0.0 || std::min(rl_[i], sg_[i]) != 0.0) {
            throw Error(ErrorCode::InvalidArgument,
                        "decomposition violates complementarity at index " + std::to_string(i), i);
        }
    }
}

std::vector<double> NetLoadDecomposition::net() const {
    std::vector<double> out(size());
    kernels::active().subtract(rl_.values(), sg_.values(), out);
    return out;
}

// --- CSV ---------------------------------------------------------------------

TimeSeries parse_csv(std::string_view text, const CsvSchema& schema, double dt_hours) {
    const bool infer = dt_hours == kInferDt;
    if (!infer && !is_supported_dt(dt_hours)) {
        throw Error(ErrorCode::IncompatibleResolution, "interval must be 0.25 h or 1 h");
    }
    std::vector<std::string_view> lines;
    for (std::size_t pos = 0; pos <= text.size();) {
        const std::size_t nl = text.find('\n', pos);
        lines.push_back(text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos));
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    while (!lines.empty() && trim_cr(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw Error(ErrorCode::MalformedRow, "missing header row");

    const auto header = split_fields(lines[0]);
    const auto find_col = [&](const std::string& name) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) {
            throw Error(ErrorCode::MalformedRow, "header lacks column '" + name + "'");
        }
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t ts_col = find_col(schema.timestamp_column);
    const std::size_t val_col = find_col(schema.value_column);
    if (lines.size() == 1) throw Error(ErrorCode::MalformedRow, "no data rows");

    std::int64_t step = infer ? 0 : step_seconds(dt_hours);
    std::vector<double> values;
    values.reserve(lines.size() - 1);
    Timestamp start;
    Timestamp previous;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::size_t row = li - 1;
        const auto fields = split_fields(lines[li]);
        if (fields.size() != header.size()) {
            throw Error(ErrorCode::MalformedRow,
                        row_label(row) + ": expected " + std::to_string(header.size()) +
                            " fields, found " + std::to_string(fields.size()),
                        row);
        }
        Timestamp ts;
        try {
            ts = Timestamp::parse(fields[ts_col]);
        } catch (const Error& e) {
            throw Error(ErrorCode::MalformedRow, row_label(row) + ": " + e.what(), row);
        }
        const std::string_view raw = fields[val_col];
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
        if (raw.empty() || ec != std::errc() || ptr != raw.data() + raw.size() || !std::isfinite(v)) {
            throw Error(ErrorCode::MalformedRow,
                        row_label(row) + ": unparseable value '" + std::string(raw) + "'", row);
        }
        if (v < 0.0 && !schema.allow_negative) {
            throw Error(ErrorCode::NegativeValue,
                        row_label(row) + ": negative value " + std::string(raw), row);
        }
        if (row == 0) {
            start = ts;
        } else if (row == 1 && infer) {
            dt_hours = static_cast<double>(ts.seconds() - previous.seconds()) / 3600.0;
            if (!is_supported_dt(dt_hours)) {
                throw Error(ErrorCode::IncompatibleResolution,
                            row_label(row) + ": spacing of the first rows is neither 15 min nor 1 h", row);
            }
            step = step_seconds(dt_hours);
        } else if (ts.seconds() - previous.seconds() != step) {
            throw Error(ErrorCode::NonUniformSpacing,
                        row_label(row) + ": timestamp " + ts.iso() + " is not " +
                            format_fixed(dt_hours, 2) + " h after " + previous.iso(),
                        row);
        }
        previous = ts;
        values.push_back(v);
    }
    if (infer && values.size() < 2) {
        throw Error(ErrorCode::IncompatibleResolution, "cannot infer the interval from a single row");
    }
    return TimeSeries(start, dt_hours, std::move(values));
}

TimeSeries ingest_csv(const std::filesystem::path& path, const CsvSchema& schema, double dt_hours) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), schema, dt_hours);
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    std::string s(buf);
    // "-0.000000" carries no information and breaks byte comparisons.
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

std::string format_csv(const TimeSeries& series, const std::string& value_column) {
    std::string out = "timestamp," + value_column + "\n";
    out.reserve(out.size() + series.size() * 32);
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += series.time_at(i).iso();
        out += ',';
        out += format_fixed(series[i]);
        out += '\n';
    }
    return out;
}

void write_csv(const std::filesystem::path& path, const TimeSeries& series,
               const std::string& value_column) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
    out << format_csv(series, value_column);
}

// --- transforms --------------------------------------------------------------

TimeSeries resample_to(const TimeSeries& series, double target_dt) {
    if (!is_supported_dt(target_dt) || !is_supported_dt(series.dt())) {
        throw Error(ErrorCode::IncompatibleResolution, "resampling supports 0.25 h and 1 h only");
    }
    if (target_dt == series.dt()) return series;
    const auto v = series.values();
    if (target_dt > series.dt()) {
        const auto block = static_cast<std::size_t>(std::llround(target_dt / series.dt()));
        if (v.size() % block != 0) {
            throw Error(ErrorCode::IncompatibleResolution,
                        "length " + std::to_string(v.size()) + " is not a multiple of " +
                            std::to_string(block));
        }
        std::vector<double> out(v.size() / block);
        kernels::active().block_mean(v, block, out);
        return TimeSeries(series.start(), target_dt, std::move(out));
    }
    const auto repeat = static_cast<std::size_t>(std::llround(series.dt() / target_dt));
    std::vector<double> out;
    out.reserve(v.size() * repeat);
    for (double x : v) out.insert(out.end(), repeat, x);
    return TimeSeries(series.start(), target_dt, std::move(out));
}

LoadProfile scale_to_peak(const LoadProfile& load, double target_peak) {
    if (!(load.peak() > 0.0)) throw Error(ErrorCode::ZeroPeak, "load profile has zero peak");
    if (!(target_peak > 0.0)) throw Error(ErrorCode::ZeroPeak, "target peak must be positive");
    const auto v = load.series().values();
    std::vector<double> out(v.size());
    kernels::active().scale(v, target_peak / load.peak(), out);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == load.peak()) out[i] = target_peak;
    }
    return LoadProfile(TimeSeries(load.series().start(), load.series().dt(), std::move(out)));
}

TimeSeries pv_generation(const PvUnitProfile& unit, const PvSize& size) {
    const auto v = unit.series().values();
    std::vector<double> out(v.size());
    kernels::active().scale(v, size.nominal_mw, out);
    return TimeSeries(unit.series().start(), unit.series().dt(), std::move(out));
}

double energy_size_pct(const LoadProfile& load, const PvUnitProfile& unit) {
    if (!(unit.unit_annual_energy() > 0.0)) {
        throw Error(ErrorCode::ZeroYield, "PV profile yields no energy");
    }
    if (!(load.peak() > 0.0)) throw Error(ErrorCode::ZeroPeak, "load profile has zero peak");
    return 100.0 * (load.annual_energy() / unit.unit_annual_energy()) / load.peak();
}

NetLoadDecomposition decompose(const TimeSeries& load, const TimeSeries& pv) {
    if (!load.aligned_with(pv)) {
        throw Error(ErrorCode::MisalignedSeries,
                    "load and PV series differ in start, interval or length");
    }
    std::vector<double> rl(load.size());
    std::vector<double> sg(load.size());
    kernels::active().split_net(load.values(), pv.values(), rl, sg);
    return NetLoadDecomposition(TimeSeries(load.start(), load.dt(), std::move(rl)),
                                TimeSeries(load.start(), load.dt(), std::move(sg)));
}

}  // namespace mpimpe
