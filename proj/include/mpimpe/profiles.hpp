#pragma once
// Time-series model, CSV ingestion, resampling, PV sizing and net-load
// decomposition. Samples are interval-average power in MW; the sample at
// index i covers [start + i*dt, start + (i+1)*dt).

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace mpimpe {

// Wall-clock timestamp with one-second resolution. No time zone or DST
// handling: callers pre-align load and PV data.
class Timestamp {
public:
    Timestamp() = default;
    static Timestamp from_civil(int year, unsigned month, unsigned day, int hour = 0,
                                int minute = 0, int second = 0);
    // Accepts YYYY-MM-DDTHH:MM[:SS] or the same with a space separator.
    static Timestamp parse(std::string_view text);

    std::string iso() const;  // YYYY-MM-DDTHH:MM:SS
    std::int64_t seconds() const { return seconds_; }
    int seconds_of_day() const;
    int day_of_year() const;  // 0-based
    Timestamp plus_seconds(std::int64_t s) const { return Timestamp(seconds_ + s); }

    auto operator<=>(const Timestamp&) const = default;

private:
    explicit Timestamp(std::int64_t s) : seconds_(s) {}
    std::int64_t seconds_ = 0;  // since 1970-01-01T00:00:00
};

inline constexpr double kQuarterHour = 0.25;
inline constexpr double kHour = 1.0;
inline constexpr double kMaxSpanHours = 8784.0;

class TimeSeries {
public:
    TimeSeries(Timestamp start, double dt_hours, std::vector<double> values);

    Timestamp start() const { return start_; }
    double dt() const { return dt_; }
    std::size_t size() const { return values_.size(); }
    std::span<const double> values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    Timestamp time_at(std::size_t i) const;
    // Σ v·dt
    double energy() const;

    bool aligned_with(const TimeSeries& other) const;

private:
    Timestamp start_;
    double dt_;
    std::vector<double> values_;
};

class LoadProfile {
public:
    explicit LoadProfile(TimeSeries series);

    const TimeSeries& series() const { return series_; }
    double peak() const { return peak_; }
    double annual_energy() const { return annual_energy_; }

private:
    TimeSeries series_;
    double peak_;
    double annual_energy_;
};

inline constexpr double kMaxUnitPv = 1.2;

// Generation per MW_p of nominal capacity.
class PvUnitProfile {
public:
    explicit PvUnitProfile(TimeSeries series);

    const TimeSeries& series() const { return series_; }
    double unit_annual_energy() const { return unit_annual_energy_; }  // MWh per MW_p

private:
    TimeSeries series_;
    double unit_annual_energy_;
};

struct PvSize {
    double capacity_pct = 0.0;  // percent of community peak load
    double nominal_mw = 0.0;

    static PvSize from_percent(double peak_load_mw, double capacity_pct);
};

class NetLoadDecomposition {
public:
    // Validates alignment, non-negativity and min(rl, sg) = 0.
    NetLoadDecomposition(TimeSeries rl, TimeSeries sg);

    const TimeSeries& rl() const { return rl_; }
    const TimeSeries& sg() const { return sg_; }
    std::size_t size() const { return rl_.size(); }
    double dt() const { return rl_.dt(); }
    Timestamp start() const { return rl_.start(); }
    // rl - sg
    std::vector<double> net() const;

private:
    TimeSeries rl_;
    TimeSeries sg_;
};

struct CsvSchema {
    std::string timestamp_column = "timestamp";
    std::string value_column = "value";
    bool allow_negative = false;
};

// Passing kInferDt takes the interval from the first two rows.
inline constexpr double kInferDt = 0.0;

TimeSeries ingest_csv(const std::filesystem::path& path, const CsvSchema& schema, double dt_hours);
TimeSeries parse_csv(std::string_view text, const CsvSchema& schema, double dt_hours);

// Header `timestamp,<value_column>`, 6 decimals; accepted unchanged by ingest_csv.
std::string format_csv(const TimeSeries& series, const std::string& value_column = "value");
void write_csv(const std::filesystem::path& path, const TimeSeries& series,
               const std::string& value_column = "value");

TimeSeries resample_to(const TimeSeries& series, double target_dt);
LoadProfile scale_to_peak(const LoadProfile& load, double target_peak);
TimeSeries pv_generation(const PvUnitProfile& unit, const PvSize& size);
double energy_size_pct(const LoadProfile& load, const PvUnitProfile& unit);
NetLoadDecomposition decompose(const TimeSeries& load, const TimeSeries& pv);

std::string format_fixed(double value, int decimals = 6);

}  // namespace mpimpe
