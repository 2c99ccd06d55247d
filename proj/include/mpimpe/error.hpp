#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mpimpe {

enum class ErrorCode {
    MalformedRow,
    NonUniformSpacing,
    NegativeValue,
    IncompatibleResolution,
    ZeroPeak,
    ZeroYield,
    MisalignedSeries,
    InvalidFraction,
    InvalidArgument,
    DimensionMismatch,
    InfeasibleSpec,
    SolverFailure,
    EmptyCurve,
    MissingReferencePoint,
    InvalidSpec,
    Io,
};

const char* to_string(ErrorCode code) noexcept;

// Every library failure is reported through this type. `row` is the 0-based
// data row (header excluded) for ingestion errors, `window` the rolling-horizon
// window index for solver failures.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what,
          std::optional<std::size_t> row = std::nullopt,
          std::optional<std::size_t> window = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> row() const noexcept { return row_; }
    std::optional<std::size_t> window() const noexcept { return window_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> row_;
    std::optional<std::size_t> window_;
};

}  // namespace mpimpe
