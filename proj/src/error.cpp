#include "mpimpe/error.hpp"

namespace mpimpe {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::NonUniformSpacing: return "NonUniformSpacing";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::IncompatibleResolution: return "IncompatibleResolution";
    case ErrorCode::ZeroPeak: return "ZeroPeak";
    case ErrorCode::ZeroYield: return "ZeroYield";
    case ErrorCode::MisalignedSeries: return "MisalignedSeries";
    case ErrorCode::InvalidFraction: return "InvalidFraction";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::SolverFailure: return "SolverFailure";
    case ErrorCode::EmptyCurve: return "EmptyCurve";
    case ErrorCode::MissingReferencePoint: return "MissingReferencePoint";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, std::optional<std::size_t> row,
             std::optional<std::size_t> window)
    : std::runtime_error(what), code_(code), row_(row), window_(window) {}

}  // namespace mpimpe
