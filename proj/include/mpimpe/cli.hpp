#pragma once
// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it in-process.

#include <filesystem>
#include <iosfwd>
#include <string>

namespace mpimpe::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUnexpected = 1,
    kExitValidation = 2,
    kExitSolver = 3,
    kExitSweepFailed = 4,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Lower-case hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace mpimpe::cli
