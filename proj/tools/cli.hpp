#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "chorediv/model.hpp"
#include "chorediv/oracle.hpp"
#include "chorediv/report.hpp"

namespace chorediv::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 1;
inline constexpr int kBudgetOrConstruction = 2;
inline constexpr int kInternalError = 3;

// Instance:   {"agents":[{"vA":-10,"vB":-1},...],"countA":3,"countB":2}
// Allocation: {"bundles":[{"alpha":1,"beta":0},...]}
// Both throw ValidationError with a field path or line/column on bad input.
Instance parse_instance(std::string_view text);
Allocation parse_allocation(std::string_view text);

std::string to_json(const Instance& instance);
std::string to_json(const Allocation& X);
std::string to_json(const PropertyReport& report);
std::string to_json(const FixtureReport& report);

std::string to_plain(const Allocation& X);
std::string to_plain(const PropertyReport& report);

/// Reads a whole file ("-" for stdin). Throws ValidationError on I/O failure.
std::string read_text(const std::string& path);

/// Command-line entry point. Writes results to `out` and diagnostics to
/// `err`; returns one of the exit statuses above.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace chorediv::cli
