#pragma once

// Command-line front end. Exit codes: 0 success / PASS, 1 semantic failure
// (FAIL, non-cyclic initial state), 2 input error.

#include <iosfwd>
#include <string>
#include <variant>

#include "geoloop/core.hpp"

namespace geoloop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

/// Threshold on max_entry_deviation used by `verify`.
inline constexpr double kVerifyThreshold = 1e-10;

/// Radians, or a pi literal: "pi", "-pi/4", "2*pi/3", "3pi/2".
double parse_angle(const std::string& text);

/// Gate named on the command line: "u_chi:<angle>", "u2", "u2_prime",
/// "controlled_u:<angle>".
std::variant<Unitary2, Unitary4> parse_target(const std::string& text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geoloop::cli
