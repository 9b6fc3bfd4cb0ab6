#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nsg/arith.hpp"

namespace nsg {

/// Exit codes: 0 success, 1 input error, 2 internal consistency failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitMismatch = 2;

/// Runs `nsg <subcommand> ...`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Splits a batch line on whitespace and commas; throws InvalidInput on
/// anything other than 2-3 positive integers.
std::vector<Int> parse_generator_line(const std::string& line);

}  // namespace nsg
