#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stylo::cli {

// Process exit codes.
inline constexpr int kAuthored = 0;
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kUsage = 2;
inline constexpr int kNotAuthored = 3;

// Runs the command line `args` (args[0] is the program name). Data goes to
// `out`, diagnostics to `err`; `in` feeds `verify` when no --text is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

// Integer range syntax: `5`, `1..10`, `100..500:100` or `1,2,5`.
std::vector<int> parse_int_range(const std::string& spec);
std::vector<double> parse_real_range(const std::string& spec);

}  // namespace stylo::cli
