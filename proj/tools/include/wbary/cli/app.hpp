#pragma once

// Entry point of the `wbary` command-line tool, callable in-process.
//
//   wbary compute  --chi-c N --weights W --rho R [--method ...] [--json]
//   wbary series   ... [--bound B]
//   wbary oracle   --vertices M [--weights W] --rho R
//   wbary classify ... [--placement one-each|both-first --chi-a N --chi-b N]
//   wbary selftest [--cases N] [--seed S]

#include <iosfwd>
#include <string>
#include <vector>

namespace wbary::cli {

inline constexpr int kExitMatch = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitMismatch = 2;

/// args excludes the program name. `in` backs `--input -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wbary::cli
