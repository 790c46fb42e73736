#pragma once

#include "wbary/exact.hpp"
#include "wbary/space.hpp"

#include <CLI11.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace wbary::cli {

/// The flags every instance-taking subcommand shares. Raw strings are kept
/// so that exact parsing and its error messages stay in wbary.
struct InstanceFlags {
  std::string chi_c;
  std::string weights;
  std::string rho;
  std::string space;
  std::string components;
  std::string input;

  void attach(CLI::App& command);
};

/// "1/2,0.3,2" -> exact weights; "" -> none.
std::vector<Rational> parse_weight_list(std::string_view csv);

/// "CHI:KIND[:I,J,...];..." with KIND one of compact, open, even (open and
/// the interior of an even dimensional manifold) and 1-based singular
/// point positions.
std::vector<ComponentSpec> parse_components(std::string_view spec);

/// Builds the instance from --input (a JSON document, "-" for `in`) or from
/// the individual flags. Throws Error(ParseError) naming the bad flag.
ProblemInstance build_instance(const InstanceFlags& flags, std::istream& in);

}  // namespace wbary::cli
