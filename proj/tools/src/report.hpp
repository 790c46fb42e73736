#pragma once

#include "wbary/euler.hpp"
#include "wbary/exact.hpp"
#include "wbary/space.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace wbary::cli {

/// An integer as a JSON number when it fits in 64 bits, else a decimal string.
nlohmann::json json_integer(const BigInt& n);

/// "{}" or "{1,3}": 1-based positions in the validated weight order.
std::string subset_label(std::uint64_t mask);

struct MethodValue {
  std::string method;
  BigInt chi_c;
};

struct Report {
  Report(std::string command, ValidatedInstance instance)
      : command(std::move(command)), instance(std::move(instance)) {}

  std::string command;
  ValidatedInstance instance;
  std::optional<std::size_t> vertices;  // oracle only
  std::vector<MethodValue> values;
  std::optional<BigInt> degree;
  std::optional<bool> topological_chi;
  std::vector<std::pair<std::string, std::vector<SubsetTerm>>> breakdown;
  std::optional<std::string> descriptor;
  std::optional<BigInt> descriptor_chi;

  /// MATCH iff every entry of values agrees.
  bool match() const;
};

nlohmann::json to_json(const Report& report);
void print_text(const Report& report, std::ostream& out);

/// One line: chi_c, weights, rho, space and components.
std::string describe_instance(const ValidatedInstance& instance);

}  // namespace wbary::cli
