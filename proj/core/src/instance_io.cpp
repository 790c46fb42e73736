#include "wbary/instance_io.hpp"

#include "wbary/error.hpp"

#include <json.hpp>

#include <limits>

namespace wbary {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorCode::ParseError, message); }

const json& require(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

BigInt integer_field(const json& value, const std::string& what) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? BigInt(value.get<std::uint64_t>()) : BigInt(value.get<std::int64_t>());
  }
  if (value.is_string()) return parse_integer(value.get<std::string>());
  fail(what + " must be an integer or a decimal string");
}

Rational fraction_field(const json& value, const std::string& what) {
  if (!value.is_string()) fail(what + " must be a string such as \"3/10\" or \"0.3\"");
  return parse_rational(value.get<std::string>());
}

json integer_json(const BigInt& n) {
  if (n <= std::numeric_limits<std::int64_t>::max() && n >= std::numeric_limits<std::int64_t>::min()) {
    return json(static_cast<std::int64_t>(n));
  }
  return json(n.str());
}

}  // namespace

ProblemInstance parse_instance_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("instance document must be a JSON object");

  ProblemInstance instance;
  instance.chi_c = integer_field(require(doc, "chi_c"), "chi_c");
  const json& weights = require(doc, "weights");
  if (!weights.is_array()) fail("weights must be an array of strings");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    instance.weights.push_back(fraction_field(weights[i], "weights[" + std::to_string(i) + "]"));
  }
  instance.rho = fraction_field(require(doc, "rho"), "rho");

  if (auto space = doc.find("space"); space != doc.end()) {
    if (!space->is_object()) fail("space must be an object");
    if (auto kind = space->find("kind"); kind != space->end()) {
      if (!kind->is_string()) fail("space.kind must be a string");
      auto parsed = space_kind_from_string(kind->get<std::string>());
      if (!parsed) fail("unknown space kind '" + kind->get<std::string>() + "'");
      instance.space.kind = *parsed;
    }
    if (auto components = space->find("components"); components != space->end()) {
      if (!components->is_array()) fail("space.components must be an array");
      for (const json& c : *components) {
        if (!c.is_object()) fail("each component must be an object");
        ComponentSpec spec;
        spec.chi_c = integer_field(require(c, "chi_c"), "component chi_c");
        if (auto compact = c.find("compact"); compact != c.end()) {
          if (!compact->is_boolean()) fail("component 'compact' must be a boolean");
          spec.is_compact = compact->get<bool>();
        }
        if (auto even = c.find("even_dim_interior"); even != c.end()) {
          if (!even->is_boolean()) fail("component 'even_dim_interior' must be a boolean");
          spec.even_dim_interior = even->get<bool>();
        }
        if (auto singular = c.find("singular"); singular != c.end()) {
          if (!singular->is_array()) fail("component 'singular' must be an array");
          for (const json& index : *singular) {
            if (!index.is_number_integer() || index.get<std::int64_t>() < 1) {
              fail("singular indices are 1-based positive integers");
            }
            spec.singular_indices.push_back(static_cast<std::size_t>(index.get<std::int64_t>() - 1));
          }
        }
        instance.space.components.push_back(std::move(spec));
      }
    }
  }
  return instance;
}

std::string instance_document(const ValidatedInstance& instance) {
  json doc;
  doc["chi_c"] = integer_json(instance.chi_c());
  doc["weights"] = json::array();
  for (const Rational& w : instance.weights()) doc["weights"].push_back(to_string(w));
  doc["rho"] = to_string(instance.rho());
  json space;
  space["kind"] = std::string(to_string(instance.space().kind));
  if (!instance.space().components.empty()) {
    space["components"] = json::array();
    for (const auto& c : instance.space().components) {
      json component;
      component["chi_c"] = integer_json(c.chi_c);
      component["compact"] = c.is_compact;
      component["even_dim_interior"] = c.even_dim_interior;
      component["singular"] = json::array();
      for (std::size_t index : c.singular_indices) component["singular"].push_back(index + 1);
      space["components"].push_back(std::move(component));
    }
  }
  doc["space"] = std::move(space);
  return doc.dump();
}

}  // namespace wbary
