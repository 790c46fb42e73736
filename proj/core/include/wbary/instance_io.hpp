#pragma once

// JSON instance documents:
//
//   {"chi_c": 2, "weights": ["3/10", "0.4"], "rho": "9/2",
//    "space": {"kind": "union",
//              "components": [{"chi_c": 1, "compact": true, "singular": [1]},
//                             {"chi_c": 1, "compact": false, "singular": [2]}]}}
//
// Weights and rho must be JSON strings ("p/q" or a finite decimal); JSON
// numbers are rejected for them. "singular" lists 1-based weight positions.
// chi_c may be a JSON integer or a decimal string.

#include "wbary/space.hpp"

#include <string>
#include <string_view>

namespace wbary {

/// Throws Error(ParseError) on malformed documents.
ProblemInstance parse_instance_document(std::string_view json_text);

/// Canonical document for a validated instance: keys sorted, weights in
/// validated order, fractions as "p/q" strings, no whitespace.
std::string instance_document(const ValidatedInstance& instance);

}  // namespace wbary
