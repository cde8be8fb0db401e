#pragma once

#include "pexider/classifier.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace pexider {

using Json = nlohmann::json;

/// Instance document:
/// `{"I1": "(0,2)", "I2": "(4,6)", "zero_set": ["[5/2,4)"],
///   "f1": [{"piece": "(0,1)", "value": "1"}, ...], "f2": [...]}`
Json instance_to_json(const EquationInstance& inst);

/// Throws ParseError carrying the 1-based line of the offending value.
EquationInstance parse_instance(std::string_view text);

/// Canonical, byte-stable text of an instance.
std::string dump_instance(const EquationInstance& inst);

Json verdict_to_json(const Verdict& v);
Json witness_to_json(const Witness& w);
Json classification_to_json(const Classification& c);

/// Reads a rational from a JSON string or number.
Rational rational_from_json(const Json& j);

}  // namespace pexider
