#pragma once

#include <json.hpp>

#include "pcf/cf.hpp"
#include "pcf/sequence.hpp"

namespace pcf::json {

using nlohmann::json;

/// {"lo": int, "hi": int, "values": ["p/q" or "n", ...]}
json from_sequence(const Sequence& seq);
/// Throws ParseError on bad values, MathError when hi disagrees with the value count.
Sequence to_sequence(const json& record);

/// {"h", "P", "Q", "a", "normal", "reduced"} with polynomials in the text grammar.
json from_line(const cf::Line& line);
/// The state part of a line record.
cf::State to_state(const json& record);

/// {"f", "a", "b", "m", "c"}
json from_certificate(const cf::Certificate& cert);
cf::Certificate to_certificate(const json& record);

}  // namespace pcf::json
