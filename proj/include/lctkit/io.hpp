#pragma once

// JSON wire format, version "lct-kit/1":
//   ideal: {"format": "lct-kit/1", "n": 2, "generators": [[2,0],[0,3]]}
//   pair:  the ideal keys plus "b": ["0","-1/2"], "mu": "9/10"
// Rationals are strings "p/q" (or "p" when q = 1).

#include "lctkit/ideal.hpp"
#include "lctkit/rational.hpp"
#include "lctkit/thresholds.hpp"

#include <json.hpp>

#include <string>

namespace lctkit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatTag = "lct-kit/1";

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const RatVector& v);
RatVector rat_vector_from_json(const Json& j);

Json to_json(const MonomialIdeal& ideal);
/// With `strict`, non-minimal generator lists are rejected; otherwise they
/// are minimalized and `*minimalized` (if given) is set.
MonomialIdeal ideal_from_json(const Json& j, bool strict = false, bool* minimalized = nullptr);

Json to_json(const PairSpec& pair);
PairSpec pair_from_json(const Json& j, bool strict = false, bool* minimalized = nullptr);

/// Reads and parses a JSON file; throws ParseError on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace lctkit
