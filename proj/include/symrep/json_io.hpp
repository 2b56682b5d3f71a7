#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symrep/bounds.hpp"
#include "symrep/decomposition.hpp"
#include "symrep/orbits.hpp"
#include "symrep/partition.hpp"

namespace symrep {

// Emission uses ordered_json so key order is insertion order: canonical
// partition order for decompositions, fixed field order for records.
// Every number is written as a decimal string.
using Json = nlohmann::ordered_json;

Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

Json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const Json& j);

Json to_json(const OrbitSpec& spec);
OrbitSpec orbit_spec_from_json(const Json& j);

Json to_json(const std::vector<Partition>& list);
Json to_json(const std::vector<PartitionTuple>& list);

/// Parses text as JSON; malformed input raises ParseError with the byte offset.
Json parse_json(const std::string& text);

/// Two-space indented, trailing newline.
std::string dump(const Json& j);

}  // namespace symrep
