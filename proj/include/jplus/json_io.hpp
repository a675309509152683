#pragma once

#include <string>

#include "json.hpp"

#include "jplus/constructions.hpp"
#include "jplus/invariants.hpp"
#include "jplus/moves.hpp"

namespace jplus {

using Json = nlohmann::ordered_json;

// Coordinates are written as exact rational strings; on input, JSON numbers
// are also accepted and converted exactly from their binary64 value.
Json to_json(const PolylineCurve& curve);
PolylineCurve curve_from_json(const Json& j);

// Core data (sequence, signs, outer dart) plus the derived half-edge, face and
// crossing tables. Only the core is read back; the tables are rebuilt and must
// match when present.
Json to_json(const CurveDiagram& d);
CurveDiagram diagram_from_json(const Json& j);

Json to_json(const InvariantReport& r);
InvariantReport report_from_json(const Json& j);

Json to_json(const MoveSite& s);
MoveSite site_from_json(const Json& j);

Json to_json(const HomotopyTrace& t);
HomotopyTrace trace_from_json(const Json& j);

Json to_json(const SumSpec& s);
SumSpec sum_spec_from_json(const Json& j);

Json to_json(const PredictedResult& r);

Json integer_json(const Integer& v);
Integer integer_from_json(const Json& j);

// Parses text as JSON, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

// Accepts a curve document or a diagram document (with "sequence" or
// "gauss"); `geometry` tells which one was found.
CurveDiagram any_diagram_from_json(const Json& j, std::optional<PolylineCurve>* geometry = nullptr);

}  // namespace jplus
