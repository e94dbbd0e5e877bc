#pragma once

#include <json.hpp>

#include "subshift/bratteli.hpp"
#include "subshift/clopen.hpp"
#include "subshift/ktheory.hpp"
#include "subshift/labeled_space.hpp"
#include "subshift/language.hpp"
#include "subshift/measure.hpp"

namespace subshift {

using Json = nlohmann::json;

// Every artifact carries the same header key so downstream tools can
// detect the layout.
inline constexpr const char* kSchemaKey = "schema";

Json to_json(const RecurrenceReport& r);
Json to_json(const DisagreeabilityReport& r);
Json to_json(const AxiomReport& r);
Json to_json(const std::vector<AxiomReport>& rs);
Json to_json(const CofinalityCertificate& c);
Json to_json(const CheckReport& r);
Json to_json(const IntMatrix& m);
Json to_json(const DimensionData& d);
Json to_json(const SNFReport& r);
Json to_json(const NaturalityReport& r);
Json to_json(const K0Report& r);
Json to_json(const MeasureCheckReport& r);

}  // namespace subshift
