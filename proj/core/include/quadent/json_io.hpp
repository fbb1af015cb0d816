#pragma once

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include "quadent/densecode.hpp"
#include "quadent/entanglement.hpp"
#include "quadent/locc.hpp"
#include "quadent/teleport.hpp"

namespace quadent {

using Json = nlohmann::ordered_json;

// [{label, re, im}] with zero amplitudes omitted
Json kets_to_json(const PureState& s);
// Renormalizes; the qubit count is read from the labels.
PureState kets_from_json(const Json& j);

Json to_json(const OutcomeReport& r);
Json to_json(const TeleportReport& r);
Json to_json(const CapacityReport& r);
Json to_json(const EntanglementProfile& p);
Json to_json(const DiscriminationReport& r);
Json to_json(const NamedState& s);
Json to_json(const NamedBasis& b);

OutcomeReport outcome_report_from_json(const Json& j);
TeleportReport teleport_report_from_json(const Json& j);
CapacityReport capacity_report_from_json(const Json& j);
EntanglementProfile profile_from_json(const Json& j);
DiscriminationReport discrimination_report_from_json(const Json& j);

// {states: [...], bases: [...]} over the whole catalog
Json catalog_dump();

}  // namespace quadent
