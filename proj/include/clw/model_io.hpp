#ifndef CLW_MODEL_IO_HPP
#define CLW_MODEL_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "clw/represent.hpp"

namespace clw {

using Json = nlohmann::json;

using AnyModel = std::variant<ActionModel, NeighborhoodModel, GrandFirstActionModel,
                              SingleFirstActionModel, SingleFirstNeighborhoodModel>;

// One JSON document per model:
//   { "kind": "action" | "neighborhood" | "gam" | "sam" | "snm",
//     "agents": [...], "states": [...], "actions": [...],
//     "labeling": { state: [atom, ...], ... },
//     ... kind-specific payload ... }
// Payloads:
//   action:        "availability": {coalitionKey: {state: [jointActionKey]}},
//                  "outcome":      {coalitionKey: {state: {jointActionKey: [state]}}}
//   neighborhood:  "neighborhood": {coalitionKey: {state: [[state, ...], ...]}}
//   gam:           "outcome_grand": {state: {profileKey: [state]}}
//   sam:           "successor": {state: [state]},
//                  "outcome_agent": {agent: {state: {action: [state]}}}
//   snm:           "successor": {state: [state]},
//                  "neighborhood_agent": {agent: {state: [[state, ...], ...]}}
// Missing availability/outcome/labeling entries default to empty. Loaded
// sam/snm models are validated against their cover invariants.

AnyModel load_model(const Json& j);
AnyModel load_model_file(const std::string& path);

Json to_json(const ActionModel& m);
Json to_json(const NeighborhoodModel& m);
Json to_json(const GrandFirstActionModel& m);
Json to_json(const SingleFirstActionModel& m);
Json to_json(const SingleFirstNeighborhoodModel& m);
Json to_json(const AnyModel& m);

std::string kind_of(const AnyModel& m);

}  // namespace clw

#endif
