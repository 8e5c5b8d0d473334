#pragma once

#include <string>

#include <json.hpp>

#include "gaiakit/coalgebra.hpp"
#include "gaiakit/elements.hpp"
#include "gaiakit/fincat.hpp"
#include "gaiakit/genmetric.hpp"
#include "gaiakit/lifting.hpp"
#include "gaiakit/simplicial.hpp"

namespace gaiakit::io {

using nlohmann::json;

// Category text format:
// {"objects": [...], "morphisms": [{"id","dom","cod"}...],
//  "identity": {obj: morph}, "compose": [["g","f","gf"]...]}
json category_to_json(const fincat::FinCategory& c);
fincat::FinCategory category_from_json(const json& j);

// Functor maps only; source/target categories travel separately.
json functor_maps_to_json(const fincat::FinFunctor& F);
fincat::FinFunctor functor_from_json(const json& j, fincat::FinCategory source,
                                     fincat::FinCategory target);

// Instance: {"tables": {obj: [...]}, "actions": {morph: {x: y}}}
json instance_to_json(const elements::SetInstance& inst);
elements::SetInstance instance_from_json(const json& j, fincat::FinCategory schema);

// Simplicial set: {"truncation": N, "simplices": [[...]...],
//  "face": [[], [table...]...], "degeneracy": [[table...]...]}
json simplicial_to_json(const simplicial::SimplicialSet& x);
simplicial::SimplicialSet simplicial_from_json(const json& j);

// LTS: {"states": [...], "labels": [...], "transitions": [[s,a,t]...]}
json lts_to_json(const coalgebra::Coalgebra& c);
coalgebra::Coalgebra lts_from_json(const json& j);

// Finite function: {"domain": [...], "codomain": [...], "map": {x: y}}
json function_to_json(const lifting::FinFunction& f);
lifting::FinFunction function_from_json(const json& j);

// Space: {"carrier": [...], "table": {x: {y: "1/2" | "inf" | 3}}}
json space_to_json(const genmetric::GenMetricSpace& s);
genmetric::GenMetricSpace space_from_json(const json& j);

json load_json_file(const std::string& path); // throws InputError with context

} // namespace gaiakit::io
