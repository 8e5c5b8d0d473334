#pragma once

#include <map>
#include <string>
#include <vector>

#include "gaiakit/common.hpp"
#include "gaiakit/fincat.hpp"

namespace gaiakit::elements {

using fincat::FinCategory;
using fincat::FinFunctor;
using fincat::Id;
using fincat::ValidationReport;

// A functor schema -> Set given by finite tables and total actions; the
// "database" the migration functors move around.
struct SetInstance {
    FinCategory schema;
    std::map<Id, std::vector<Id>> tables;           // object -> elements
    std::map<Id, std::map<Id, Id>> actions;         // morphism -> elementwise map

    const std::vector<Id>& table(const Id& object) const;
    Id act(const Id& morphism, const Id& element) const;
};

ValidationReport validate_instance(const SetInstance& inst);

// Grothendieck category of elements with its projection to the schema.
// Objects are "(s,x)"; a schema arrow f: s -> s' contributes one arrow
// (s,x) -> (s', δf(x)) per element x.
struct ElementsCategory {
    FinCategory category;
    FinFunctor projection;                          // to the schema
    std::map<Id, std::pair<Id, Id>> object_pairs;   // object id -> (schema object, element)
    std::map<Id, std::pair<Id, Id>> morphism_pairs; // arrow id -> (schema morphism, source element)
};

ElementsCategory category_of_elements(const SetInstance& inst);

// Δ_F: precomposition with F. Tables of the result at s are the tables of
// the input at F(s).
SetInstance pullback_migration(const FinFunctor& F, const SetInstance& over_target);

// Σ_F: left Kan extension, pointwise colimit over the comma category F ↓ t.
SetInstance left_kan_migration(const FinFunctor& F, const SetInstance& over_source);

// Π_F: right Kan extension, pointwise limit over t ↓ F.
SetInstance right_kan_migration(const FinFunctor& F, const SetInstance& over_source);

// Natural transformations between instances over the same schema
// (exhaustive; budget-guarded).
using InstanceMap = std::map<Id, std::map<Id, Id>>; // object -> (elem -> elem)
std::vector<InstanceMap> natural_transformations(const SetInstance& from, const SetInstance& to,
                                                 Budget* budget = nullptr);

// Adjunction transpositions, the explicit bijections behind the counting
// checks. transpose_left sends α: Σ_F δ -> ε to the composite of the unit
// with Δ_F α; transpose_right sends β: ε -> Π_F δ to the counit after Δ_F β.
InstanceMap transpose_left(const FinFunctor& F, const SetInstance& delta,
                           const SetInstance& epsilon, const InstanceMap& alpha);
InstanceMap transpose_right(const FinFunctor& F, const SetInstance& delta,
                            const SetInstance& epsilon, const InstanceMap& beta);

// Checks ∫(Δ_F ε) ≅ S ×_T ∫ε by building both categories and an explicit
// isomorphism between them (functors both ways composing to identities).
struct PullbackCheck {
    bool holds = false;
    FinCategory lhs;        // ∫(Δ_F ε)
    FinCategory rhs;        // S ×_T ∫ε
    FinFunctor iso;         // lhs -> rhs
    FinFunctor iso_inverse; // rhs -> lhs
};
PullbackCheck verify_elements_pullback(const FinFunctor& F, const SetInstance& over_target);

} // namespace gaiakit::elements
