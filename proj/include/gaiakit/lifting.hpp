#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaiakit/common.hpp"
#include "gaiakit/elements.hpp"
#include "gaiakit/fincat.hpp"
#include "gaiakit/simplicial.hpp"

namespace gaiakit::lifting {

using fincat::FinCategory;
using fincat::FinFunctor;
using fincat::Id;

// Total function between named finite sets.
struct FinFunction {
    std::vector<Id> domain;
    std::vector<Id> codomain;
    std::map<Id, Id> map;

    Id at(const Id& x) const;
    void check_total() const; // throws InputError
};

// Commuting square
//        top
//    A ------> X
//    |f        |p
//    v  bottom v
//    B ------> Y
// in finite sets. Solutions are diagonals h: B -> X with p∘h = bottom and
// h∘f = top.
struct SetSquare {
    FinFunction f;
    FinFunction p;
    FinFunction top;
    FinFunction bottom;

    void check_commutes() const; // throws InputError if p∘top != bottom∘f
};

std::vector<FinFunction> solve_lifting(const SetSquare& sq, Budget* budget = nullptr);

struct RlpReport {
    bool has_rlp = true;
    std::optional<SetSquare> counterexample;
};

// Does p have the right lifting property against every f in the list?
// Exhaustive over all commuting squares (top, bottom).
RlpReport has_rlp(const FinFunction& p, const std::vector<FinFunction>& against,
                  Budget* budget = nullptr);

// The same square in Cat: functors instead of functions.
struct CatSquare {
    FinFunctor f;
    FinFunctor p;
    FinFunctor top;
    FinFunctor bottom;
};

std::vector<FinFunctor> solve_lifting_cat(const CatSquare& sq, Budget* budget = nullptr);

// Level-wise square of simplicial maps.
struct SimpSquare {
    simplicial::SimplicialMap f;
    simplicial::SimplicialMap p;
    simplicial::SimplicialMap top;
    simplicial::SimplicialMap bottom;
};

std::vector<simplicial::SimplicialMap> solve_lifting_simplicial(const SimpSquare& sq,
                                                                Budget* budget = nullptr);

// Query-as-lifting over the category of elements: given the window functor
// w: Q -> R, the schema anchor nu: R -> schema, and a binding of Q into the
// instance's elements, enumerate the diagonals h: R -> ∫δ with
// proj∘h = nu and h∘w = mu.
struct QueryBinding {
    std::map<Id, Id> elements; // object of Q -> element of δ(nu(w(q)))
};

struct QuerySolution {
    QueryBinding binding;                  // the mu that was solved
    std::vector<std::map<Id, Id>> diagonals; // each: object of R -> element
};

struct QueryOptions {
    // Require distinct Q-objects to bind distinct elements (pattern matching
    // in the subgraph sense rather than the homomorphism sense).
    bool injective_bindings = false;
    // Collapse bindings that differ only by which pattern vertex carries
    // which element (same multiset of elements per schema object).
    bool dedupe_symmetric = false;
};

std::vector<QuerySolution> query_by_lifting(const FinCategory& Q, const FinCategory& R,
                                            const FinFunctor& window, const FinFunctor& nu,
                                            const elements::SetInstance& instance,
                                            const std::optional<QueryBinding>& binding,
                                            const QueryOptions& options = {},
                                            Budget* budget = nullptr);

} // namespace gaiakit::lifting
