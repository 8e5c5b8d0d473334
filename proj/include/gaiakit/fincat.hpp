#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gaiakit/common.hpp"

namespace gaiakit::fincat {

using Id = std::string;

struct Morphism {
    Id id;
    Id dom;
    Id cod;
};

struct Violation {
    std::string kind;   // "structure", "identity-law", "associativity", ...
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// A finite category presented by explicit tables: every object, every
// morphism, the identity assignment and the full composition table.
// Identifiers are opaque strings; equality is identifier equality.
class FinCategory {
public:
    std::vector<Id> objects;                       // sorted, unique
    std::vector<Morphism> morphisms;               // sorted by id, unique
    std::map<Id, Id> identity;                     // object -> morphism id
    std::map<std::pair<Id, Id>, Id> composition;   // (g, f) -> g∘f

    static FinCategory make(std::vector<Id> objects,
                            std::vector<Morphism> morphisms,
                            std::map<Id, Id> identity,
                            std::map<std::pair<Id, Id>, Id> composition);

    bool has_object(const Id& o) const;
    bool has_morphism(const Id& m) const;
    const Morphism& morphism(const Id& m) const;      // throws InputError
    Id identity_of(const Id& o) const;                // throws InputError
    bool is_identity(const Id& m) const;

    // g∘f; requires dom(g) = cod(f) and a table entry. Throws InputError.
    Id compose(const Id& g, const Id& f) const;

    bool defined(const Id& g, const Id& f) const;
};

// Total functor given by tables on objects and morphisms.
struct FinFunctor {
    FinCategory source;
    FinCategory target;
    std::map<Id, Id> object_map;
    std::map<Id, Id> morphism_map;

    Id on_object(const Id& o) const;
    Id on_morphism(const Id& m) const;
};

// Natural transformation between parallel functors; one target morphism
// per source object.
struct NaturalTransformation {
    FinFunctor source;
    FinFunctor target;
    std::map<Id, Id> components;   // object of source category -> morphism of target category
};

// Finite Set-valued diagram: a shape category, a finite set per object and
// a total function per morphism.
struct SetDiagram {
    FinCategory shape;
    std::map<Id, std::vector<Id>> sets;                  // object -> elements (sorted, unique)
    std::map<Id, std::map<Id, Id>> functions;            // morphism -> elementwise map
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// Checks the category axioms; the report lists every violated instance.
// Structural errors (dangling identifiers, partial tables) are reported with
// kind "structure" and suppress the axiom checks that depend on them.
ValidationReport validate_category(const FinCategory& c);

// All morphisms a -> b. Throws InputError on unknown objects.
std::vector<Id> hom_set(const FinCategory& c, const Id& a, const Id& b);

ValidationReport validate_functor(const FinFunctor& F);

ValidationReport validate_natural_transformation(const NaturalTransformation& alpha);

ValidationReport validate_diagram(const SetDiagram& d);

// G∘F (apply F first). Requires F.target and G.source to agree on the nose.
FinFunctor compose_functors(const FinFunctor& G, const FinFunctor& F);

FinFunctor identity_functor(const FinCategory& c);

// Comma category F ↓ G for functors F: C -> E, G: D -> E sharing target E.
// Objects are triples (c, d, f: Fc -> Gd); morphisms are pairs (a: c -> c',
// b: d -> d') with Gb ∘ f = f' ∘ Fa.
struct CommaCategory {
    FinCategory category;
    FinFunctor proj_left;    // to F.source
    FinFunctor proj_right;   // to G.source
    // object id in `category` -> the triple it encodes
    std::map<Id, std::tuple<Id, Id, Id>> triples;
};
CommaCategory comma_category(const FinFunctor& F, const FinFunctor& G);

// Colimit of a finite Set-valued diagram: quotient of the disjoint union by
// the relation generated by x ~ d(f)(x). Class names are canonicalized by
// their least member tag so outputs are deterministic.
struct SetColimit {
    std::vector<Id> elements;
    std::map<Id, std::map<Id, Id>> injections;   // diagram object -> (element -> class)
};
SetColimit set_colimit(const SetDiagram& d);

// Limit: all families (x_j) with d(f)(x_j) = x_k for every f: j -> k.
struct SetLimit {
    std::vector<Id> elements;                      // encoded families
    std::map<Id, std::map<Id, Id>> projections;    // diagram object -> (family -> component)
    // family element -> (object -> component) for direct inspection
    std::map<Id, std::map<Id, Id>> families;
};
SetLimit set_limit(const SetDiagram& d);

// ---------------------------------------------------------------------------
// Presentation helpers (finite posets, free categories, cyclic monoids, ...)
// ---------------------------------------------------------------------------

// The poset [n] = {0 <= 1 <= ... <= n} as a category; morphism "i<=j".
FinCategory poset_category(int n);

// Thin category of an arbitrary preorder given by its relation pairs
// (reflexive-transitive closure is taken).
FinCategory preorder_category(const std::vector<Id>& elems,
                              const std::vector<std::pair<Id, Id>>& leq);

// Free category on a finite acyclic multigraph: morphisms are paths.
struct GraphEdge {
    Id id;
    Id src;
    Id dst;
};
FinCategory free_category(const std::vector<Id>& vertices,
                          const std::vector<GraphEdge>& edges);

// One-object category of the cyclic group Z/n (n >= 1); morphisms "g0".."g{n-1}".
FinCategory cyclic_group_category(int n);

FinCategory discrete_category(const std::vector<Id>& objects);

// Exhaustive enumeration of all functors C -> D (desk scale; budget-guarded).
std::vector<FinFunctor> enumerate_functors(const FinCategory& C, const FinCategory& D,
                                           Budget* budget = nullptr);

} // namespace gaiakit::fincat
