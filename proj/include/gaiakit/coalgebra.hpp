#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gaiakit/common.hpp"
#include "gaiakit/learn.hpp"

namespace gaiakit::coalgebra {

using Id = std::string;

// The endofunctor shapes the transition structure ranges over.
enum class FunctorKind { Powerset, Stream, Lts };

struct EndofunctorSpec {
    FunctorKind kind = FunctorKind::Powerset;
    std::vector<Id> alphabet; // stream outputs or LTS labels; empty for Powerset
};

// Finite coalgebra: one transition record per carrier state.
//   Powerset: successors[s]        (subset of carrier)
//   Stream:   stream_out[s], stream_next[s]
//   Lts:      lts_succ[s]          (set of (label, state))
struct Coalgebra {
    EndofunctorSpec spec;
    std::vector<Id> carrier;

    std::map<Id, std::set<Id>> successors;
    std::map<Id, Id> stream_out;
    std::map<Id, Id> stream_next;
    std::map<Id, std::set<std::pair<Id, Id>>> lts_succ;

    void check_well_formed() const; // throws InputError
};

struct HomReport {
    bool is_homomorphism = true;
    std::optional<Id> violating_state;
};

// F(f) ∘ α_S = α_T ∘ f, state by state, with the functor's action on maps.
HomReport check_homomorphism(const std::map<Id, Id>& f, const Coalgebra& source,
                             const Coalgebra& target);

// A relation with its mediating structure map (built canonically for LTS).
struct Bisimulation {
    std::vector<std::pair<Id, Id>> pairs;
    // canonical mediating map: (s,t) -> set of (label, (s',t'))
    std::map<std::pair<Id, Id>, std::set<std::pair<Id, std::pair<Id, Id>>>> structure;

    bool contains(const Id& s, const Id& t) const;
};

// Greatest bisimulation between two LTS coalgebras: partition refinement on
// the disjoint union, restricted to cross pairs.
Bisimulation greatest_bisimulation(const Coalgebra& lhs, const Coalgebra& rhs);

// Re-verify both projection squares of a candidate relation; true iff it is
// a bisimulation.
bool is_bisimulation(const Coalgebra& lhs, const Coalgebra& rhs,
                     const std::vector<std::pair<Id, Id>>& pairs);

// Iterated head/tail unfolding of a stream coalgebra.
std::vector<Id> behavior(const Coalgebra& stream, const Id& state, int depth);

// A stream machine re-read as a deterministic LTS (labels = outputs), so
// stream bisimilarity reuses the LTS machinery.
Coalgebra stream_as_lts(const Coalgebra& stream);

// ---------------------------------------------------------------------------
// Parameter-update dynamics as a coalgebra
// ---------------------------------------------------------------------------

// One-step dynamical system wrapping a learner: state = parameter vector,
// each step consumes the next (a, b) sample and emits the new parameters.
struct BackpropDynamics {
    learn::Learner learner;
    std::vector<std::pair<learn::Vec, learn::Vec>> samples; // cycled

    // (input, output, next parameters) at step t from state p
    std::tuple<learn::Vec, learn::Vec, learn::Vec> step(const learn::Vec& p, int t) const;

    // parameter trajectory of length k+1 starting at p0
    std::vector<learn::Vec> unfold(const learn::Vec& p0, int k) const;
};

// ---------------------------------------------------------------------------
// Metric coinduction
// ---------------------------------------------------------------------------

struct CoinductionCertificate {
    bool converged = false;
    int iterations = 0;
    double modulus = 0.0;        // supplied or estimated
    bool modulus_estimated = false;
    double final_step = 0.0;     // ||x_{n+1} - x_n||
    double final_residual = 0.0; // ||H(x*) - x*||
    std::vector<double> observed_ratios;
    bool h_contracts = false;        // ratios of H stayed < 1 over the burn-in
    bool h_squared_contracts = false; // same for H∘H
    bool invariant_holds = true;     // φ(x*) when a predicate was supplied
};

// Iterate an (eventually) contractive map to its fixed point with the
// stopping rule ||x_{n+1} - x_n|| <= tol (1-c)/c, which bounds the distance
// to the fixed point by tol.
struct CoinductionResult {
    learn::Vec fixed_point;
    CoinductionCertificate certificate;
};

CoinductionResult metric_coinduction_iterate(
    const std::function<learn::Vec(const learn::Vec&)>& H, const learn::Vec& x0,
    std::optional<double> modulus, double tol,
    const std::function<bool(const learn::Vec&)>& invariant = nullptr, int max_iterations = 100000);

} // namespace gaiakit::coalgebra
