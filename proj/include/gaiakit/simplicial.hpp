#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gaiakit/common.hpp"
#include "gaiakit/fincat.hpp"

namespace gaiakit::simplicial {

using Id = std::string;

// A simplicial set truncated at dimension `truncation`, with all simplices
// (degenerate ones included) materialized level by level.
//
//   face[n][i]       : X_n -> X_{n-1}   for 1 <= n <= truncation, 0 <= i <= n
//   degeneracy[n][j] : X_n -> X_{n+1}   for 0 <= n <  truncation, 0 <= j <= n
//
// The stored tables satisfy the standard simplicial identities
//   d_i d_j = d_{j-1} d_i              (i < j)
//   s_i s_j = s_{j+1} s_i              (i <= j)
//   d_i s_j = s_{j-1} d_i (i < j),  id (i = j, j+1),  s_j d_{i-1} (i > j+1)
// and validate() checks all three families exhaustively.
class SimplicialSet {
public:
    int truncation = 0;
    std::vector<std::vector<Id>> simplices;                         // [n] -> ids
    std::vector<std::vector<std::map<Id, Id>>> face;                // [n][i]
    std::vector<std::vector<std::map<Id, Id>>> degeneracy;          // [n][j]

    int dim() const { return truncation; }
    bool has(int n, const Id& x) const;
    const Id& d(int n, int i, const Id& x) const;   // face
    const Id& s(int n, int j, const Id& x) const;   // degeneracy

    // x = s_j(d_j(x)) for some j < n.
    bool is_degenerate(int n, const Id& x) const;
    std::vector<Id> nondegenerate(int n) const;

    fincat::ValidationReport validate() const;
};

// Level-wise map of truncated simplicial sets commuting with all structure.
struct SimplicialMap {
    SimplicialSet source;
    SimplicialSet target;
    std::vector<std::map<Id, Id>> levels;

    const Id& at(int n, const Id& x) const;
    fincat::ValidationReport validate() const;
};

// A horn extension problem: the (n-1)-faces of Λ^n_k, mapped into the target.
// assignment[i] for each i != k is a simplex of target at dimension n-1,
// required to satisfy the face compatibilities d_i t_j = d_{j-1} t_i (i < j).
class HornProblem {
public:
    int n = 0;
    int k = 0;
    SimplicialSet target;
    std::map<int, Id> assignment;

    // Validates ranges and compatibility; throws InputError otherwise.
    static HornProblem make(int n, int k, SimplicialSet target, std::map<int, Id> assignment);
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// Nerve of a finite category, truncated at N: X_n = composable n-chains,
// outer faces drop an end, inner faces compose, degeneracies insert
// identities. 0-simplices are objects; an n-chain id is "f1|...|fn".
SimplicialSet nerve(const fincat::FinCategory& c, int N);

enum class ShapeKind { Standard, Boundary, Horn };

// Δ^n, ∂Δ^n or Λ^n_k as a truncated simplicial set. Simplices at level m are
// monotone maps [m] -> [n] encoded as dot-joined vertex tuples ("0.1.1.3").
// Truncation defaults to n when `truncation` < 0.
SimplicialSet build_shape(ShapeKind kind, int n, int k = -1, int truncation = -1);

// All n-simplices of the target whose faces match the horn assignment.
std::vector<Id> enumerate_horn_fillers(const HornProblem& p);

struct KanReport {
    bool is_kan = true;
    std::optional<HornProblem> witness;   // first unfillable horn
};

// Every horn problem Λ^n_k -> x with 0 < n <= m has a filler?
KanReport is_kan_complex(const SimplicialSet& x, int m, Budget* budget = nullptr);

struct InnerExtensionReport {
    bool complete = true;        // every inner horn has >= 1 filler
    bool unique = true;          // every inner horn has exactly 1 filler
    std::optional<HornProblem> witness;
};

// Inner horns only (0 < k < n); `unique` reports the nerve-style exactness.
InnerExtensionReport is_inner_extension_complete(const SimplicialSet& x, int m,
                                                 Budget* budget = nullptr);

// Level-wise product with Δ^1, the cylinder object used by homotopies.
// Simplices are pairs "(a;x)". Capacity-capped per level.
SimplicialSet cylinder(const SimplicialSet& x, std::int64_t level_cap = 10000);

// Exhaustive search for a homotopy h: Δ^1 × X -> Y between f0 and f1.
bool homotopic(const SimplicialMap& f0, const SimplicialMap& f1, Budget* budget = nullptr);

// All simplicial maps src -> dst (optionally pinned on some simplices),
// found by level-by-level backtracking over nondegenerate simplices.
std::vector<SimplicialMap> enumerate_simplicial_maps(
    const SimplicialSet& src, const SimplicialSet& dst,
    const std::vector<std::map<Id, Id>>* pinned = nullptr, Budget* budget = nullptr);

// The simplicial map N(F): nerve(C, N) -> nerve(D, N) induced by a functor.
SimplicialMap nerve_map(const fincat::FinFunctor& F, int N);

// Enumerate all compatible horn assignments (t_i)_{i != k} over x at
// dimension n; used by the Kan scans and the property tests.
std::vector<std::map<int, Id>> enumerate_horn_assignments(const SimplicialSet& x, int n, int k,
                                                          Budget* budget = nullptr);

// Converter from a simplicial map Λ^n_k -> X to the face-assignment form.
HornProblem horn_problem_from_map(int n, int k, const SimplicialMap& horn_to_target);

} // namespace gaiakit::simplicial
