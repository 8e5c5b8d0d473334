#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaiakit/common.hpp"

namespace gaiakit::genmetric {

using Id = std::string;

// Exact nonnegative rational with a distinguished infinity. Addition absorbs
// infinity; truncated subtraction realizes the internal hom of [0, ∞].
class ExtReal {
public:
    ExtReal() = default; // zero
    ExtReal(long long num, long long den);
    static ExtReal infinity();
    static ExtReal from_int(long long v) { return ExtReal(v, 1); }
    // parses "inf", "p/q" and plain integers
    static ExtReal parse(const std::string& text);

    bool is_infinite() const { return inf_; }
    long long num() const { return num_; }
    long long den() const { return den_; }

    friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
    friend bool operator==(const ExtReal& a, const ExtReal& b);
    friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }
    friend bool operator<(const ExtReal& a, const ExtReal& b);
    friend bool operator<=(const ExtReal& a, const ExtReal& b) { return a < b || a == b; }
    friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
    friend bool operator>=(const ExtReal& a, const ExtReal& b) { return b <= a; }

    std::string str() const;
    double approx() const;

private:
    bool inf_ = false;
    long long num_ = 0;
    long long den_ = 1;
    void normalize();
};

// Internal hom of [0, ∞]: [0,∞](u, v) = 0 when u >= v, else v - u. The only
// convention the arithmetic leaves open is ∞ - ∞, which the u >= v clause
// already sends to 0.
ExtReal truncated_diff(const ExtReal& u, const ExtReal& v);

// d(x, x) = 0 and d(x, z) <= d(x, y) + d(y, z); symmetry and finiteness are
// not required.
struct GenMetricSpace {
    std::vector<Id> carrier;
    std::map<std::pair<Id, Id>, ExtReal> distance;

    const ExtReal& d(const Id& x, const Id& y) const;
};

struct MetricViolation {
    std::string kind; // "reflexivity" / "triangle" / "structure"
    std::string detail;
};

std::vector<MetricViolation> validate_space(const GenMetricSpace& space);

// Throwing constructor used by the builders and the CLI.
GenMetricSpace make_space(std::vector<Id> carrier,
                          std::map<std::pair<Id, Id>, ExtReal> distance);

// ---------------------------------------------------------------------------
// The four standard constructions
// ---------------------------------------------------------------------------

// 0 when p <= q, ∞ otherwise. Rejects non-transitive input.
GenMetricSpace preorder_space(const std::vector<Id>& elems,
                              const std::vector<std::pair<Id, Id>>& leq);

// 0 when u is a prefix of v, else 2^-lcp(u, v).
GenMetricSpace string_space(const std::vector<Id>& words);

// 0 when u >= v, else v - u, on rational points of the half line.
GenMetricSpace halfline_space(const std::vector<ExtReal>& points);

// Non-symmetric Hausdorff distance between the nonempty subsets of a base
// space: d(V, W) = max_{v in V} min_{w in W} base(v, w). Subsets default to
// all nonempty ones; ids are "{a,b}" over sorted member names.
GenMetricSpace hausdorff_power_space(const GenMetricSpace& base,
                                     const std::vector<std::vector<Id>>* subsets = nullptr);

// ---------------------------------------------------------------------------
// Yoneda machinery
// ---------------------------------------------------------------------------

// A nonexpansive function carrier -> [0, ∞]: truncated_diff(φ(y), φ(y')) <=
// d(y', y) for all y, y'.
struct Copresheaf {
    std::vector<Id> carrier; // of the ambient space
    std::map<Id, ExtReal> values;

    const ExtReal& at(const Id& y) const;
};

// y ↦ d(y, x); validated nonexpansive before returning.
Copresheaf yoneda_embed(const GenMetricSpace& space, const Id& x);

bool is_nonexpansive(const GenMetricSpace& space, const Copresheaf& phi);

// sup_y [0,∞](φ(y), ψ(y)) — the distance of the copresheaf space.
ExtReal presheaf_distance(const Copresheaf& phi, const Copresheaf& psi);

struct IsometryReport {
    bool exact = true;
    std::optional<std::pair<Id, Id>> worst_pair;
    std::string worst_detail; // d(x,x') vs presheaf distance when not exact
};

// d(x, x') = X̂(y(x), y(x')) for every pair, exactly.
IsometryReport check_isometry(const GenMetricSpace& space);

} // namespace gaiakit::genmetric
