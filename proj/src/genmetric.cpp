#include "gaiakit/genmetric.hpp"

#include <algorithm>
#include <numeric>

namespace gaiakit::genmetric {

namespace {
long long gcd_ll(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}
} // namespace

ExtReal::ExtReal(long long num, long long den) : num_(num), den_(den) { normalize(); }

void ExtReal::normalize() {
    if (inf_) {
        num_ = 0;
        den_ = 1;
        return;
    }
    if (den_ == 0) throw InputError("ExtReal: zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_ < 0) throw InputError("ExtReal: distances are nonnegative");
    long long g = gcd_ll(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

ExtReal ExtReal::infinity() {
    ExtReal r;
    r.inf_ = true;
    return r;
}

ExtReal ExtReal::parse(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF") return infinity();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return ExtReal(std::stoll(text), 1);
        return ExtReal(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw InputError("cannot parse distance value: " + text);
    }
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
    if (a.inf_ || b.inf_) return ExtReal::infinity();
    // denominators stay tiny at desk scale; overflow would need ~2^31 sized
    // values in both operands
    return ExtReal(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string ExtReal::str() const {
    if (inf_) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

double ExtReal::approx() const {
    if (inf_) return std::numeric_limits<double>::infinity();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

ExtReal truncated_diff(const ExtReal& u, const ExtReal& v) {
    if (u >= v) return ExtReal();
    if (v.is_infinite()) return ExtReal::infinity();
    return ExtReal(v.num() * u.den() - u.num() * v.den(), u.den() * v.den());
}

// ---------------------------------------------------------------------------

const ExtReal& GenMetricSpace::d(const Id& x, const Id& y) const {
    auto it = distance.find({x, y});
    if (it == distance.end()) throw InputError("distance undefined for (" + x + ", " + y + ")");
    return it->second;
}

std::vector<MetricViolation> validate_space(const GenMetricSpace& space) {
    std::vector<MetricViolation> out;
    for (const auto& x : space.carrier)
        for (const auto& y : space.carrier)
            if (!space.distance.count({x, y}))
                out.push_back({"structure", "missing entry (" + x + ", " + y + ")"});
    if (!out.empty()) return out;

    for (const auto& x : space.carrier)
        if (!(space.d(x, x) == ExtReal()))
            out.push_back({"reflexivity", "d(" + x + ", " + x + ") != 0"});

    for (const auto& x : space.carrier)
        for (const auto& y : space.carrier)
            for (const auto& z : space.carrier)
                if (!(space.d(x, z) <= space.d(x, y) + space.d(y, z)))
                    out.push_back({"triangle",
                                   "d(" + x + "," + z + ") > d(" + x + "," + y + ") + d(" + y +
                                       "," + z + ")"});
    return out;
}

GenMetricSpace make_space(std::vector<Id> carrier,
                          std::map<std::pair<Id, Id>, ExtReal> distance) {
    GenMetricSpace s;
    s.carrier = std::move(carrier);
    s.distance = std::move(distance);
    auto viol = validate_space(s);
    if (!viol.empty())
        throw InputError("not a generalized metric space: " + viol.front().kind + ", " +
                         viol.front().detail);
    return s;
}

// ---------------------------------------------------------------------------

GenMetricSpace preorder_space(const std::vector<Id>& elems,
                              const std::vector<std::pair<Id, Id>>& leq) {
    size_t n = elems.size();
    std::map<Id, size_t> idx;
    for (size_t i = 0; i < n; ++i) idx[elems[i]] = i;
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) rel[i][i] = true;
    for (const auto& [a, b] : leq) {
        if (!idx.count(a) || !idx.count(b)) throw InputError("preorder_space: unknown element");
        rel[idx[a]][idx[b]] = true;
    }
    // the input relation must already be transitive; reject rather than close
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (rel[i][j] && rel[j][k] && !rel[i][k])
                    throw InputError("preorder_space: relation is not transitive");

    std::map<std::pair<Id, Id>, ExtReal> d;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            d[{elems[i], elems[j]}] = rel[i][j] ? ExtReal() : ExtReal::infinity();
    return make_space(elems, std::move(d));
}

GenMetricSpace string_space(const std::vector<Id>& words) {
    std::map<std::pair<Id, Id>, ExtReal> d;
    for (const auto& u : words)
        for (const auto& v : words) {
            size_t lcp = 0;
            while (lcp < u.size() && lcp < v.size() && u[lcp] == v[lcp]) ++lcp;
            bool prefix = (lcp == u.size());
            if (prefix)
                d[{u, v}] = ExtReal();
            else {
                if (lcp > 62) throw InputError("string_space: prefix too long for exact dyadics");
                d[{u, v}] = ExtReal(1, 1ll << lcp);
            }
        }
    return make_space(words, std::move(d));
}

GenMetricSpace halfline_space(const std::vector<ExtReal>& points) {
    std::vector<Id> ids;
    std::map<Id, ExtReal> val;
    for (const auto& p : points) {
        ids.push_back(p.str());
        val[p.str()] = p;
    }
    std::map<std::pair<Id, Id>, ExtReal> d;
    for (const auto& u : ids)
        for (const auto& v : ids) d[{u, v}] = truncated_diff(val.at(u), val.at(v));
    return make_space(ids, std::move(d));
}

GenMetricSpace hausdorff_power_space(const GenMetricSpace& base,
                                     const std::vector<std::vector<Id>>* subsets) {
    std::vector<std::vector<Id>> subs;
    if (subsets) {
        subs = *subsets;
        for (auto& s : subs) {
            if (s.empty()) throw InputError("hausdorff_power_space: empty subset");
            std::sort(s.begin(), s.end());
        }
    } else {
        size_t n = base.carrier.size();
        if (n > 16) throw CapacityError("hausdorff_power_space: too many subsets");
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<Id> s;
            for (size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) s.push_back(base.carrier[i]);
            subs.push_back(std::move(s));
        }
    }

    auto name = [](const std::vector<Id>& s) {
        std::string out = "{";
        for (size_t i = 0; i < s.size(); ++i) {
            if (i) out += ",";
            out += s[i];
        }
        return out + "}";
    };

    std::vector<Id> ids;
    std::map<Id, const std::vector<Id>*> members;
    for (const auto& s : subs) ids.push_back(name(s));
    std::map<Id, std::vector<Id>> by_name;
    for (const auto& s : subs) by_name[name(s)] = s;

    std::map<std::pair<Id, Id>, ExtReal> d;
    for (const auto& vn : ids)
        for (const auto& wn : ids) {
            const auto& V = by_name.at(vn);
            const auto& W = by_name.at(wn);
            ExtReal worst; // max over v of min over w
            for (const auto& v : V) {
                ExtReal best = ExtReal::infinity();
                for (const auto& w : W)
                    if (base.d(v, w) < best) best = base.d(v, w);
                if (best > worst) worst = best;
            }
            d[{vn, wn}] = worst;
        }
    return make_space(ids, std::move(d));
}

// ---------------------------------------------------------------------------

const ExtReal& Copresheaf::at(const Id& y) const {
    auto it = values.find(y);
    if (it == values.end()) throw InputError("copresheaf undefined at " + y);
    return it->second;
}

bool is_nonexpansive(const GenMetricSpace& space, const Copresheaf& phi) {
    for (const auto& y : space.carrier)
        for (const auto& y2 : space.carrier)
            // [0,∞](φ(y), φ(y')) <= X^op(y, y') = d(y', y)
            if (!(truncated_diff(phi.at(y), phi.at(y2)) <= space.d(y2, y))) return false;
    return true;
}

Copresheaf yoneda_embed(const GenMetricSpace& space, const Id& x) {
    if (std::find(space.carrier.begin(), space.carrier.end(), x) == space.carrier.end())
        throw InputError("yoneda_embed: unknown point " + x);
    Copresheaf phi;
    phi.carrier = space.carrier;
    for (const auto& y : space.carrier) phi.values[y] = space.d(y, x);
    if (!is_nonexpansive(space, phi))
        throw DomainError("yoneda_embed: embedding is not nonexpansive (invalid space?)");
    return phi;
}

ExtReal presheaf_distance(const Copresheaf& phi, const Copresheaf& psi) {
    if (phi.carrier != psi.carrier)
        throw InputError("presheaf_distance: ambient spaces differ");
    ExtReal sup;
    for (const auto& y : phi.carrier) {
        ExtReal gap = truncated_diff(phi.at(y), psi.at(y));
        if (gap > sup) sup = gap;
    }
    return sup;
}

IsometryReport check_isometry(const GenMetricSpace& space) {
    IsometryReport rep;
    std::map<Id, Copresheaf> embedded;
    for (const auto& x : space.carrier) embedded[x] = yoneda_embed(space, x);
    for (const auto& x : space.carrier)
        for (const auto& x2 : space.carrier) {
            ExtReal lhs = space.d(x, x2);
            ExtReal rhs = presheaf_distance(embedded.at(x), embedded.at(x2));
            if (lhs != rhs) {
                rep.exact = false;
                rep.worst_pair = {x, x2};
                rep.worst_detail = "d = " + lhs.str() + " vs presheaf " + rhs.str();
                return rep;
            }
        }
    return rep;
}

} // namespace gaiakit::genmetric
