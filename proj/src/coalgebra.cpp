#include "gaiakit/coalgebra.hpp"

#include <algorithm>
#include <cmath>

namespace gaiakit::coalgebra {

namespace {

bool in_carrier(const Coalgebra& c, const Id& s) {
    return std::find(c.carrier.begin(), c.carrier.end(), s) != c.carrier.end();
}

} // namespace

void Coalgebra::check_well_formed() const {
    for (const auto& s : carrier) {
        switch (spec.kind) {
            case FunctorKind::Powerset: {
                auto it = successors.find(s);
                if (it == successors.end())
                    throw InputError("powerset coalgebra missing state " + s);
                for (const auto& n : it->second)
                    if (!in_carrier(*this, n))
                        throw InputError("successor " + n + " outside carrier");
                break;
            }
            case FunctorKind::Stream: {
                if (!stream_out.count(s) || !stream_next.count(s))
                    throw InputError("stream coalgebra missing state " + s);
                if (!in_carrier(*this, stream_next.at(s)))
                    throw InputError("stream tail leaves the carrier at " + s);
                if (std::find(spec.alphabet.begin(), spec.alphabet.end(), stream_out.at(s)) ==
                    spec.alphabet.end())
                    throw InputError("stream output not in alphabet at " + s);
                break;
            }
            case FunctorKind::Lts: {
                auto it = lts_succ.find(s);
                if (it == lts_succ.end()) throw InputError("LTS coalgebra missing state " + s);
                for (const auto& [a, n] : it->second) {
                    if (std::find(spec.alphabet.begin(), spec.alphabet.end(), a) ==
                        spec.alphabet.end())
                        throw InputError("label " + a + " not in alphabet");
                    if (!in_carrier(*this, n))
                        throw InputError("transition target " + n + " outside carrier");
                }
                break;
            }
        }
    }
}

HomReport check_homomorphism(const std::map<Id, Id>& f, const Coalgebra& source,
                             const Coalgebra& target) {
    if (source.spec.kind != target.spec.kind)
        throw InputError("homomorphism check requires the same endofunctor");
    if (source.spec.alphabet != target.spec.alphabet)
        throw InputError("homomorphism check requires the same alphabet");

    auto fv = [&](const Id& s) {
        auto it = f.find(s);
        if (it == f.end()) throw InputError("state map undefined on " + s);
        if (!std::count(target.carrier.begin(), target.carrier.end(), it->second))
            throw InputError("state map leaves the target carrier at " + s);
        return it->second;
    };

    for (const auto& s : source.carrier) {
        switch (source.spec.kind) {
            case FunctorKind::Powerset: {
                std::set<Id> image;
                for (const auto& n : source.successors.at(s)) image.insert(fv(n));
                if (image != target.successors.at(fv(s))) return {false, s};
                break;
            }
            case FunctorKind::Stream: {
                if (source.stream_out.at(s) != target.stream_out.at(fv(s))) return {false, s};
                if (fv(source.stream_next.at(s)) != target.stream_next.at(fv(s)))
                    return {false, s};
                break;
            }
            case FunctorKind::Lts: {
                std::set<std::pair<Id, Id>> image;
                for (const auto& [a, n] : source.lts_succ.at(s)) image.insert({a, fv(n)});
                if (image != target.lts_succ.at(fv(s))) return {false, s};
                break;
            }
        }
    }
    return {true, std::nullopt};
}

// ---------------------------------------------------------------------------

bool Bisimulation::contains(const Id& s, const Id& t) const {
    return std::find(pairs.begin(), pairs.end(), std::make_pair(s, t)) != pairs.end();
}

bool is_bisimulation(const Coalgebra& lhs, const Coalgebra& rhs,
                     const std::vector<std::pair<Id, Id>>& pairs) {
    if (lhs.spec.kind != FunctorKind::Lts || rhs.spec.kind != FunctorKind::Lts)
        throw InputError("is_bisimulation expects LTS coalgebras");
    auto related = [&](const Id& s, const Id& t) {
        return std::find(pairs.begin(), pairs.end(), std::make_pair(s, t)) != pairs.end();
    };
    for (const auto& [s, t] : pairs) {
        for (const auto& [a, s2] : lhs.lts_succ.at(s)) {
            bool matched = false;
            for (const auto& [b, t2] : rhs.lts_succ.at(t))
                if (a == b && related(s2, t2)) matched = true;
            if (!matched) return false;
        }
        for (const auto& [a, t2] : rhs.lts_succ.at(t)) {
            bool matched = false;
            for (const auto& [b, s2] : lhs.lts_succ.at(s))
                if (a == b && related(s2, t2)) matched = true;
            if (!matched) return false;
        }
    }
    return true;
}

Bisimulation greatest_bisimulation(const Coalgebra& lhs, const Coalgebra& rhs) {
    if (lhs.spec.kind != FunctorKind::Lts || rhs.spec.kind != FunctorKind::Lts)
        throw InputError("greatest_bisimulation expects LTS coalgebras");
    if (lhs.spec.alphabet != rhs.spec.alphabet)
        throw InputError("greatest_bisimulation: label alphabets differ");
    lhs.check_well_formed();
    rhs.check_well_formed();

    // Partition refinement on the disjoint union: states are split by their
    // (label, target-block) signatures until stable.
    struct Tagged {
        int side; // 0 = lhs, 1 = rhs
        Id state;
    };
    std::vector<Tagged> states;
    for (const auto& s : lhs.carrier) states.push_back({0, s});
    for (const auto& t : rhs.carrier) states.push_back({1, t});

    std::map<std::pair<int, Id>, int> block;
    for (const auto& st : states) block[{st.side, st.state}] = 0;

    auto succs = [&](const Tagged& st) -> const std::set<std::pair<Id, Id>>& {
        return st.side == 0 ? lhs.lts_succ.at(st.state) : rhs.lts_succ.at(st.state);
    };

    bool changed = true;
    while (changed) {
        changed = false;
        // signature: current block + sorted set of (label, successor block)
        std::map<std::pair<int, std::set<std::pair<Id, int>>>, int> sig_to_block;
        std::map<std::pair<int, Id>, int> next;
        int next_id = 0;
        for (const auto& st : states) {
            std::set<std::pair<Id, int>> sig;
            for (const auto& [a, n] : succs(st)) sig.insert({a, block.at({st.side, n})});
            auto key = std::make_pair(block.at({st.side, st.state}), sig);
            auto it = sig_to_block.find(key);
            if (it == sig_to_block.end()) it = sig_to_block.emplace(key, next_id++).first;
            next[{st.side, st.state}] = it->second;
        }
        if (next != block) {
            block = std::move(next);
            changed = true;
        }
    }

    Bisimulation out;
    for (const auto& s : lhs.carrier)
        for (const auto& t : rhs.carrier)
            if (block.at({0, s}) == block.at({1, t})) out.pairs.push_back({s, t});

    // canonical mediating structure map
    for (const auto& [s, t] : out.pairs) {
        auto& entry = out.structure[{s, t}];
        for (const auto& [a, s2] : lhs.lts_succ.at(s))
            for (const auto& [b, t2] : rhs.lts_succ.at(t))
                if (a == b && out.contains(s2, t2)) entry.insert({a, {s2, t2}});
    }
    return out;
}

std::vector<Id> behavior(const Coalgebra& stream, const Id& state, int depth) {
    if (stream.spec.kind != FunctorKind::Stream)
        throw InputError("behavior expects a stream coalgebra");
    if (depth < 0) throw InputError("behavior: negative depth");
    std::vector<Id> out;
    Id cur = state;
    for (int i = 0; i < depth; ++i) {
        out.push_back(stream.stream_out.at(cur)); // head
        cur = stream.stream_next.at(cur);         // tail
    }
    return out;
}

Coalgebra stream_as_lts(const Coalgebra& stream) {
    if (stream.spec.kind != FunctorKind::Stream)
        throw InputError("stream_as_lts expects a stream coalgebra");
    Coalgebra out;
    out.spec.kind = FunctorKind::Lts;
    out.spec.alphabet = stream.spec.alphabet;
    out.carrier = stream.carrier;
    for (const auto& s : stream.carrier)
        out.lts_succ[s] = {{stream.stream_out.at(s), stream.stream_next.at(s)}};
    return out;
}

// ---------------------------------------------------------------------------

std::tuple<learn::Vec, learn::Vec, learn::Vec> BackpropDynamics::step(const learn::Vec& p,
                                                                      int t) const {
    if (samples.empty()) throw InputError("BackpropDynamics: no samples");
    const auto& [a, b] = samples[static_cast<size_t>(t) % samples.size()];
    return {a, b, learner.update(p, a, b)};
}

std::vector<learn::Vec> BackpropDynamics::unfold(const learn::Vec& p0, int k) const {
    std::vector<learn::Vec> out = {p0};
    learn::Vec p = p0;
    for (int t = 0; t < k; ++t) {
        auto [a, b, next] = step(p, t);
        p = next;
        out.push_back(p);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

double norm_diff(const learn::Vec& a, const learn::Vec& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

} // namespace

CoinductionResult metric_coinduction_iterate(
    const std::function<learn::Vec(const learn::Vec&)>& H, const learn::Vec& x0,
    std::optional<double> modulus, double tol,
    const std::function<bool(const learn::Vec&)>& invariant, int max_iterations) {
    if (tol <= 0) throw InputError("metric_coinduction_iterate: tol must be positive");
    if (modulus && (*modulus < 0 || *modulus >= 1))
        throw InputError("metric_coinduction_iterate: modulus must lie in [0, 1)");

    CoinductionResult res;
    auto& cert = res.certificate;
    cert.modulus_estimated = !modulus.has_value();

    learn::Vec prev = x0;
    learn::Vec cur = H(x0);
    double step = norm_diff(cur, prev);
    double est = 0.0;
    int bad_streak = 0;

    // Track ratios for H and for H∘H on the same trajectory.
    double prev_step = step;
    double prev_prev_step = 0.0;
    bool have_two = false;
    cert.h_contracts = true;
    cert.h_squared_contracts = true;

    for (int it = 1; it <= max_iterations; ++it) {
        cert.iterations = it;
        double c = modulus ? *modulus : std::max(est, 0.5); // conservative early estimate
        double threshold = (c > 0) ? tol * (1 - c) / c : tol;
        if (step <= threshold || step == 0.0) {
            cert.converged = true;
            break;
        }
        learn::Vec next = H(cur);
        double new_step = norm_diff(next, cur);
        if (step > 0) {
            double ratio = new_step / step;
            cert.observed_ratios.push_back(ratio);
            est = std::max(est, ratio);
            if (ratio >= 1.0) {
                cert.h_contracts = false;
                if (++bad_streak >= 10)
                    throw DomainError("metric_coinduction_iterate: no contraction observed "
                                      "for 10 consecutive steps");
            } else
                bad_streak = 0;
        }
        if (have_two && prev_prev_step > 0 && new_step / prev_prev_step >= 1.0)
            cert.h_squared_contracts = false;
        prev_prev_step = prev_step;
        prev_step = new_step;
        have_two = true;

        prev = cur;
        cur = next;
        step = new_step;
    }

    res.fixed_point = cur;
    cert.modulus = modulus ? *modulus : est;
    cert.final_step = step;
    cert.final_residual = norm_diff(H(cur), cur);
    if (invariant) cert.invariant_holds = invariant(cur);
    return res;
}

} // namespace gaiakit::coalgebra
