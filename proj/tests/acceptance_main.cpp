// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned here, in code.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>

#include "gaiakit/coalgebra.hpp"
#include "gaiakit/elements.hpp"
#include "gaiakit/fincat.hpp"
#include "gaiakit/genmetric.hpp"
#include "gaiakit/homology.hpp"
#include "gaiakit/learn.hpp"
#include "gaiakit/lifting.hpp"
#include "gaiakit/simplicial.hpp"
#include "gaiakit/transformer.hpp"
#include "testers.hpp"

using namespace gaiakit;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int number;
    std::string description;
    std::function<bool(std::string&)> body;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

// Shared random category suite (criteria 1 and 3 use the same 50 categories).
std::vector<fincat::FinCategory> random_suite() {
    std::vector<fincat::FinCategory> out;
    auto g = testers::rng(7777);
    while (out.size() < 50) {
        auto c = testers::random_category(g, 4);
        if (fincat::validate_category(c).ok()) out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------

bool criterion1(std::string& detail) {
    auto start = Clock::now();
    auto suite = random_suite();
    for (size_t i = 0; i < suite.size(); ++i) {
        auto X = simplicial::nerve(suite[i], 3);
        auto rep = X.validate();
        if (!rep.ok()) {
            detail = "identities fail on category " + std::to_string(i) + ": " +
                     rep.violations.front().detail;
            return false;
        }
    }
    double secs = seconds_since(start);
    detail = "50 nerves at N=3, all identities, " + std::to_string(secs) + " s";
    return secs < 10.0;
}

bool criterion2(std::string& detail) {
    auto g = testers::rng(2025);
    for (int trial = 0; trial < 20; ++trial) {
        auto C = testers::random_category(g, 3);
        auto D = testers::random_category(g, 3);
        auto functors = fincat::enumerate_functors(C, D);
        auto maps = simplicial::enumerate_simplicial_maps(simplicial::nerve(C, 2),
                                                          simplicial::nerve(D, 2));
        if (functors.size() != maps.size()) {
            detail = "trial " + std::to_string(trial) + ": " +
                     std::to_string(functors.size()) + " functors vs " +
                     std::to_string(maps.size()) + " simplicial maps";
            return false;
        }
        // θ: functor -> induced simplicial map, explicitly constructed; counts
        // equal + injectivity make it a bijection
        std::set<std::vector<std::map<std::string, std::string>>> images;
        for (const auto& F : functors) {
            auto h = simplicial::nerve_map(F, 2);
            if (!h.validate().ok()) {
                detail = "induced map of a functor is not simplicial";
                return false;
            }
            images.insert(h.levels);
        }
        if (images.size() != functors.size()) {
            detail = "θ is not injective on trial " + std::to_string(trial);
            return false;
        }
    }
    detail = "20 random pairs, counts equal with explicit bijection";
    return true;
}

bool criterion3(std::string& detail) {
    // Inner horns of nerves: exactly one filler, for every inner horn
    // assignment up to n = 3 across the random suite.
    auto suite = random_suite();
    long long horns = 0;
    for (const auto& c : suite) {
        auto X = simplicial::nerve(c, 3);
        for (int n = 2; n <= 3; ++n)
            for (int k = 1; k < n; ++k) {
                Budget b(50'000'000);
                for (auto& asg : simplicial::enumerate_horn_assignments(X, n, k, &b)) {
                    auto p = simplicial::HornProblem::make(n, k, X, asg);
                    size_t count = simplicial::enumerate_horn_fillers(p).size();
                    ++horns;
                    if (count != 1) {
                        detail = "inner horn with " + std::to_string(count) + " fillers";
                        return false;
                    }
                }
            }
    }

    // nerve(Z/2) is Kan up to dim 3
    auto z2 = simplicial::nerve(fincat::cyclic_group_category(2), 3);
    if (!simplicial::is_kan_complex(z2, 3).is_kan) {
        detail = "nerve(Z/2) failed the Kan check";
        return false;
    }

    // nerve([1]) fails the documented outer horn
    auto p1 = simplicial::nerve(fincat::poset_category(1), 2);
    auto rep = simplicial::is_kan_complex(p1, 2);
    if (rep.is_kan || !rep.witness || rep.witness->n != 2 || rep.witness->k != 0) {
        detail = "nerve([1]) did not produce the documented outer-horn witness";
        return false;
    }
    auto documented = simplicial::HornProblem::make(2, 0, p1, {{1, "0<=0"}, {2, "0<=1"}});
    if (!simplicial::enumerate_horn_fillers(documented).empty()) {
        detail = "documented outer horn unexpectedly has fillers";
        return false;
    }

    detail = std::to_string(horns) + " inner horns all unique; Z/2 Kan; [1] witness found";
    return true;
}

bool criterion4(std::string& detail) {
    auto g = testers::rng(4004);
    double worst = 0.0;
    // 20 random composable pairs of library primitives with quadratic error
    for (int trial = 0; trial < 20; ++trial) {
        int mid = testers::uniform_int(g, 1, 3);
        int in = testers::uniform_int(g, 1, 3);
        int out = testers::uniform_int(g, 1, 3);
        learn::ParamFn f, gfn;
        switch (testers::uniform_int(g, 0, 2)) {
            case 0: f = learn::affine_fn(in, mid); break;
            case 1: f = learn::linear_fn(in, mid); break;
            default:
                f = learn::compose_paramfn(learn::pointwise_tanh_fn(mid),
                                           learn::affine_fn(in, mid));
        }
        switch (testers::uniform_int(g, 0, 2)) {
            case 0: gfn = learn::affine_fn(mid, out); break;
            case 1: gfn = learn::linear_fn(mid, out); break;
            default:
                gfn = learn::compose_paramfn(learn::pointwise_tanh_fn(out),
                                             learn::affine_fn(mid, out));
        }
        auto rep = learn::functoriality_check(f, gfn, 0.1, learn::quadratic_error(), 100,
                                              9000 + trial, 1e-9);
        worst = std::max(worst, rep.max_deviation);
        if (!rep.pass) {
            detail = "pair " + std::to_string(trial) + " deviates by " +
                     std::to_string(rep.max_deviation) + " in " + rep.worst_part;
            return false;
        }
        double grad = std::max(learn::gradient_check(f, 500 + trial),
                               learn::gradient_check(gfn, 700 + trial));
        if (grad > 1e-5) {
            detail = "gradient check exceeded 1e-5: " + std::to_string(grad);
            return false;
        }
    }
    detail = "20 pairs, max deviation " + sci(worst) + " <= 1e-9, gradients <= 1e-5";
    return true;
}

bool criterion5(std::string& detail) {
    double worst = 0.0;

    // all 24 permutations at n = 4
    auto block4 = learn::TransformerBlock::random(501, 3, 2, 2, 5);
    learn::Matrix X4(3, 4);
    std::mt19937_64 rng(502);
    auto u = [&]() { return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0; };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) X4.at(i, j) = u();
    std::vector<int> perm = {0, 1, 2, 3};
    int count4 = 0;
    do {
        worst = std::max(worst, learn::equivariance_deviation(block4, X4, perm));
        ++count4;
    } while (std::next_permutation(perm.begin(), perm.end()));

    // 50 random permutations at n = 16
    auto block16 = learn::TransformerBlock::random(503, 4, 2, 3, 6);
    learn::Matrix X16(4, 16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 16; ++j) X16.at(i, j) = u();
    std::vector<int> p16(16);
    for (int i = 0; i < 16; ++i) p16[i] = i;
    for (int s = 0; s < 50; ++s) {
        for (int i = 15; i > 0; --i)
            std::swap(p16[i], p16[rng() % static_cast<std::uint64_t>(i + 1)]);
        worst = std::max(worst, learn::equivariance_deviation(block16, X16, p16));
    }

    detail = std::to_string(count4) + " exhaustive + 50 sampled permutations, max deviation " +
             sci(worst);
    return count4 == 24 && worst <= 1e-6;
}

bool criterion6(std::string& detail) {
    using elements::SetInstance;
    struct Fixture {
        fincat::FinFunctor F;
        SetInstance delta; // over source
        SetInstance eps;   // over target
    };
    std::vector<Fixture> fixtures;

    auto mk_discrete_instance = [](const fincat::FinCategory& c,
                                   std::map<std::string, std::vector<std::string>> tables) {
        SetInstance inst;
        inst.schema = c;
        inst.tables = std::move(tables);
        for (const auto& o : c.objects) {
            std::map<std::string, std::string> idm;
            for (const auto& x : inst.tables.at(o)) idm[x] = x;
            inst.actions[c.identity_of(o)] = idm;
        }
        return inst;
    };

    // collapse {a,b} -> {c}
    {
        Fixture fx;
        fx.F.source = fincat::discrete_category({"a", "b"});
        fx.F.target = fincat::discrete_category({"c"});
        fx.F.object_map = {{"a", "c"}, {"b", "c"}};
        fx.F.morphism_map = {{"id_a", "id_c"}, {"id_b", "id_c"}};
        fx.delta = mk_discrete_instance(fx.F.source, {{"a", {"1", "2"}}, {"b", {"3"}}});
        fx.eps = mk_discrete_instance(fx.F.target, {{"c", {"u", "v"}}});
        fixtures.push_back(fx);
    }
    // identity on [1]
    {
        Fixture fx;
        auto p1 = fincat::poset_category(1);
        fx.F = fincat::identity_functor(p1);
        fx.delta.schema = p1;
        fx.delta.tables = {{"0", {"x", "y"}}, {"1", {"z"}}};
        fx.delta.actions = {{"0<=0", {{"x", "x"}, {"y", "y"}}},
                            {"0<=1", {{"x", "z"}, {"y", "z"}}},
                            {"1<=1", {{"z", "z"}}}};
        fx.eps.schema = p1;
        fx.eps.tables = {{"0", {"p"}}, {"1", {"q", "r"}}};
        fx.eps.actions = {{"0<=0", {{"p", "p"}}},
                          {"0<=1", {{"p", "q"}}},
                          {"1<=1", {{"q", "q"}, {"r", "r"}}}};
        fixtures.push_back(fx);
    }
    // endpoint inclusion [1] -> [2]
    {
        Fixture fx;
        fx.F.source = fincat::poset_category(1);
        fx.F.target = fincat::poset_category(2);
        fx.F.object_map = {{"0", "0"}, {"1", "2"}};
        fx.F.morphism_map = {{"0<=0", "0<=0"}, {"0<=1", "0<=2"}, {"1<=1", "2<=2"}};
        fx.delta.schema = fx.F.source;
        fx.delta.tables = {{"0", {"x", "y"}}, {"1", {"z"}}};
        fx.delta.actions = {{"0<=0", {{"x", "x"}, {"y", "y"}}},
                            {"0<=1", {{"x", "z"}, {"y", "z"}}},
                            {"1<=1", {{"z", "z"}}}};
        fx.eps.schema = fx.F.target;
        fx.eps.tables = {{"0", {"p"}}, {"1", {"q", "r"}}, {"2", {"s"}}};
        fx.eps.actions = {{"0<=0", {{"p", "p"}}},
                          {"0<=1", {{"p", "q"}}},
                          {"0<=2", {{"p", "s"}}},
                          {"1<=1", {{"q", "q"}, {"r", "r"}}},
                          {"1<=2", {{"q", "s"}, {"r", "s"}}},
                          {"2<=2", {{"s", "s"}}}};
        fixtures.push_back(fx);
    }
    // surjection [2] -> [1] collapsing 1, 2
    {
        Fixture fx;
        fx.F.source = fincat::poset_category(2);
        fx.F.target = fincat::poset_category(1);
        fx.F.object_map = {{"0", "0"}, {"1", "1"}, {"2", "1"}};
        fx.F.morphism_map = {{"0<=0", "0<=0"}, {"0<=1", "0<=1"}, {"0<=2", "0<=1"},
                             {"1<=1", "1<=1"}, {"1<=2", "1<=1"}, {"2<=2", "1<=1"}};
        fx.delta.schema = fx.F.source;
        fx.delta.tables = {{"0", {"a"}}, {"1", {"b", "c"}}, {"2", {"d"}}};
        fx.delta.actions = {{"0<=0", {{"a", "a"}}},
                            {"0<=1", {{"a", "b"}}},
                            {"0<=2", {{"a", "d"}}},
                            {"1<=1", {{"b", "b"}, {"c", "c"}}},
                            {"1<=2", {{"b", "d"}, {"c", "d"}}},
                            {"2<=2", {{"d", "d"}}}};
        fx.eps.schema = fx.F.target;
        fx.eps.tables = {{"0", {"p", "q"}}, {"1", {"r"}}};
        fx.eps.actions = {{"0<=0", {{"p", "p"}, {"q", "q"}}},
                          {"0<=1", {{"p", "r"}, {"q", "r"}}},
                          {"1<=1", {{"r", "r"}}}};
        fixtures.push_back(fx);
    }

    for (size_t i = 0; i < fixtures.size(); ++i) {
        const auto& fx = fixtures[i];
        if (!fincat::validate_functor(fx.F).ok() ||
            !elements::validate_instance(fx.delta).ok() ||
            !elements::validate_instance(fx.eps).ok()) {
            detail = "fixture " + std::to_string(i) + " is malformed";
            return false;
        }
        auto sigma = elements::left_kan_migration(fx.F, fx.delta);
        auto pi = elements::right_kan_migration(fx.F, fx.delta);
        auto pulled = elements::pullback_migration(fx.F, fx.eps);
        if (!elements::validate_instance(sigma).ok() || !elements::validate_instance(pi).ok()) {
            detail = "migrated instance fails functoriality on fixture " + std::to_string(i);
            return false;
        }
        size_t lhs1 = elements::natural_transformations(sigma, fx.eps).size();
        size_t rhs1 = elements::natural_transformations(fx.delta, pulled).size();
        if (lhs1 != rhs1) {
            detail = "Σ adjunction count mismatch on fixture " + std::to_string(i) + ": " +
                     std::to_string(lhs1) + " vs " + std::to_string(rhs1);
            return false;
        }
        size_t lhs2 = elements::natural_transformations(fx.eps, pi).size();
        size_t rhs2 = elements::natural_transformations(pulled, fx.delta).size();
        if (lhs2 != rhs2) {
            detail = "Π adjunction count mismatch on fixture " + std::to_string(i) + ": " +
                     std::to_string(lhs2) + " vs " + std::to_string(rhs2);
            return false;
        }
        if (!elements::verify_elements_pullback(fx.F, fx.eps).holds) {
            detail = "elements pullback fails on fixture " + std::to_string(i);
            return false;
        }
    }
    detail = std::to_string(fixtures.size()) + " fixtures, both adjunction counts and the "
             "pullback square";
    return true;
}

bool criterion7(std::string& detail) {
    using coalgebra::Coalgebra;
    using coalgebra::FunctorKind;
    auto g = testers::rng(71717);

    auto random_lts = [&](int max_states) {
        Coalgebra c;
        c.spec.kind = FunctorKind::Lts;
        c.spec.alphabet = {"a", "b"};
        int n = testers::uniform_int(g, 1, max_states);
        for (int i = 0; i < n; ++i) c.carrier.push_back("s" + std::to_string(i));
        for (const auto& s : c.carrier) c.lts_succ[s] = {};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (const auto& l : c.spec.alphabet)
                    if (testers::uniform_int(g, 0, 3) == 0)
                        c.lts_succ[c.carrier[i]].insert({l, c.carrier[j]});
        return c;
    };

    auto naive = [](const Coalgebra& L, const Coalgebra& R) {
        std::set<std::pair<std::string, std::string>> rel;
        for (const auto& s : L.carrier)
            for (const auto& t : R.carrier) rel.insert({s, t});
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = rel.begin(); it != rel.end();) {
                const auto& [s, t] = *it;
                bool ok = true;
                for (const auto& [a, s2] : L.lts_succ.at(s)) {
                    bool m = false;
                    for (const auto& [b, t2] : R.lts_succ.at(t))
                        if (a == b && rel.count({s2, t2})) m = true;
                    if (!m) ok = false;
                }
                for (const auto& [a, t2] : R.lts_succ.at(t)) {
                    bool m = false;
                    for (const auto& [b, s2] : L.lts_succ.at(s))
                        if (a == b && rel.count({s2, t2})) m = true;
                    if (!m) ok = false;
                }
                if (!ok) {
                    it = rel.erase(it);
                    changed = true;
                } else
                    ++it;
            }
        }
        return rel;
    };

    for (int trial = 0; trial < 100; ++trial) {
        auto L = random_lts(6);
        auto R = random_lts(6);
        auto fast = coalgebra::greatest_bisimulation(L, R);
        std::set<std::pair<std::string, std::string>> a(fast.pairs.begin(), fast.pairs.end());
        auto b = naive(L, R);
        if (a != b) {
            detail = "mismatch with the oracle on trial " + std::to_string(trial);
            return false;
        }
    }

    // canonical example
    Coalgebra S, T;
    S.spec.kind = T.spec.kind = FunctorKind::Lts;
    S.spec.alphabet = T.spec.alphabet = {"a", "b"};
    S.carrier = {"s0", "s1", "s2"};
    S.lts_succ = {{"s0", {{"a", "s1"}, {"a", "s2"}}},
                  {"s1", {{"b", "s1"}}},
                  {"s2", {{"b", "s2"}}}};
    T.carrier = {"t0", "t1"};
    T.lts_succ = {{"t0", {{"a", "t1"}}}, {"t1", {{"b", "t1"}}}};
    auto bis = coalgebra::greatest_bisimulation(S, T);
    std::set<std::pair<std::string, std::string>> got(bis.pairs.begin(), bis.pairs.end());
    std::set<std::pair<std::string, std::string>> want = {
        {"s0", "t0"}, {"s1", "t1"}, {"s2", "t1"}};
    if (got != want) {
        detail = "canonical example produced the wrong relation";
        return false;
    }
    detail = "100 random pairs match the naive fixed point; canonical relation exact";
    return true;
}

bool criterion8(std::string& detail) {
    using genmetric::ExtReal;

    // four standard constructions, carriers <= 6
    std::vector<genmetric::GenMetricSpace> spaces;
    spaces.push_back(genmetric::preorder_space(
        {"a", "b", "c", "d"},
        {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "d"}}));
    spaces.push_back(genmetric::string_space({"", "a", "ab", "abc", "b", "ba"}));
    spaces.push_back(genmetric::halfline_space(
        {ExtReal(0, 1), ExtReal(1, 2), ExtReal(1, 1), ExtReal(2, 1), ExtReal(7, 2),
         ExtReal(5, 1)}));
    {
        std::vector<std::string> pts = {"0", "1", "3"};
        std::map<std::pair<std::string, std::string>, ExtReal> d;
        for (const auto& a : pts)
            for (const auto& b : pts)
                d[{a, b}] = ExtReal(std::abs(std::stoll(a) - std::stoll(b)), 1);
        spaces.push_back(genmetric::hausdorff_power_space(genmetric::make_space(pts, std::move(d))));
    }
    for (size_t i = 0; i < spaces.size(); ++i)
        if (!genmetric::check_isometry(spaces[i]).exact) {
            detail = "standard construction " + std::to_string(i) + " is not isometric";
            return false;
        }

    // 100 random quasi-metric tables with <= 5 points
    auto g = testers::rng(808);
    for (int trial = 0; trial < 100; ++trial) {
        int n = testers::uniform_int(g, 1, 5);
        std::vector<std::string> pts;
        for (int i = 0; i < n; ++i) pts.push_back("p" + std::to_string(i));
        std::map<std::pair<std::string, std::string>, ExtReal> d;
        for (const auto& a : pts)
            for (const auto& b : pts) {
                if (a == b)
                    d[{a, b}] = ExtReal();
                else if (testers::uniform_int(g, 0, 5) == 0)
                    d[{a, b}] = ExtReal::infinity();
                else
                    d[{a, b}] =
                        ExtReal(testers::uniform_int(g, 1, 12), testers::uniform_int(g, 1, 4));
            }
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& x : pts)
                for (const auto& y : pts)
                    for (const auto& z : pts) {
                        ExtReal via = d[{x, y}] + d[{y, z}];
                        if (via < d[{x, z}]) {
                            d[{x, z}] = via;
                            changed = true;
                        }
                    }
        }
        auto space = genmetric::make_space(pts, std::move(d));
        if (!genmetric::check_isometry(space).exact) {
            detail = "random table " + std::to_string(trial) + " is not isometric";
            return false;
        }
    }
    detail = "4 standard constructions and 100 random tables, zero deviation";
    return true;
}

bool criterion9(std::string& detail) {
    auto start = Clock::now();
    using simplicial::ShapeKind;

    auto check = [&](const simplicial::SimplicialSet& X, std::vector<int> want,
                     const char* name) {
        auto cc = homology::chain_complex(X);
        if (!cc.boundary_squares_to_zero()) {
            detail = std::string(name) + ": boundary does not square to zero";
            return false;
        }
        auto h = homology::homology(X);
        if (h.betti != want) {
            detail = std::string(name) + ": betti mismatch";
            return false;
        }
        return true;
    };

    if (!check(simplicial::build_shape(ShapeKind::Standard, 2), {1, 0, 0}, "Δ²")) return false;
    if (!check(simplicial::build_shape(ShapeKind::Boundary, 2), {1, 1}, "∂Δ²")) return false;
    if (!check(simplicial::build_shape(ShapeKind::Boundary, 3, -1, 3), {1, 0, 1}, "∂Δ³"))
        return false;

    auto discrete = simplicial::nerve(fincat::discrete_category({"a", "b", "c"}), 2);
    auto hd = homology::homology(discrete);
    if (hd.betti[0] != 3) {
        detail = "discrete 3-object nerve: H0 rank is not 3";
        return false;
    }

    auto hz2 = homology::classifying_space_homology(fincat::cyclic_group_category(2), 3);
    if (hz2.torsion.size() < 2 || hz2.torsion[1] != std::vector<long long>{2}) {
        detail = "Z/2 classifying space: H1 torsion is not Z/2";
        return false;
    }

    double secs = seconds_since(start);
    detail = "all betti/torsion values and ∂∂ = 0, " + std::to_string(secs) + " s";
    return secs < 5.0;
}

bool criterion10(std::string& detail) {
    // metric coinduction benchmark
    auto H = [](const learn::Vec& v) { return learn::Vec{0.5 * v[0] + 1.0}; };
    auto res = coalgebra::metric_coinduction_iterate(H, {0.0}, 0.5, 1e-9);
    if (!res.certificate.converged || res.certificate.iterations > 40 ||
        std::abs(res.fixed_point[0] - 2.0) > 1e-9) {
        detail = "affine contraction missed the fixed point within 40 steps";
        return false;
    }
    if (!res.certificate.h_contracts || res.certificate.modulus > 0.5 + 1e-12) {
        detail = "modulus certificate is wrong";
        return false;
    }

    // zeroth-order quadratic benchmark: E(p) = (p-3)^2
    std::vector<double> finals;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        learn::ZeroOrderConfig cfg;
        cfg.step_scale = 0.5;
        cfg.delta = 1e-3;
        cfg.seed = seed;
        auto L = learn::zeroth_order_functor(learn::param_value_fn(),
                                             learn::scaled_quadratic_error(2.0), cfg);
        learn::Vec p = {0.0};
        for (int t = 0; t < 10000; ++t) p = L.update(p, {}, {3.0});
        finals.push_back(std::abs(p[0] - 3.0));
    }
    std::sort(finals.begin(), finals.end());
    double median = finals[finals.size() / 2];
    if (median > 0.1) {
        detail = "zeroth-order median error " + std::to_string(median) + " > 0.1";
        return false;
    }
    detail = "fixed point in <= 40 steps at 1e-9; zeroth-order median error " + sci(median);
    return true;
}

bool criterion11(std::string& detail) {
    using lifting::FinFunction;
    auto mkset = [](int n, const std::string& pre) {
        std::vector<std::string> v;
        for (int i = 0; i < n; ++i) v.push_back(pre + std::to_string(i));
        return v;
    };
    std::vector<FinFunction> surj_test = {{{}, {"dot"}, {}}};
    std::vector<FinFunction> inj_test = {
        {{"p", "q"}, {"dot"}, {{"p", "dot"}, {"q", "dot"}}}};

    long long checked = 0;
    for (int nx = 0; nx <= 4; ++nx)
        for (int ny = 0; ny <= 4; ++ny) {
            auto X = mkset(nx, "x");
            auto Y = mkset(ny, "y");
            for (const auto& m : testers::all_functions(X, Y)) {
                FinFunction p{X, Y, m};
                bool surjective = true;
                for (const auto& y : Y) {
                    bool hit = false;
                    for (const auto& x : X)
                        if (m.at(x) == y) hit = true;
                    if (!hit) surjective = false;
                }
                bool injective = true;
                for (const auto& a : X)
                    for (const auto& c : X)
                        if (a < c && m.at(a) == m.at(c)) injective = false;

                if (lifting::has_rlp(p, surj_test).has_rlp != surjective) {
                    detail = "RLP-vs-surjectivity fails at |X|=" + std::to_string(nx) +
                             ", |Y|=" + std::to_string(ny);
                    return false;
                }
                if (lifting::has_rlp(p, inj_test).has_rlp != injective) {
                    detail = "RLP-vs-injectivity fails at |X|=" + std::to_string(nx) +
                             ", |Y|=" + std::to_string(ny);
                    return false;
                }
                ++checked;
            }
        }
    detail = std::to_string(checked) + " functions checked exhaustively";
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "simplicial identities for 50 random nerves at N=3 in under 10 s", criterion1},
        {2, "nerve full-faithfulness on 20 random category pairs", criterion2},
        {3, "horn laws: unique inner fillers, Z/2 Kan, [1] outer-horn witness", criterion3},
        {4, "backprop functoriality within 1e-9 and gradients within 1e-5", criterion4},
        {5, "transformer equivariance within 1e-6 at n=4 (all) and n=16 (sampled)", criterion5},
        {6, "migration adjunction counts and elements pullback on all fixtures", criterion6},
        {7, "bisimulation vs naive fixed point on 100 random pairs + canonical example",
         criterion7},
        {8, "metric Yoneda isometry, exact, on standard and random spaces", criterion8},
        {9, "homology benchmarks with exact ∂∂ = 0 in under 5 s", criterion9},
        {10, "metric coinduction and zeroth-order convergence benchmarks", criterion10},
        {11, "RLP characterizations of surjectivity/injectivity, exhaustive to size 4",
         criterion11},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto start = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = seconds_since(start);
        std::printf("[%s] criterion %2d: %s (%.2f s) — %s\n", ok ? "PASS" : "FAIL", c.number,
                    c.description.c_str(), secs, detail.c_str());
        if (!ok) ++failures;
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
