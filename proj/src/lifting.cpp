#include "gaiakit/lifting.hpp"

#include <algorithm>
#include <functional>

namespace gaiakit::lifting {

Id FinFunction::at(const Id& x) const {
    auto it = map.find(x);
    if (it == map.end()) throw InputError("function undefined on " + x);
    return it->second;
}

void FinFunction::check_total() const {
    for (const auto& x : domain) {
        auto it = map.find(x);
        if (it == map.end()) throw InputError("function undefined on " + x);
        if (std::find(codomain.begin(), codomain.end(), it->second) == codomain.end())
            throw InputError("function maps " + x + " outside its codomain");
    }
}

void SetSquare::check_commutes() const {
    f.check_total();
    p.check_total();
    top.check_total();
    bottom.check_total();
    for (const auto& a : f.domain)
        if (p.at(top.at(a)) != bottom.at(f.at(a)))
            throw InputError("lifting square does not commute at " + a);
}

std::vector<FinFunction> solve_lifting(const SetSquare& sq, Budget* budget) {
    sq.check_commutes();
    Budget local;
    Budget& b = budget ? *budget : local;

    // h is pinned on the image of f; free elsewhere, constrained by p∘h = bottom.
    std::map<Id, Id> pinned;
    for (const auto& a : sq.f.domain) {
        Id where = sq.f.at(a);
        Id must = sq.top.at(a);
        auto it = pinned.find(where);
        if (it != pinned.end() && it->second != must) return {}; // inconsistent constraints
        pinned[where] = must;
    }

    std::vector<FinFunction> out;
    std::map<Id, Id> acc;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == sq.f.codomain.size()) {
            FinFunction h;
            h.domain = sq.f.codomain;
            h.codomain = sq.p.domain;
            h.map = acc;
            out.push_back(std::move(h));
            return;
        }
        const Id& bpt = sq.f.codomain[i];
        auto pin = pinned.find(bpt);
        for (const auto& x : sq.p.domain) {
            b.charge();
            if (pin != pinned.end() && pin->second != x) continue;
            if (sq.p.at(x) != sq.bottom.at(bpt)) continue;
            acc[bpt] = x;
            rec(i + 1);
            acc.erase(bpt);
        }
    };
    rec(0);

    // Re-check both equations on every solution.
    for (const auto& h : out) {
        for (const auto& a : sq.f.domain)
            if (h.at(sq.f.at(a)) != sq.top.at(a))
                throw DomainError("solve_lifting: solution violates h∘f = top");
        for (const auto& x : sq.f.codomain)
            if (sq.p.at(h.at(x)) != sq.bottom.at(x))
                throw DomainError("solve_lifting: solution violates p∘h = bottom");
    }
    return out;
}

RlpReport has_rlp(const FinFunction& p, const std::vector<FinFunction>& against, Budget* budget) {
    Budget local;
    Budget& b = budget ? *budget : local;
    p.check_total();

    for (const auto& f : against) {
        f.check_total();
        // Enumerate all tops A -> X and bottoms B -> Y; keep commuting squares.
        std::vector<std::map<Id, Id>> tops, bottoms;
        std::function<void(size_t, std::map<Id, Id>&, const std::vector<Id>&,
                           const std::vector<Id>&, std::vector<std::map<Id, Id>>&)>
            gen = [&](size_t i, std::map<Id, Id>& acc, const std::vector<Id>& dom,
                      const std::vector<Id>& cod, std::vector<std::map<Id, Id>>& sink) {
                if (i == dom.size()) {
                    sink.push_back(acc);
                    return;
                }
                for (const auto& y : cod) {
                    b.charge();
                    acc[dom[i]] = y;
                    gen(i + 1, acc, dom, cod, sink);
                }
                acc.erase(dom[i]);
            };
        std::map<Id, Id> acc;
        gen(0, acc, f.domain, p.domain, tops);
        gen(0, acc, f.codomain, p.codomain, bottoms);
        if (f.domain.empty() && tops.empty()) tops.push_back({});
        if (f.codomain.empty() && bottoms.empty()) bottoms.push_back({});

        for (const auto& t : tops)
            for (const auto& bo : bottoms) {
                SetSquare sq;
                sq.f = f;
                sq.p = p;
                sq.top = {f.domain, p.domain, t};
                sq.bottom = {f.codomain, p.codomain, bo};
                bool commutes = true;
                for (const auto& a : f.domain)
                    if (p.at(t.at(a)) != bo.at(f.at(a))) {
                        commutes = false;
                        break;
                    }
                if (!commutes) continue;
                if (solve_lifting(sq, &b).empty()) return {false, sq};
            }
    }
    return {true, std::nullopt};
}

// ---------------------------------------------------------------------------

std::vector<FinFunctor> solve_lifting_cat(const CatSquare& sq, Budget* budget) {
    Budget local;
    Budget& b = budget ? *budget : local;

    const FinCategory& B = sq.f.target;   // domain of the diagonal
    const FinCategory& X = sq.p.source;   // codomain of the diagonal

    // Commutativity of the outer square.
    for (const auto& o : sq.f.source.objects)
        if (sq.p.on_object(sq.top.on_object(o)) != sq.bottom.on_object(sq.f.on_object(o)))
            throw InputError("cat lifting square does not commute on object " + o);
    for (const auto& m : sq.f.source.morphisms)
        if (sq.p.on_morphism(sq.top.on_morphism(m.id)) !=
            sq.bottom.on_morphism(sq.f.on_morphism(m.id)))
            throw InputError("cat lifting square does not commute on morphism " + m.id);

    // Pins from h∘f = top.
    std::map<Id, Id> obj_pin, mor_pin;
    for (const auto& o : sq.f.source.objects) {
        Id where = sq.f.on_object(o), must = sq.top.on_object(o);
        auto it = obj_pin.find(where);
        if (it != obj_pin.end() && it->second != must) return {};
        obj_pin[where] = must;
    }
    for (const auto& m : sq.f.source.morphisms) {
        Id where = sq.f.on_morphism(m.id), must = sq.top.on_morphism(m.id);
        auto it = mor_pin.find(where);
        if (it != mor_pin.end() && it->second != must) return {};
        mor_pin[where] = must;
    }

    std::vector<FinFunctor> out;
    std::map<Id, Id> omap, mmap;

    std::vector<const fincat::Morphism*> free_morphs;
    for (const auto& m : B.morphisms)
        if (!B.is_identity(m.id)) free_morphs.push_back(&m);

    std::function<void(size_t)> pick_m = [&](size_t i) {
        if (i == free_morphs.size()) {
            FinFunctor h;
            h.source = B;
            h.target = X;
            h.object_map = omap;
            h.morphism_map = mmap;
            for (const auto& o : B.objects)
                h.morphism_map[B.identity_of(o)] = X.identity_of(omap.at(o));
            if (!fincat::validate_functor(h).ok()) return;
            // p∘h = bottom on identities comes along for free; recheck anyway.
            for (const auto& m : B.morphisms)
                if (sq.p.on_morphism(h.on_morphism(m.id)) != sq.bottom.on_morphism(m.id)) return;
            out.push_back(std::move(h));
            return;
        }
        const fincat::Morphism* m = free_morphs[i];
        auto pin = mor_pin.find(m->id);
        for (const auto& cand : fincat::hom_set(X, omap.at(m->dom), omap.at(m->cod))) {
            b.charge();
            if (pin != mor_pin.end() && pin->second != cand) continue;
            if (sq.p.on_morphism(cand) != sq.bottom.on_morphism(m->id)) continue;
            mmap[m->id] = cand;
            pick_m(i + 1);
            mmap.erase(m->id);
        }
    };

    std::function<void(size_t)> pick_o = [&](size_t i) {
        if (i == B.objects.size()) {
            pick_m(0);
            return;
        }
        const Id& o = B.objects[i];
        auto pin = obj_pin.find(o);
        for (const auto& cand : X.objects) {
            b.charge();
            if (pin != obj_pin.end() && pin->second != cand) continue;
            if (sq.p.on_object(cand) != sq.bottom.on_object(o)) continue;
            omap[o] = cand;
            pick_o(i + 1);
            omap.erase(o);
        }
    };

    if (B.objects.empty())
        pick_m(0);
    else
        pick_o(0);
    return out;
}

// ---------------------------------------------------------------------------

std::vector<simplicial::SimplicialMap> solve_lifting_simplicial(const SimpSquare& sq,
                                                                Budget* budget) {
    using simplicial::SimplicialMap;
    const auto& B = sq.f.target;
    const auto& X = sq.p.source;
    int N = std::min(B.truncation, X.truncation);

    // Commutativity of the outer square, level-wise.
    for (int n = 0; n <= std::min(sq.f.source.truncation, N); ++n)
        for (const auto& a : sq.f.source.simplices[n])
            if (sq.p.at(n, sq.top.at(n, a)) != sq.bottom.at(n, sq.f.at(n, a)))
                throw InputError("simplicial lifting square does not commute at " + a);

    // Pins from h∘f = top.
    std::vector<std::map<Id, Id>> pinned(N + 1);
    for (int n = 0; n <= std::min(sq.f.source.truncation, N); ++n)
        for (const auto& a : sq.f.source.simplices[n]) {
            Id where = sq.f.at(n, a), must = sq.top.at(n, a);
            auto it = pinned[n].find(where);
            if (it != pinned[n].end() && it->second != must) return {};
            pinned[n][where] = must;
        }

    auto candidates = simplicial::enumerate_simplicial_maps(B, X, &pinned, budget);
    std::vector<SimplicialMap> out;
    for (auto& h : candidates) {
        bool ok = true;
        for (int n = 0; n <= N && ok; ++n)
            for (const auto& x : B.simplices[n])
                if (sq.p.at(n, h.at(n, x)) != sq.bottom.at(n, x)) {
                    ok = false;
                    break;
                }
        if (ok) out.push_back(std::move(h));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<QuerySolution> query_by_lifting(const FinCategory& Q, const FinCategory& R,
                                            const FinFunctor& window, const FinFunctor& nu,
                                            const elements::SetInstance& instance,
                                            const std::optional<QueryBinding>& binding,
                                            const QueryOptions& options, Budget* budget) {
    if (nu.target.objects != instance.schema.objects)
        throw InputError("query_by_lifting: nu must land in the instance schema");

    Budget local;
    Budget& b = budget ? *budget : local;

    auto el = elements::category_of_elements(instance);

    // Candidate bindings mu: Q -> ∫δ over nu∘window.
    std::vector<QueryBinding> bindings;
    if (binding) {
        bindings.push_back(*binding);
    } else {
        // enumerate all natural bindings of Q
        std::vector<Id> qobjs = Q.objects;
        QueryBinding acc;
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == qobjs.size()) {
                // check the binding respects every arrow of Q
                for (const auto& m : Q.morphisms) {
                    Id schema_m = nu.on_morphism(window.on_morphism(m.id));
                    if (instance.act(schema_m, acc.elements.at(m.dom)) !=
                        acc.elements.at(m.cod))
                        return;
                }
                bindings.push_back(acc);
                return;
            }
            const Id& q = qobjs[i];
            Id schema_obj = nu.on_object(window.on_object(q));
            for (const auto& x : instance.table(schema_obj)) {
                b.charge();
                acc.elements[q] = x;
                rec(i + 1);
                acc.elements.erase(q);
            }
        };
        rec(0);
    }

    if (options.injective_bindings) {
        std::vector<QueryBinding> kept;
        for (const auto& mu : bindings) {
            std::set<Id> seen;
            bool inj = true;
            for (const auto& [q, x] : mu.elements)
                if (!seen.insert(x).second) inj = false;
            if (inj) kept.push_back(mu);
        }
        bindings = std::move(kept);
    }

    std::vector<QuerySolution> out;
    std::set<std::map<Id, std::multiset<Id>>> seen_signatures;
    for (const auto& mu : bindings) {
        // Build the Cat lifting square: f = window, p = projection,
        // top = mu (as a functor Q -> ∫δ), bottom = nu.
        FinFunctor mu_f;
        mu_f.source = Q;
        mu_f.target = el.category;
        for (const auto& q : Q.objects) {
            Id s = nu.on_object(window.on_object(q));
            mu_f.object_map[q] = "(" + s + "," + mu.elements.at(q) + ")";
        }
        for (const auto& m : Q.morphisms) {
            Id schema_m = nu.on_morphism(window.on_morphism(m.id));
            mu_f.morphism_map[m.id] = "(" + schema_m + "@" + mu.elements.at(m.dom) + ")";
        }
        if (!fincat::validate_functor(mu_f).ok()) continue; // binding not natural

        CatSquare sq{window, el.projection, mu_f, nu};
        auto hs = solve_lifting_cat(sq, &b);
        if (hs.empty()) continue;
        if (options.dedupe_symmetric) {
            std::map<Id, std::multiset<Id>> sig; // schema object -> bound elements
            for (const auto& [q, x] : mu.elements)
                sig[nu.on_object(window.on_object(q))].insert(x);
            if (!seen_signatures.insert(sig).second) continue;
        }
        QuerySolution sol;
        sol.binding = mu;
        for (const auto& h : hs) {
            std::map<Id, Id> diag;
            for (const auto& r : R.objects) diag[r] = el.object_pairs.at(h.on_object(r)).second;
            sol.diagonals.push_back(std::move(diag));
        }
        out.push_back(std::move(sol));
    }
    return out;
}

} // namespace gaiakit::lifting
