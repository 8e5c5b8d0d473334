#include "gaiakit/fincat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace gaiakit::fincat {

namespace {

template <typename T, typename Key>
void sort_unique(std::vector<T>& v, Key key) {
    std::sort(v.begin(), v.end(), [&](const T& a, const T& b) { return key(a) < key(b); });
    v.erase(std::unique(v.begin(), v.end(),
                        [&](const T& a, const T& b) { return key(a) == key(b); }),
            v.end());
}

std::string pair_str(const Id& g, const Id& f) {
    return "(" + g + ", " + f + ")";
}

} // namespace

FinCategory FinCategory::make(std::vector<Id> objects, std::vector<Morphism> morphisms,
                              std::map<Id, Id> identity,
                              std::map<std::pair<Id, Id>, Id> composition) {
    FinCategory c;
    c.objects = std::move(objects);
    c.morphisms = std::move(morphisms);
    c.identity = std::move(identity);
    c.composition = std::move(composition);
    sort_unique(c.objects, [](const Id& o) { return o; });
    sort_unique(c.morphisms, [](const Morphism& m) { return m.id; });
    return c;
}

bool FinCategory::has_object(const Id& o) const {
    return std::binary_search(objects.begin(), objects.end(), o);
}

bool FinCategory::has_morphism(const Id& m) const {
    auto it = std::lower_bound(morphisms.begin(), morphisms.end(), m,
                               [](const Morphism& a, const Id& b) { return a.id < b; });
    return it != morphisms.end() && it->id == m;
}

const Morphism& FinCategory::morphism(const Id& m) const {
    auto it = std::lower_bound(morphisms.begin(), morphisms.end(), m,
                               [](const Morphism& a, const Id& b) { return a.id < b; });
    if (it == morphisms.end() || it->id != m)
        throw InputError("unknown morphism: " + m);
    return *it;
}

Id FinCategory::identity_of(const Id& o) const {
    auto it = identity.find(o);
    if (it == identity.end()) throw InputError("no identity for object: " + o);
    return it->second;
}

bool FinCategory::is_identity(const Id& m) const {
    for (const auto& [o, i] : identity)
        if (i == m) return true;
    return false;
}

bool FinCategory::defined(const Id& g, const Id& f) const {
    return composition.count({g, f}) != 0;
}

Id FinCategory::compose(const Id& g, const Id& f) const {
    auto it = composition.find({g, f});
    if (it == composition.end())
        throw InputError("composition undefined for " + pair_str(g, f));
    return it->second;
}

// ---------------------------------------------------------------------------

ValidationReport validate_category(const FinCategory& c) {
    ValidationReport rep;
    auto add = [&](std::string kind, std::string detail) {
        rep.violations.push_back({std::move(kind), std::move(detail)});
    };

    bool structural_ok = true;
    for (const auto& m : c.morphisms) {
        if (!c.has_object(m.dom)) {
            add("structure", "morphism " + m.id + " has unknown dom " + m.dom);
            structural_ok = false;
        }
        if (!c.has_object(m.cod)) {
            add("structure", "morphism " + m.id + " has unknown cod " + m.cod);
            structural_ok = false;
        }
    }
    for (const auto& o : c.objects) {
        auto it = c.identity.find(o);
        if (it == c.identity.end()) {
            add("structure", "object " + o + " has no identity entry");
            structural_ok = false;
        } else if (!c.has_morphism(it->second)) {
            add("structure", "identity of " + o + " is unknown morphism " + it->second);
            structural_ok = false;
        } else {
            const auto& m = c.morphism(it->second);
            if (m.dom != o || m.cod != o) {
                add("structure", "identity of " + o + " is not an endomorphism of " + o);
                structural_ok = false;
            }
        }
    }
    for (const auto& [o, i] : c.identity) {
        if (!c.has_object(o)) {
            add("structure", "identity table mentions unknown object " + o);
            structural_ok = false;
        }
    }
    for (const auto& [gf, h] : c.composition) {
        if (!c.has_morphism(gf.first) || !c.has_morphism(gf.second) || !c.has_morphism(h)) {
            add("structure", "composition entry " + pair_str(gf.first, gf.second) +
                                 " -> " + h + " mentions unknown morphisms");
            structural_ok = false;
        }
    }
    if (!structural_ok) return rep;

    // Totality: defined exactly on composable pairs.
    for (const auto& g : c.morphisms)
        for (const auto& f : c.morphisms) {
            bool composable = (g.dom == f.cod);
            bool present = c.defined(g.id, f.id);
            if (composable && !present)
                add("composition-domain", "missing entry for composable " + pair_str(g.id, f.id));
            if (!composable && present)
                add("composition-domain",
                    "entry for non-composable " + pair_str(g.id, f.id));
        }

    // dom/cod coherence of every table entry.
    for (const auto& [gf, h] : c.composition) {
        const auto& g = c.morphism(gf.first);
        const auto& f = c.morphism(gf.second);
        if (g.dom != f.cod) continue; // already reported
        const auto& gf_m = c.morphism(h);
        if (gf_m.dom != f.dom || gf_m.cod != g.cod)
            add("coherence", "compose" + pair_str(g.id, f.id) + " = " + h +
                                 " has wrong dom/cod");
    }

    // Identity laws.
    for (const auto& f : c.morphisms) {
        Id idc = c.identity.at(f.cod);
        Id idd = c.identity.at(f.dom);
        if (c.defined(idc, f.id) && c.compose(idc, f.id) != f.id)
            add("identity-law", "id_" + f.cod + " ∘ " + f.id + " != " + f.id);
        if (c.defined(f.id, idd) && c.compose(f.id, idd) != f.id)
            add("identity-law", f.id + " ∘ id_" + f.dom + " != " + f.id);
    }

    // Associativity over all composable triples.
    for (const auto& h : c.morphisms)
        for (const auto& g : c.morphisms) {
            if (h.dom != g.cod) continue;
            for (const auto& f : c.morphisms) {
                if (g.dom != f.cod) continue;
                if (!c.defined(h.id, g.id) || !c.defined(g.id, f.id)) continue;
                Id hg = c.compose(h.id, g.id);
                Id gf = c.compose(g.id, f.id);
                if (!c.defined(hg, f.id) || !c.defined(h.id, gf)) continue;
                if (c.compose(hg, f.id) != c.compose(h.id, gf))
                    add("associativity", "(" + h.id + "∘" + g.id + ")∘" + f.id +
                                             " != " + h.id + "∘(" + g.id + "∘" + f.id + ")");
            }
        }
    return rep;
}

std::vector<Id> hom_set(const FinCategory& c, const Id& a, const Id& b) {
    if (!c.has_object(a)) throw InputError("unknown object: " + a);
    if (!c.has_object(b)) throw InputError("unknown object: " + b);
    std::vector<Id> out;
    for (const auto& m : c.morphisms)
        if (m.dom == a && m.cod == b) out.push_back(m.id);
    return out;
}

Id FinFunctor::on_object(const Id& o) const {
    auto it = object_map.find(o);
    if (it == object_map.end()) throw InputError("functor undefined on object " + o);
    return it->second;
}

Id FinFunctor::on_morphism(const Id& m) const {
    auto it = morphism_map.find(m);
    if (it == morphism_map.end()) throw InputError("functor undefined on morphism " + m);
    return it->second;
}

ValidationReport validate_functor(const FinFunctor& F) {
    ValidationReport rep;
    auto add = [&](std::string kind, std::string detail) {
        rep.violations.push_back({std::move(kind), std::move(detail)});
    };

    bool structural_ok = true;
    for (const auto& o : F.source.objects) {
        auto it = F.object_map.find(o);
        if (it == F.object_map.end()) {
            add("structure", "object_map missing " + o);
            structural_ok = false;
        } else if (!F.target.has_object(it->second)) {
            add("structure", "object_map sends " + o + " to unknown object " + it->second);
            structural_ok = false;
        }
    }
    for (const auto& m : F.source.morphisms) {
        auto it = F.morphism_map.find(m.id);
        if (it == F.morphism_map.end()) {
            add("structure", "morphism_map missing " + m.id);
            structural_ok = false;
        } else if (!F.target.has_morphism(it->second)) {
            add("structure", "morphism_map sends " + m.id + " to unknown morphism " + it->second);
            structural_ok = false;
        }
    }
    if (!structural_ok) return rep;

    for (const auto& m : F.source.morphisms) {
        const auto& fm = F.target.morphism(F.on_morphism(m.id));
        if (fm.dom != F.on_object(m.dom) || fm.cod != F.on_object(m.cod))
            add("dom-cod", "image of " + m.id + " has wrong dom/cod");
    }
    for (const auto& o : F.source.objects) {
        if (F.on_morphism(F.source.identity_of(o)) != F.target.identity_of(F.on_object(o)))
            add("identity", "F(id_" + o + ") != id_F(" + o + ")");
    }
    for (const auto& [gf, h] : F.source.composition) {
        Id lhs = F.on_morphism(h);
        Id fg = F.on_morphism(gf.first);
        Id ff = F.on_morphism(gf.second);
        if (!F.target.defined(fg, ff)) {
            add("composition", "images of " + pair_str(gf.first, gf.second) + " not composable");
            continue;
        }
        if (F.target.compose(fg, ff) != lhs)
            add("composition", "F(" + gf.first + "∘" + gf.second + ") != F(" + gf.first +
                                   ")∘F(" + gf.second + ")");
    }
    return rep;
}

ValidationReport validate_natural_transformation(const NaturalTransformation& alpha) {
    ValidationReport rep;
    auto add = [&](std::string kind, std::string detail) {
        rep.violations.push_back({std::move(kind), std::move(detail)});
    };
    const auto& F = alpha.source;
    const auto& G = alpha.target;
    const auto& D = F.target;
    for (const auto& c : F.source.objects) {
        auto it = alpha.components.find(c);
        if (it == alpha.components.end()) {
            add("structure", "missing component at " + c);
            continue;
        }
        const auto& comp = D.morphism(it->second);
        if (comp.dom != F.on_object(c) || comp.cod != G.on_object(c))
            add("component", "component at " + c + " is not Fc -> Gc");
    }
    if (!rep.ok()) return rep;
    for (const auto& f : F.source.morphisms) {
        // naturality: alpha_{c'} ∘ Ff = Gf ∘ alpha_c for f: c -> c'
        Id lhs = D.compose(alpha.components.at(f.cod), F.on_morphism(f.id));
        Id rhs = D.compose(G.on_morphism(f.id), alpha.components.at(f.dom));
        if (lhs != rhs) add("naturality", "square fails at " + f.id);
    }
    return rep;
}

ValidationReport validate_diagram(const SetDiagram& d) {
    ValidationReport rep;
    auto add = [&](std::string kind, std::string detail) {
        rep.violations.push_back({std::move(kind), std::move(detail)});
    };
    for (const auto& o : d.shape.objects)
        if (!d.sets.count(o)) add("structure", "no set assigned to object " + o);
    for (const auto& m : d.shape.morphisms) {
        auto it = d.functions.find(m.id);
        if (it == d.functions.end()) {
            add("structure", "no function assigned to morphism " + m.id);
            continue;
        }
        const auto& dom = d.sets.at(m.dom);
        const auto& cod = d.sets.at(m.cod);
        for (const auto& x : dom) {
            auto jt = it->second.find(x);
            if (jt == it->second.end())
                add("structure", "function " + m.id + " undefined on " + x);
            else if (std::find(cod.begin(), cod.end(), jt->second) == cod.end())
                add("structure", "function " + m.id + " maps " + x + " outside codomain");
        }
    }
    if (!rep.ok()) return rep;
    for (const auto& o : d.shape.objects) {
        const auto& idm = d.functions.at(d.shape.identity_of(o));
        for (const auto& x : d.sets.at(o))
            if (idm.at(x) != x) add("functoriality", "identity of " + o + " moves " + x);
    }
    for (const auto& [gf, h] : d.shape.composition) {
        const auto& g = d.functions.at(gf.first);
        const auto& f = d.functions.at(gf.second);
        const auto& hh = d.functions.at(h);
        const auto& dom = d.sets.at(d.shape.morphism(gf.second).dom);
        for (const auto& x : dom)
            if (g.at(f.at(x)) != hh.at(x))
                add("functoriality",
                    "d(" + gf.first + ")∘d(" + gf.second + ") != d(" + h + ") at " + x);
    }
    return rep;
}

FinFunctor compose_functors(const FinFunctor& G, const FinFunctor& F) {
    FinFunctor H;
    H.source = F.source;
    H.target = G.target;
    for (const auto& [o, fo] : F.object_map) H.object_map[o] = G.on_object(fo);
    for (const auto& [m, fm] : F.morphism_map) H.morphism_map[m] = G.on_morphism(fm);
    return H;
}

FinFunctor identity_functor(const FinCategory& c) {
    FinFunctor F;
    F.source = c;
    F.target = c;
    for (const auto& o : c.objects) F.object_map[o] = o;
    for (const auto& m : c.morphisms) F.morphism_map[m.id] = m.id;
    return F;
}

// ---------------------------------------------------------------------------

CommaCategory comma_category(const FinFunctor& F, const FinFunctor& G) {
    if (F.target.objects != G.target.objects ||
        F.target.morphisms.size() != G.target.morphisms.size())
        throw InputError("comma_category: functors must share their target");
    const FinCategory& E = F.target;
    const FinCategory& C = F.source;
    const FinCategory& D = G.source;

    CommaCategory out;
    auto obj_id = [](const Id& c, const Id& d, const Id& f) {
        return "(" + c + "," + d + "," + f + ")";
    };

    std::vector<Id> objs;
    for (const auto& c : C.objects)
        for (const auto& d : D.objects)
            for (const auto& f : hom_set(E, F.on_object(c), G.on_object(d))) {
                Id oid = obj_id(c, d, f);
                objs.push_back(oid);
                out.triples[oid] = {c, d, f};
            }

    // Morphisms (a, b): (c,d,f) -> (c',d',f') with Gb ∘ f = f' ∘ Fa.
    struct CM {
        Id id, dom, cod, a, b;
    };
    std::vector<CM> arrows;
    for (const auto& [o1, t1] : out.triples)
        for (const auto& [o2, t2] : out.triples) {
            const auto& [c1, d1, f1] = t1;
            const auto& [c2, d2, f2] = t2;
            for (const auto& a : hom_set(C, c1, c2))
                for (const auto& b : hom_set(D, d1, d2)) {
                    Id lhs = E.compose(G.on_morphism(b), f1);
                    Id rhs = E.compose(f2, F.on_morphism(a));
                    if (lhs == rhs)
                        arrows.push_back({"[" + a + "," + b + "]:" + o1 + "->" + o2, o1, o2, a, b});
                }
        }

    std::vector<Morphism> morphs;
    std::map<Id, std::pair<Id, Id>> components; // arrow id -> (a, b)
    for (const auto& m : arrows) {
        morphs.push_back({m.id, m.dom, m.cod});
        components[m.id] = {m.a, m.b};
    }

    std::map<Id, Id> identity;
    for (const auto& [oid, t] : out.triples) {
        const auto& [c, d, f] = t;
        identity[oid] = "[" + C.identity_of(c) + "," + D.identity_of(d) + "]:" + oid + "->" + oid;
    }

    std::map<std::pair<Id, Id>, Id> comp;
    for (const auto& g : arrows)
        for (const auto& f : arrows) {
            if (g.dom != f.cod) continue;
            Id a = C.compose(g.a, f.a);
            Id b = D.compose(g.b, f.b);
            comp[{g.id, f.id}] = "[" + a + "," + b + "]:" + f.dom + "->" + g.cod;
        }

    out.category = FinCategory::make(objs, morphs, identity, comp);

    out.proj_left.source = out.category;
    out.proj_left.target = C;
    out.proj_right.source = out.category;
    out.proj_right.target = D;
    for (const auto& [oid, t] : out.triples) {
        out.proj_left.object_map[oid] = std::get<0>(t);
        out.proj_right.object_map[oid] = std::get<1>(t);
    }
    for (const auto& [mid, ab] : components) {
        out.proj_left.morphism_map[mid] = ab.first;
        out.proj_right.morphism_map[mid] = ab.second;
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {
std::string tagged(const Id& obj, const Id& elem) { return obj + ":" + elem; }
} // namespace

SetColimit set_colimit(const SetDiagram& d) {
    // Union-find over the tagged disjoint union.
    std::vector<Id> tags;
    std::map<Id, int> index;
    for (const auto& o : d.shape.objects)
        for (const auto& x : d.sets.at(o)) {
            index[tagged(o, x)] = static_cast<int>(tags.size());
            tags.push_back(tagged(o, x));
        }
    std::vector<int> parent(tags.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    auto unite = [&](int i, int j) { parent[find(i)] = find(j); };

    for (const auto& m : d.shape.morphisms) {
        const auto& fn = d.functions.at(m.id);
        for (const auto& x : d.sets.at(m.dom))
            unite(index.at(tagged(m.dom, x)), index.at(tagged(m.cod, fn.at(x))));
    }

    // Canonical class name: least member tag.
    std::map<int, Id> class_name;
    for (size_t i = 0; i < tags.size(); ++i) {
        int r = find(static_cast<int>(i));
        auto it = class_name.find(r);
        if (it == class_name.end() || tags[i] < it->second) class_name[r] = tags[i];
    }

    SetColimit out;
    std::set<Id> elems;
    for (const auto& [r, name] : class_name) elems.insert(name);
    out.elements.assign(elems.begin(), elems.end());
    for (const auto& o : d.shape.objects) {
        auto& inj = out.injections[o];
        for (const auto& x : d.sets.at(o))
            inj[x] = class_name.at(find(index.at(tagged(o, x))));
    }
    return out;
}

SetLimit set_limit(const SetDiagram& d) {
    SetLimit out;
    std::vector<Id> objs = d.shape.objects;
    // Enumerate the product in object order, filter compatible families.
    std::vector<size_t> sizes;
    for (const auto& o : objs) sizes.push_back(d.sets.at(o).size());

    std::map<Id, Id> family;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == objs.size()) {
            for (const auto& m : d.shape.morphisms) {
                const auto& fn = d.functions.at(m.id);
                if (fn.at(family.at(m.dom)) != family.at(m.cod)) return;
            }
            std::string enc = "<";
            for (size_t j = 0; j < objs.size(); ++j) {
                if (j) enc += ",";
                enc += objs[j] + "=" + family.at(objs[j]);
            }
            enc += ">";
            out.elements.push_back(enc);
            out.families[enc] = family;
            for (const auto& o : objs) out.projections[o][enc] = family.at(o);
            return;
        }
        for (const auto& x : d.sets.at(objs[i])) {
            family[objs[i]] = x;
            rec(i + 1);
        }
        family.erase(objs[i]);
    };
    rec(0);   // empty shape yields the one-point terminal set {"<>"}
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

// ---------------------------------------------------------------------------
// Presentation helpers
// ---------------------------------------------------------------------------

FinCategory preorder_category(const std::vector<Id>& elems,
                              const std::vector<std::pair<Id, Id>>& leq) {
    size_t n = elems.size();
    std::map<Id, size_t> idx;
    for (size_t i = 0; i < n; ++i) idx[elems[i]] = i;
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) rel[i][i] = true;
    for (const auto& [a, b] : leq) {
        if (!idx.count(a) || !idx.count(b)) throw InputError("preorder: unknown element");
        rel[idx[a]][idx[b]] = true;
    }
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (rel[i][k] && rel[k][j]) rel[i][j] = true;

    auto arrow = [&](const Id& a, const Id& b) { return a + "<=" + b; };
    std::vector<Morphism> morphs;
    std::map<Id, Id> identity;
    std::map<std::pair<Id, Id>, Id> comp;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (rel[i][j]) morphs.push_back({arrow(elems[i], elems[j]), elems[i], elems[j]});
    for (size_t i = 0; i < n; ++i) identity[elems[i]] = arrow(elems[i], elems[i]);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (rel[i][j] && rel[j][k])
                    comp[{arrow(elems[j], elems[k]), arrow(elems[i], elems[j])}] =
                        arrow(elems[i], elems[k]);
    return FinCategory::make(elems, morphs, identity, comp);
}

FinCategory poset_category(int n) {
    std::vector<Id> elems;
    std::vector<std::pair<Id, Id>> leq;
    for (int i = 0; i <= n; ++i) elems.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i) leq.push_back({std::to_string(i), std::to_string(i + 1)});
    return preorder_category(elems, leq);
}

FinCategory free_category(const std::vector<Id>& vertices, const std::vector<GraphEdge>& edges) {
    // Paths in an acyclic multigraph; cycles would make the morphism set
    // infinite, so they are rejected.
    std::map<Id, std::vector<const GraphEdge*>> out_edges;
    for (const auto& e : edges) {
        out_edges[e.src].push_back(&e);
        if (std::find(vertices.begin(), vertices.end(), e.src) == vertices.end() ||
            std::find(vertices.begin(), vertices.end(), e.dst) == vertices.end())
            throw InputError("free_category: edge endpoint not a vertex");
    }

    struct Path {
        Id id, src, dst;
        std::vector<Id> edges;
    };
    std::vector<Path> paths;
    for (const auto& v : vertices) paths.push_back({"id_" + v, v, v, {}});

    // BFS over paths; acyclicity bounds the depth by |edges|.
    size_t head = 0;
    std::vector<Path> frontier = paths;
    while (head < frontier.size()) {
        Path p = frontier[head++];
        for (const GraphEdge* e : out_edges[p.dst]) {
            if (std::find(p.edges.begin(), p.edges.end(), e->id) != p.edges.end())
                throw InputError("free_category: graph has a cycle");
            Path q;
            q.edges = p.edges;
            q.edges.push_back(e->id);
            if (q.edges.size() > edges.size())
                throw InputError("free_category: graph has a cycle");
            q.src = p.src;
            q.dst = e->dst;
            std::string name;
            for (const auto& eid : q.edges) name += (name.empty() ? "" : "*") + eid;
            q.id = name;
            paths.push_back(q);
            frontier.push_back(q);
        }
    }

    std::vector<Morphism> morphs;
    std::map<Id, Id> identity;
    std::map<std::pair<Id, Id>, Id> comp;
    for (const auto& p : paths) morphs.push_back({p.id, p.src, p.dst});
    for (const auto& v : vertices) identity[v] = "id_" + v;
    for (const auto& g : paths)
        for (const auto& f : paths) {
            if (g.src != f.dst) continue;
            std::vector<Id> cat = f.edges;
            cat.insert(cat.end(), g.edges.begin(), g.edges.end());
            std::string name;
            if (cat.empty())
                name = "id_" + f.src;
            else
                for (const auto& eid : cat) name += (name.empty() ? "" : "*") + eid;
            comp[{g.id, f.id}] = name;
        }
    return FinCategory::make(vertices, morphs, identity, comp);
}

FinCategory cyclic_group_category(int n) {
    if (n < 1) throw InputError("cyclic_group_category: n must be >= 1");
    std::vector<Id> objs = {"*"};
    std::vector<Morphism> morphs;
    std::map<Id, Id> identity = {{"*", "g0"}};
    std::map<std::pair<Id, Id>, Id> comp;
    auto name = [](int k) { return "g" + std::to_string(k); };
    for (int k = 0; k < n; ++k) morphs.push_back({name(k), "*", "*"});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) comp[{name(a), name(b)}] = name((a + b) % n);
    return FinCategory::make(objs, morphs, identity, comp);
}

FinCategory discrete_category(const std::vector<Id>& objects) {
    std::vector<Morphism> morphs;
    std::map<Id, Id> identity;
    std::map<std::pair<Id, Id>, Id> comp;
    for (const auto& o : objects) {
        morphs.push_back({"id_" + o, o, o});
        identity[o] = "id_" + o;
        comp[{"id_" + o, "id_" + o}] = "id_" + o;
    }
    return FinCategory::make(objects, morphs, identity, comp);
}

// ---------------------------------------------------------------------------

std::vector<FinFunctor> enumerate_functors(const FinCategory& C, const FinCategory& D,
                                           Budget* budget) {
    Budget local;
    Budget& b = budget ? *budget : local;

    std::vector<FinFunctor> out;
    std::vector<Id> src_objs = C.objects;

    // Non-identity morphisms need explicit choices; identities are forced.
    std::vector<const Morphism*> free_morphs;
    for (const auto& m : C.morphisms)
        if (!C.is_identity(m.id)) free_morphs.push_back(&m);

    std::map<Id, Id> omap;
    std::map<Id, Id> mmap;

    std::function<void(size_t)> pick_morph = [&](size_t i) {
        if (i == free_morphs.size()) {
            FinFunctor F;
            F.source = C;
            F.target = D;
            F.object_map = omap;
            F.morphism_map = mmap;
            for (const auto& o : C.objects)
                F.morphism_map[C.identity_of(o)] = D.identity_of(omap.at(o));
            if (validate_functor(F).ok()) out.push_back(std::move(F));
            return;
        }
        const Morphism* m = free_morphs[i];
        for (const auto& cand : hom_set(D, omap.at(m->dom), omap.at(m->cod))) {
            b.charge();
            mmap[m->id] = cand;
            pick_morph(i + 1);
        }
        mmap.erase(m->id);
    };

    std::function<void(size_t)> pick_obj = [&](size_t i) {
        if (i == src_objs.size()) {
            pick_morph(0);
            return;
        }
        for (const auto& d : D.objects) {
            b.charge();
            omap[src_objs[i]] = d;
            pick_obj(i + 1);
        }
        omap.erase(src_objs[i]);
    };

    if (src_objs.empty())
        pick_morph(0);
    else
        pick_obj(0);
    return out;
}

} // namespace gaiakit::fincat
