#include "gaiakit/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gaiakit::simplicial {

using fincat::ValidationReport;

namespace {

std::string join(const std::vector<Id>& parts, const char* sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<Id> split(const std::string& s, char sep) {
    std::vector<Id> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else
            cur += ch;
    }
    out.push_back(cur);
    return out;
}

} // namespace

bool SimplicialSet::has(int n, const Id& x) const {
    if (n < 0 || n > truncation) return false;
    const auto& v = simplices[n];
    return std::find(v.begin(), v.end(), x) != v.end();
}

const Id& SimplicialSet::d(int n, int i, const Id& x) const {
    if (n < 1 || n > truncation || i < 0 || i > n)
        throw InputError("face index out of range");
    auto it = face[n][i].find(x);
    if (it == face[n][i].end()) throw InputError("face table undefined on " + x);
    return it->second;
}

const Id& SimplicialSet::s(int n, int j, const Id& x) const {
    if (n < 0 || n >= truncation || j < 0 || j > n)
        throw InputError("degeneracy index out of range");
    auto it = degeneracy[n][j].find(x);
    if (it == degeneracy[n][j].end()) throw InputError("degeneracy table undefined on " + x);
    return it->second;
}

bool SimplicialSet::is_degenerate(int n, const Id& x) const {
    if (n == 0) return false;
    for (int j = 0; j < n; ++j)
        if (s(n - 1, j, d(n, j, x)) == x) return true;
    return false;
}

std::vector<Id> SimplicialSet::nondegenerate(int n) const {
    std::vector<Id> out;
    for (const auto& x : simplices[n])
        if (!is_degenerate(n, x)) out.push_back(x);
    return out;
}

ValidationReport SimplicialSet::validate() const {
    ValidationReport rep;
    auto add = [&](std::string kind, std::string detail) {
        rep.violations.push_back({std::move(kind), std::move(detail)});
    };
    const int N = truncation;
    if (static_cast<int>(simplices.size()) != N + 1 ||
        static_cast<int>(face.size()) != N + 1 ||
        static_cast<int>(degeneracy.size()) != N + 1) {
        add("structure", "level tables do not match truncation");
        return rep;
    }

    // Totality and membership.
    for (int n = 1; n <= N; ++n) {
        if (static_cast<int>(face[n].size()) != n + 1) {
            add("structure", "face table at level " + std::to_string(n) + " has wrong arity");
            return rep;
        }
        for (int i = 0; i <= n; ++i)
            for (const auto& x : simplices[n]) {
                auto it = face[n][i].find(x);
                if (it == face[n][i].end())
                    add("structure", "d_" + std::to_string(i) + " undefined on " + x);
                else if (!has(n - 1, it->second))
                    add("structure", "d_" + std::to_string(i) + "(" + x + ") not a simplex");
            }
    }
    for (int n = 0; n < N; ++n) {
        if (static_cast<int>(degeneracy[n].size()) != n + 1) {
            add("structure", "degeneracy table at level " + std::to_string(n) + " has wrong arity");
            return rep;
        }
        for (int j = 0; j <= n; ++j)
            for (const auto& x : simplices[n]) {
                auto it = degeneracy[n][j].find(x);
                if (it == degeneracy[n][j].end())
                    add("structure", "s_" + std::to_string(j) + " undefined on " + x);
                else if (!has(n + 1, it->second))
                    add("structure", "s_" + std::to_string(j) + "(" + x + ") not a simplex");
            }
    }
    if (!rep.ok()) return rep;

    // d_i d_j = d_{j-1} d_i for i < j.
    for (int n = 2; n <= N; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                for (const auto& x : simplices[n])
                    if (d(n - 1, i, d(n, j, x)) != d(n - 1, j - 1, d(n, i, x)))
                        add("face-face", "d" + std::to_string(i) + " d" + std::to_string(j) +
                                             " != d" + std::to_string(j - 1) + " d" +
                                             std::to_string(i) + " on " + x);

    // s_i s_j = s_{j+1} s_i for i <= j.
    for (int n = 0; n + 2 <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                for (const auto& x : simplices[n])
                    if (s(n + 1, i, s(n, j, x)) != s(n + 1, j + 1, s(n, i, x)))
                        add("deg-deg", "s" + std::to_string(i) + " s" + std::to_string(j) +
                                           " != s" + std::to_string(j + 1) + " s" +
                                           std::to_string(i) + " on " + x);

    // Mixed identities.
    for (int n = 0; n + 1 <= N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i)
                for (const auto& x : simplices[n]) {
                    const Id& sx = s(n, j, x);
                    const Id& lhs = d(n + 1, i, sx);
                    if (i == j || i == j + 1) {
                        if (lhs != x)
                            add("mixed", "d" + std::to_string(i) + " s" + std::to_string(j) +
                                             " != id on " + x);
                    } else if (i < j) {
                        if (lhs != s(n - 1, j - 1, d(n, i, x)))
                            add("mixed", "d" + std::to_string(i) + " s" + std::to_string(j) +
                                             " != s" + std::to_string(j - 1) + " d" +
                                             std::to_string(i) + " on " + x);
                    } else { // i > j + 1
                        if (lhs != s(n - 1, j, d(n, i - 1, x)))
                            add("mixed", "d" + std::to_string(i) + " s" + std::to_string(j) +
                                             " != s" + std::to_string(j) + " d" +
                                             std::to_string(i - 1) + " on " + x);
                    }
                }
    return rep;
}

const Id& SimplicialMap::at(int n, const Id& x) const {
    if (n < 0 || n >= static_cast<int>(levels.size()))
        throw InputError("simplicial map level out of range");
    auto it = levels[n].find(x);
    if (it == levels[n].end()) throw InputError("simplicial map undefined on " + x);
    return it->second;
}

ValidationReport SimplicialMap::validate() const {
    ValidationReport rep;
    auto add = [&](std::string kind, std::string detail) {
        rep.violations.push_back({std::move(kind), std::move(detail)});
    };
    int N = std::min(source.truncation, target.truncation);
    if (static_cast<int>(levels.size()) < N + 1) {
        add("structure", "map has too few levels");
        return rep;
    }
    for (int n = 0; n <= N; ++n)
        for (const auto& x : source.simplices[n]) {
            auto it = levels[n].find(x);
            if (it == levels[n].end())
                add("structure", "map undefined on " + x);
            else if (!target.has(n, it->second))
                add("structure", "map sends " + x + " outside target");
        }
    if (!rep.ok()) return rep;
    for (int n = 1; n <= N; ++n)
        for (int i = 0; i <= n; ++i)
            for (const auto& x : source.simplices[n])
                if (target.d(n, i, at(n, x)) != at(n - 1, source.d(n, i, x)))
                    add("face", "map does not commute with d" + std::to_string(i) + " on " + x);
    for (int n = 0; n < N; ++n)
        for (int j = 0; j <= n; ++j)
            for (const auto& x : source.simplices[n])
                if (target.s(n, j, at(n, x)) != at(n + 1, source.s(n, j, x)))
                    add("degeneracy",
                        "map does not commute with s" + std::to_string(j) + " on " + x);
    return rep;
}

// ---------------------------------------------------------------------------
// Nerve
// ---------------------------------------------------------------------------

SimplicialSet nerve(const fincat::FinCategory& c, int N) {
    if (N < 1) throw InputError("nerve: truncation must be >= 1");
    SimplicialSet X;
    X.truncation = N;
    X.simplices.resize(N + 1);
    X.face.resize(N + 1);
    X.degeneracy.resize(N + 1);

    // Chains by level; a level-n simplex is the list of its n arrows.
    std::vector<std::vector<std::vector<Id>>> chains(N + 1);
    X.simplices[0] = c.objects;

    auto chain_id = [&](const std::vector<Id>& ms) { return join(ms, "|"); };

    // Level n chains extend level n-1 chains by one composable arrow.
    std::map<Id, std::vector<Id>> by_id; // id -> arrows, for faces
    for (const auto& o : c.objects) by_id[o] = {};

    for (int n = 1; n <= N; ++n) {
        std::vector<std::vector<Id>> cur;
        if (n == 1) {
            for (const auto& m : c.morphisms) cur.push_back({m.id});
        } else {
            for (const auto& ms : chains[n - 1]) {
                const Id tail_cod = c.morphism(ms.back()).cod;
                for (const auto& m : c.morphisms)
                    if (m.dom == tail_cod) {
                        auto ext = ms;
                        ext.push_back(m.id);
                        cur.push_back(std::move(ext));
                    }
            }
        }
        chains[n] = cur;
        for (const auto& ms : cur) {
            X.simplices[n].push_back(chain_id(ms));
            by_id[chain_id(ms)] = ms;
        }
        std::sort(X.simplices[n].begin(), X.simplices[n].end());
        X.simplices[n].erase(std::unique(X.simplices[n].begin(), X.simplices[n].end()),
                             X.simplices[n].end());
    }

    // Faces.
    for (int n = 1; n <= N; ++n) {
        X.face[n].resize(n + 1);
        for (const auto& xid : X.simplices[n]) {
            const auto& ms = by_id.at(xid);
            for (int i = 0; i <= n; ++i) {
                Id img;
                if (n == 1) {
                    img = (i == 0) ? c.morphism(ms[0]).cod : c.morphism(ms[0]).dom;
                } else if (i == 0) {
                    std::vector<Id> rest(ms.begin() + 1, ms.end());
                    img = chain_id(rest);
                } else if (i == n) {
                    std::vector<Id> rest(ms.begin(), ms.end() - 1);
                    img = chain_id(rest);
                } else {
                    std::vector<Id> rest;
                    for (int t = 0; t < n; ++t) {
                        if (t == i - 1) continue;
                        if (t == i)
                            rest.push_back(c.compose(ms[i], ms[i - 1]));
                        else
                            rest.push_back(ms[t]);
                    }
                    img = chain_id(rest);
                }
                X.face[n][i][xid] = img;
            }
        }
    }

    // Degeneracies: s_j inserts the identity of the j-th object.
    for (int n = 0; n < N; ++n) {
        X.degeneracy[n].resize(n + 1);
        for (const auto& xid : X.simplices[n]) {
            if (n == 0) {
                X.degeneracy[0][0][xid] = c.identity_of(xid);
                continue;
            }
            const auto& ms = by_id.at(xid);
            for (int j = 0; j <= n; ++j) {
                Id obj = (j == 0) ? c.morphism(ms[0]).dom : c.morphism(ms[j - 1]).cod;
                std::vector<Id> ext;
                for (int t = 0; t < j; ++t) ext.push_back(ms[t]);
                ext.push_back(c.identity_of(obj));
                for (int t = j; t < n; ++t) ext.push_back(ms[t]);
                X.degeneracy[n][j][xid] = chain_id(ext);
            }
        }
    }
    return X;
}

// ---------------------------------------------------------------------------
// Standard shapes
// ---------------------------------------------------------------------------

SimplicialSet build_shape(ShapeKind kind, int n, int k, int truncation) {
    if (n < 0) throw InputError("build_shape: n must be >= 0");
    if (kind == ShapeKind::Horn) {
        if (k < 0 || k > n) throw InputError("build_shape: horn index out of range");
        if (n < 1) throw InputError("build_shape: horns need n >= 1");
    }
    int N = truncation < 0 ? std::max(n, 1) : truncation;

    auto keep = [&](const std::vector<int>& tuple) {
        if (kind == ShapeKind::Standard) return true;
        std::set<int> image(tuple.begin(), tuple.end());
        if (kind == ShapeKind::Boundary) return static_cast<int>(image.size()) != n + 1;
        image.insert(k);
        return static_cast<int>(image.size()) != n + 1; // horn: image ∪ {k} != [n]
    };

    auto encode = [](const std::vector<int>& tuple) {
        std::vector<Id> parts;
        for (int v : tuple) parts.push_back(std::to_string(v));
        return join(parts, ".");
    };

    SimplicialSet X;
    X.truncation = N;
    X.simplices.resize(N + 1);
    X.face.resize(N + 1);
    X.degeneracy.resize(N + 1);

    std::vector<std::vector<std::vector<int>>> tuples(N + 1);
    std::function<void(int, std::vector<int>&)> gen = [&](int m, std::vector<int>& acc) {
        if (static_cast<int>(acc.size()) == m + 1) {
            if (keep(acc)) tuples[m].push_back(acc);
            return;
        }
        int lo = acc.empty() ? 0 : acc.back();
        for (int v = lo; v <= n; ++v) {
            acc.push_back(v);
            gen(m, acc);
            acc.pop_back();
        }
    };
    for (int m = 0; m <= N; ++m) {
        std::vector<int> acc;
        gen(m, acc);
        for (const auto& t : tuples[m]) X.simplices[m].push_back(encode(t));
        std::sort(X.simplices[m].begin(), X.simplices[m].end());
    }

    for (int m = 1; m <= N; ++m) {
        X.face[m].resize(m + 1);
        for (const auto& t : tuples[m]) {
            for (int i = 0; i <= m; ++i) {
                std::vector<int> ft;
                for (int idx = 0; idx <= m; ++idx)
                    if (idx != i) ft.push_back(t[idx]);
                X.face[m][i][encode(t)] = encode(ft);
            }
        }
    }
    for (int m = 0; m < N; ++m) {
        X.degeneracy[m].resize(m + 1);
        for (const auto& t : tuples[m]) {
            for (int j = 0; j <= m; ++j) {
                std::vector<int> st;
                for (int idx = 0; idx <= m; ++idx) {
                    st.push_back(t[idx]);
                    if (idx == j) st.push_back(t[idx]);
                }
                X.degeneracy[m][j][encode(t)] = encode(st);
            }
        }
    }
    return X;
}

// ---------------------------------------------------------------------------
// Horns
// ---------------------------------------------------------------------------

HornProblem HornProblem::make(int n, int k, SimplicialSet target, std::map<int, Id> assignment) {
    if (n < 1) throw InputError("horn problem: n must be >= 1");
    if (k < 0 || k > n) throw InputError("horn problem: k out of range");
    if (target.truncation < n) throw InputError("horn problem: target truncation < n");
    for (int i = 0; i <= n; ++i) {
        if (i == k) {
            if (assignment.count(i)) throw InputError("horn problem: face k must be absent");
            continue;
        }
        auto it = assignment.find(i);
        if (it == assignment.end())
            throw InputError("horn problem: missing face " + std::to_string(i));
        if (!target.has(n - 1, it->second))
            throw InputError("horn problem: assigned face " + it->second + " not a simplex");
    }
    if (n >= 2) {
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i) {
                if (i == k || j == k) continue;
                if (target.d(n - 1, i, assignment.at(j)) !=
                    target.d(n - 1, j - 1, assignment.at(i)))
                    throw InputError("horn problem: assignment violates face identities at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }
    HornProblem p;
    p.n = n;
    p.k = k;
    p.target = std::move(target);
    p.assignment = std::move(assignment);
    return p;
}

std::vector<Id> enumerate_horn_fillers(const HornProblem& p) {
    std::vector<Id> out;
    for (const auto& sigma : p.target.simplices[p.n]) {
        bool match = true;
        for (const auto& [i, t] : p.assignment)
            if (p.target.d(p.n, i, sigma) != t) {
                match = false;
                break;
            }
        if (match) out.push_back(sigma);
    }
    return out;
}

std::vector<std::map<int, Id>> enumerate_horn_assignments(const SimplicialSet& x, int n, int k,
                                                          Budget* budget) {
    Budget local;
    Budget& b = budget ? *budget : local;
    std::vector<int> faces;
    for (int i = 0; i <= n; ++i)
        if (i != k) faces.push_back(i);

    std::vector<std::map<int, Id>> out;
    std::map<int, Id> acc;
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == faces.size()) {
            out.push_back(acc);
            return;
        }
        int j = faces[pos];
        for (const auto& t : x.simplices[n - 1]) {
            b.charge();
            bool ok = true;
            if (n >= 2) {
                for (size_t q = 0; q < pos && ok; ++q) {
                    int i = faces[q]; // i < j by construction
                    if (x.d(n - 1, i, t) != x.d(n - 1, j - 1, acc.at(i))) ok = false;
                }
            }
            if (!ok) continue;
            acc[j] = t;
            rec(pos + 1);
            acc.erase(j);
        }
    };
    rec(0);
    return out;
}

KanReport is_kan_complex(const SimplicialSet& x, int m, Budget* budget) {
    if (m > x.truncation) throw InputError("is_kan_complex: m exceeds truncation");
    Budget local;
    Budget& b = budget ? *budget : local;
    for (int n = 1; n <= m; ++n)
        for (int k = 0; k <= n; ++k)
            for (auto& asg : enumerate_horn_assignments(x, n, k, &b)) {
                auto p = HornProblem::make(n, k, x, asg);
                if (enumerate_horn_fillers(p).empty()) return {false, std::move(p)};
            }
    return {true, std::nullopt};
}

InnerExtensionReport is_inner_extension_complete(const SimplicialSet& x, int m, Budget* budget) {
    if (m > x.truncation) throw InputError("is_inner_extension_complete: m exceeds truncation");
    Budget local;
    Budget& b = budget ? *budget : local;
    InnerExtensionReport rep;
    for (int n = 2; n <= m; ++n)
        for (int k = 1; k < n; ++k)
            for (auto& asg : enumerate_horn_assignments(x, n, k, &b)) {
                auto p = HornProblem::make(n, k, x, asg);
                size_t count = enumerate_horn_fillers(p).size();
                if (count == 0) {
                    rep.complete = false;
                    rep.unique = false;
                    rep.witness = std::move(p);
                    return rep;
                }
                if (count > 1 && rep.unique) {
                    rep.unique = false;
                    if (!rep.witness) rep.witness = std::move(p);
                }
            }
    return rep;
}

// ---------------------------------------------------------------------------
// Cylinder and homotopy
// ---------------------------------------------------------------------------

namespace {

// Monotone maps [m] -> [1] encoded "0.0.1.1".
std::vector<Id> interval_level(int m) {
    std::vector<Id> out;
    for (int ones = 0; ones <= m + 1; ++ones) {
        std::vector<Id> parts;
        for (int i = 0; i <= m; ++i) parts.push_back(i >= m + 1 - ones ? "1" : "0");
        out.push_back(join(parts, "."));
    }
    return out;
}

Id tuple_face(const Id& enc, int i) {
    auto parts = split(enc, '.');
    parts.erase(parts.begin() + i);
    return join(parts, ".");
}

Id tuple_deg(const Id& enc, int j) {
    auto parts = split(enc, '.');
    parts.insert(parts.begin() + j, parts[j]);
    return join(parts, ".");
}

Id pair_id(const Id& a, const Id& x) { return "(" + a + ";" + x + ")"; }

} // namespace

SimplicialSet cylinder(const SimplicialSet& x, std::int64_t level_cap) {
    SimplicialSet P;
    const int N = x.truncation;
    P.truncation = N;
    P.simplices.resize(N + 1);
    P.face.resize(N + 1);
    P.degeneracy.resize(N + 1);

    std::vector<std::vector<Id>> ivl(N + 1);
    for (int m = 0; m <= N; ++m) ivl[m] = interval_level(m);

    for (int m = 0; m <= N; ++m) {
        std::int64_t count =
            static_cast<std::int64_t>(ivl[m].size()) * static_cast<std::int64_t>(x.simplices[m].size());
        if (count > level_cap)
            throw CapacityError("cylinder level " + std::to_string(m) + " exceeds cap (" +
                                std::to_string(count) + " simplices)");
        for (const auto& a : ivl[m])
            for (const auto& xs : x.simplices[m]) P.simplices[m].push_back(pair_id(a, xs));
        std::sort(P.simplices[m].begin(), P.simplices[m].end());
    }
    for (int m = 1; m <= N; ++m) {
        P.face[m].resize(m + 1);
        for (const auto& a : ivl[m])
            for (const auto& xs : x.simplices[m])
                for (int i = 0; i <= m; ++i)
                    P.face[m][i][pair_id(a, xs)] = pair_id(tuple_face(a, i), x.d(m, i, xs));
    }
    for (int m = 0; m < N; ++m) {
        P.degeneracy[m].resize(m + 1);
        for (const auto& a : ivl[m])
            for (const auto& xs : x.simplices[m])
                for (int j = 0; j <= m; ++j)
                    P.degeneracy[m][j][pair_id(a, xs)] = pair_id(tuple_deg(a, j), x.s(m, j, xs));
    }
    return P;
}

std::vector<SimplicialMap> enumerate_simplicial_maps(const SimplicialSet& src,
                                                     const SimplicialSet& dst,
                                                     const std::vector<std::map<Id, Id>>* pinned,
                                                     Budget* budget) {
    Budget local;
    Budget& b = budget ? *budget : local;
    const int N = src.truncation;
    if (dst.truncation < N) throw InputError("enumerate_simplicial_maps: target too shallow");

    std::vector<SimplicialMap> out;
    std::vector<std::map<Id, Id>> levels(N + 1);

    auto pinned_at = [&](int n, const Id& xid) -> const Id* {
        if (!pinned || n >= static_cast<int>(pinned->size())) return nullptr;
        auto it = (*pinned)[n].find(xid);
        return it == (*pinned)[n].end() ? nullptr : &it->second;
    };

    // Per level, nondegenerate simplices get free (constrained) choices and
    // degenerate ones are forced by lower levels.
    std::vector<std::vector<Id>> free_simplices(N + 1);
    std::vector<std::vector<Id>> forced_simplices(N + 1);
    for (int n = 0; n <= N; ++n)
        for (const auto& xid : src.simplices[n])
            (src.is_degenerate(n, xid) ? forced_simplices[n] : free_simplices[n]).push_back(xid);

    std::function<bool(int)> do_level; // returns false to abort (never used)
    std::function<void(int, size_t)> choose;

    do_level = [&](int n) -> bool {
        if (n > N) {
            SimplicialMap h;
            h.source = src;
            h.target = dst;
            h.levels = levels;
            out.push_back(std::move(h));
            return true;
        }
        // Forced images first; any clash kills this branch.
        std::vector<Id> added;
        bool ok = true;
        for (const auto& xid : forced_simplices[n]) {
            Id img;
            bool found = false;
            for (int j = 0; j < n && !found; ++j) {
                const Id& below = src.d(n, j, xid);
                if (src.s(n - 1, j, below) == xid) {
                    img = dst.s(n - 1, j, levels[n - 1].at(below));
                    found = true;
                }
            }
            if (!found) { ok = false; break; }
            if (const Id* pin = pinned_at(n, xid); pin && *pin != img) { ok = false; break; }
            levels[n][xid] = img;
            added.push_back(xid);
        }
        if (ok) choose(n, 0);
        for (const auto& xid : added) levels[n].erase(xid);
        return true;
    };

    choose = [&](int n, size_t idx) {
        if (idx == free_simplices[n].size()) {
            do_level(n + 1);
            return;
        }
        const Id& xid = free_simplices[n][idx];
        const Id* pin = pinned_at(n, xid);
        for (const auto& yid : dst.simplices[n]) {
            b.charge();
            if (pin && *pin != yid) continue;
            bool ok = true;
            for (int i = 0; i <= n && ok; ++i) {
                if (n == 0) break;
                if (dst.d(n, i, yid) != levels[n - 1].at(src.d(n, i, xid))) ok = false;
            }
            if (!ok) continue;
            levels[n][xid] = yid;
            choose(n, idx + 1);
            levels[n].erase(xid);
        }
    };

    do_level(0);
    return out;
}

bool homotopic(const SimplicialMap& f0, const SimplicialMap& f1, Budget* budget) {
    const SimplicialSet& X = f0.source;
    const SimplicialSet& Y = f0.target;
    if (f1.source.simplices != X.simplices || f1.target.simplices != Y.simplices)
        throw InputError("homotopic: maps must share source and target");
    if (X.truncation < 1) throw InputError("homotopic: source truncation must be >= 1");

    SimplicialSet P = cylinder(X);

    // Pin h on the two ends {0} x X and {1} x X.
    std::vector<std::map<Id, Id>> pinned(P.truncation + 1);
    for (int n = 0; n <= P.truncation; ++n) {
        std::vector<Id> zeros, ones;
        for (int i = 0; i <= n; ++i) {
            zeros.push_back("0");
            ones.push_back("1");
        }
        Id c0 = join(zeros, "."), c1 = join(ones, ".");
        for (const auto& xs : X.simplices[n]) {
            pinned[n][pair_id(c0, xs)] = f0.at(n, xs);
            pinned[n][pair_id(c1, xs)] = f1.at(n, xs);
        }
    }

    Budget local;
    Budget& b = budget ? *budget : local;
    auto maps = enumerate_simplicial_maps(P, Y, &pinned, &b);
    return !maps.empty();
}

SimplicialMap nerve_map(const fincat::FinFunctor& F, int N) {
    SimplicialMap h;
    h.source = nerve(F.source, N);
    h.target = nerve(F.target, N);
    h.levels.resize(N + 1);
    for (const auto& o : F.source.objects) h.levels[0][o] = F.on_object(o);
    for (int n = 1; n <= N; ++n)
        for (const auto& xid : h.source.simplices[n]) {
            auto arrows = split(xid, '|');
            std::vector<Id> imgs;
            for (const auto& a : arrows) imgs.push_back(F.on_morphism(a));
            h.levels[n][xid] = join(imgs, "|");
        }
    return h;
}

HornProblem horn_problem_from_map(int n, int k, const SimplicialMap& horn_to_target) {
    std::map<int, Id> assignment;
    for (int i = 0; i <= n; ++i) {
        if (i == k) continue;
        // The (n-1)-face of Δ^n opposite vertex i, as a vertex tuple.
        std::vector<Id> parts;
        for (int v = 0; v <= n; ++v)
            if (v != i) parts.push_back(std::to_string(v));
        assignment[i] = horn_to_target.at(n - 1, join(parts, "."));
    }
    return HornProblem::make(n, k, horn_to_target.target, assignment);
}

} // namespace gaiakit::simplicial
