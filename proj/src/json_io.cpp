#include "gaiakit/json_io.hpp"

#include <fstream>

namespace gaiakit::io {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw InputError(what);
}

std::vector<std::string> string_list(const json& j, const std::string& key) {
    require(j.contains(key) && j.at(key).is_array(), "expected array field '" + key + "'");
    std::vector<std::string> out;
    for (const auto& v : j.at(key)) {
        require(v.is_string(), "field '" + key + "' must contain strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::map<std::string, std::string> string_table(const json& j) {
    require(j.is_object(), "expected an object of string entries");
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : j.items()) {
        require(v.is_string(), "table values must be strings");
        out[k] = v.get<std::string>();
    }
    return out;
}

} // namespace

json category_to_json(const fincat::FinCategory& c) {
    json j;
    j["objects"] = c.objects;
    json morphs = json::array();
    for (const auto& m : c.morphisms)
        morphs.push_back({{"id", m.id}, {"dom", m.dom}, {"cod", m.cod}});
    j["morphisms"] = morphs;
    j["identity"] = c.identity;
    json comp = json::array();
    for (const auto& [gf, h] : c.composition) comp.push_back({gf.first, gf.second, h});
    j["compose"] = comp;
    return j;
}

fincat::FinCategory category_from_json(const json& j) {
    auto objects = string_list(j, "objects");
    require(j.contains("morphisms") && j.at("morphisms").is_array(),
            "expected array field 'morphisms'");
    std::vector<fincat::Morphism> morphisms;
    for (const auto& m : j.at("morphisms")) {
        require(m.is_object() && m.contains("id") && m.contains("dom") && m.contains("cod"),
                "each morphism needs id/dom/cod");
        morphisms.push_back({m.at("id").get<std::string>(), m.at("dom").get<std::string>(),
                             m.at("cod").get<std::string>()});
    }
    require(j.contains("identity"), "expected field 'identity'");
    std::map<std::string, std::string> identity = string_table(j.at("identity"));
    std::map<std::pair<std::string, std::string>, std::string> compose;
    require(j.contains("compose") && j.at("compose").is_array(), "expected array field 'compose'");
    for (const auto& entry : j.at("compose")) {
        require(entry.is_array() && entry.size() == 3, "compose entries are [g, f, gf] triples");
        compose[{entry[0].get<std::string>(), entry[1].get<std::string>()}] =
            entry[2].get<std::string>();
    }
    return fincat::FinCategory::make(objects, morphisms, identity, compose);
}

json functor_maps_to_json(const fincat::FinFunctor& F) {
    json j;
    j["object_map"] = F.object_map;
    j["morphism_map"] = F.morphism_map;
    return j;
}

fincat::FinFunctor functor_from_json(const json& j, fincat::FinCategory source,
                                     fincat::FinCategory target) {
    require(j.contains("object_map") && j.contains("morphism_map"),
            "functor file needs object_map and morphism_map");
    fincat::FinFunctor F;
    F.source = std::move(source);
    F.target = std::move(target);
    F.object_map = string_table(j.at("object_map"));
    F.morphism_map = string_table(j.at("morphism_map"));
    return F;
}

json instance_to_json(const elements::SetInstance& inst) {
    json j;
    j["tables"] = inst.tables;
    j["actions"] = inst.actions;
    return j;
}

elements::SetInstance instance_from_json(const json& j, fincat::FinCategory schema) {
    require(j.contains("tables") && j.contains("actions"),
            "instance file needs tables and actions");
    elements::SetInstance inst;
    inst.schema = std::move(schema);
    for (const auto& [k, v] : j.at("tables").items()) {
        require(v.is_array(), "instance tables must be arrays");
        std::vector<std::string> elems;
        for (const auto& e : v) elems.push_back(e.get<std::string>());
        inst.tables[k] = elems;
    }
    for (const auto& [k, v] : j.at("actions").items()) inst.actions[k] = string_table(v);
    return inst;
}

json simplicial_to_json(const simplicial::SimplicialSet& x) {
    json j;
    j["truncation"] = x.truncation;
    j["simplices"] = x.simplices;
    json faces = json::array();
    for (int n = 0; n <= x.truncation; ++n) {
        json level = json::array();
        for (const auto& table : x.face[n]) level.push_back(table);
        faces.push_back(level);
    }
    j["face"] = faces;
    json degs = json::array();
    for (int n = 0; n <= x.truncation; ++n) {
        json level = json::array();
        for (const auto& table : x.degeneracy[n]) level.push_back(table);
        degs.push_back(level);
    }
    j["degeneracy"] = degs;
    return j;
}

simplicial::SimplicialSet simplicial_from_json(const json& j) {
    require(j.contains("truncation") && j.at("truncation").is_number_integer(),
            "simplicial file needs integer 'truncation'");
    simplicial::SimplicialSet x;
    x.truncation = j.at("truncation").get<int>();
    require(x.truncation >= 0, "truncation must be nonnegative");
    require(j.contains("simplices") && j.at("simplices").is_array(),
            "simplicial file needs 'simplices'");
    for (const auto& level : j.at("simplices")) {
        std::vector<std::string> ids;
        for (const auto& s : level) ids.push_back(s.get<std::string>());
        x.simplices.push_back(ids);
    }
    require(static_cast<int>(x.simplices.size()) == x.truncation + 1,
            "simplices must list every level up to the truncation");
    x.face.resize(x.truncation + 1);
    x.degeneracy.resize(x.truncation + 1);
    require(j.contains("face") && j.contains("degeneracy"),
            "simplicial file needs face and degeneracy tables");
    const auto& faces = j.at("face");
    for (int n = 0; n <= x.truncation && n < static_cast<int>(faces.size()); ++n)
        for (const auto& table : faces[n]) x.face[n].push_back(string_table(table));
    const auto& degs = j.at("degeneracy");
    for (int n = 0; n <= x.truncation && n < static_cast<int>(degs.size()); ++n)
        for (const auto& table : degs[n]) x.degeneracy[n].push_back(string_table(table));
    auto rep = x.validate();
    if (!rep.ok())
        throw InputError("simplicial set fails validation: " + rep.violations.front().kind +
                         ", " + rep.violations.front().detail);
    return x;
}

json lts_to_json(const coalgebra::Coalgebra& c) {
    json j;
    j["states"] = c.carrier;
    j["labels"] = c.spec.alphabet;
    json trans = json::array();
    for (const auto& [s, succ] : c.lts_succ)
        for (const auto& [a, t] : succ) trans.push_back({s, a, t});
    j["transitions"] = trans;
    return j;
}

coalgebra::Coalgebra lts_from_json(const json& j) {
    coalgebra::Coalgebra c;
    c.spec.kind = coalgebra::FunctorKind::Lts;
    c.carrier = string_list(j, "states");
    c.spec.alphabet = string_list(j, "labels");
    for (const auto& s : c.carrier) c.lts_succ[s] = {};
    require(j.contains("transitions") && j.at("transitions").is_array(),
            "LTS file needs 'transitions'");
    for (const auto& t : j.at("transitions")) {
        require(t.is_array() && t.size() == 3, "transitions are [state, label, state] triples");
        c.lts_succ[t[0].get<std::string>()].insert(
            {t[1].get<std::string>(), t[2].get<std::string>()});
    }
    c.check_well_formed();
    return c;
}

json function_to_json(const lifting::FinFunction& f) {
    json j;
    j["domain"] = f.domain;
    j["codomain"] = f.codomain;
    j["map"] = f.map;
    return j;
}

lifting::FinFunction function_from_json(const json& j) {
    lifting::FinFunction f;
    f.domain = string_list(j, "domain");
    f.codomain = string_list(j, "codomain");
    require(j.contains("map"), "function file needs 'map'");
    f.map = string_table(j.at("map"));
    f.check_total();
    return f;
}

json space_to_json(const genmetric::GenMetricSpace& s) {
    json j;
    j["carrier"] = s.carrier;
    json table = json::object();
    for (const auto& x : s.carrier) {
        json row = json::object();
        for (const auto& y : s.carrier) row[y] = s.d(x, y).str();
        table[x] = row;
    }
    j["table"] = table;
    return j;
}

genmetric::GenMetricSpace space_from_json(const json& j) {
    auto carrier = string_list(j, "carrier");
    require(j.contains("table") && j.at("table").is_object(), "space file needs 'table'");
    std::map<std::pair<std::string, std::string>, genmetric::ExtReal> d;
    for (const auto& [x, row] : j.at("table").items())
        for (const auto& [y, v] : row.items()) {
            if (v.is_number_integer())
                d[{x, y}] = genmetric::ExtReal::from_int(v.get<long long>());
            else
                d[{x, y}] = genmetric::ExtReal::parse(v.get<std::string>());
        }
    return genmetric::make_space(carrier, std::move(d));
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("parse error in " + path + ": " + e.what());
    }
    return j;
}

} // namespace gaiakit::io
