#include "gaiakit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gaiakit/coalgebra.hpp"
#include "gaiakit/elements.hpp"
#include "gaiakit/fincat.hpp"
#include "gaiakit/genmetric.hpp"
#include "gaiakit/homology.hpp"
#include "gaiakit/json_io.hpp"
#include "gaiakit/learn.hpp"
#include "gaiakit/lifting.hpp"
#include "gaiakit/simplicial.hpp"
#include "gaiakit/transformer.hpp"

namespace gaiakit::cli {

namespace {

using io::json;

json violations_to_json(const fincat::ValidationReport& rep) {
    json out = json::array();
    for (const auto& v : rep.violations) out.push_back({{"kind", v.kind}, {"detail", v.detail}});
    return out;
}

// ---- pipeline files -------------------------------------------------------

struct PipelineSpec {
    double epsilon = 0.1;
    learn::ErrorFn error;
    std::vector<learn::ParamFn> layers;
};

PipelineSpec pipeline_from_json(const json& j) {
    PipelineSpec out;
    if (j.contains("epsilon")) out.epsilon = j.at("epsilon").get<double>();
    std::string err_name = j.value("error", std::string("quadratic"));
    if (err_name == "quadratic")
        out.error = learn::quadratic_error();
    else if (err_name.rfind("scaled-quadratic", 0) == 0)
        out.error = learn::scaled_quadratic_error(j.value("error_scale", 1.0));
    else
        throw InputError("unknown error function: " + err_name);

    if (!j.contains("layers") || !j.at("layers").is_array() || j.at("layers").empty())
        throw InputError("pipeline file needs a nonempty 'layers' array");
    for (const auto& layer : j.at("layers")) {
        std::string kind = layer.at("kind").get<std::string>();
        if (kind == "affine")
            out.layers.push_back(learn::affine_fn(layer.at("in").get<int>(),
                                                  layer.at("out").get<int>()));
        else if (kind == "linear")
            out.layers.push_back(learn::linear_fn(layer.at("in").get<int>(),
                                                  layer.at("out").get<int>()));
        else if (kind == "tanh")
            out.layers.push_back(learn::pointwise_tanh_fn(layer.at("n").get<int>()));
        else if (kind == "scalar_mul")
            out.layers.push_back(learn::scalar_mul_fn());
        else if (kind == "add_param")
            out.layers.push_back(learn::add_param_fn());
        else if (kind == "param_value")
            out.layers.push_back(learn::param_value_fn());
        else
            throw InputError("unknown layer kind: " + kind);
    }
    for (size_t i = 0; i + 1 < out.layers.size(); ++i)
        if (out.layers[i].out_arity() != out.layers[i + 1].in_arity)
            throw InputError("pipeline layers are not composable at stage " + std::to_string(i));
    return out;
}

std::vector<std::pair<learn::Vec, learn::Vec>> dataset_from_csv(const std::string& path,
                                                                int in_arity, int out_arity) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open dataset: " + path);
    std::vector<std::pair<learn::Vec, learn::Vec>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<double> vals;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                vals.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw InputError("dataset line " + std::to_string(lineno) + ": bad number '" +
                                 cell + "'");
            }
        }
        if (static_cast<int>(vals.size()) != in_arity + out_arity)
            throw InputError("dataset line " + std::to_string(lineno) + ": expected " +
                             std::to_string(in_arity + out_arity) + " columns");
        rows.push_back({learn::Vec(vals.begin(), vals.begin() + in_arity),
                        learn::Vec(vals.begin() + in_arity, vals.end())});
    }
    return rows;
}

// ---- subcommand bodies ----------------------------------------------------

struct Ctx {
    std::ostream& out;
    int exit_code = 0;

    void emit(const json& j) { out << j.dump(2) << "\n"; }
};

void cmd_validate(Ctx& ctx, const std::string& kind, const std::string& file,
                  const std::string& schema_file, const std::string& source_file,
                  const std::string& target_file) {
    json j = io::load_json_file(file);
    fincat::ValidationReport rep;
    if (kind == "category") {
        rep = fincat::validate_category(io::category_from_json(j));
    } else if (kind == "functor") {
        if (source_file.empty() || target_file.empty())
            throw InputError("validate --kind functor needs --source and --target");
        auto F = io::functor_from_json(j,
                                       io::category_from_json(io::load_json_file(source_file)),
                                       io::category_from_json(io::load_json_file(target_file)));
        rep = fincat::validate_functor(F);
    } else if (kind == "instance") {
        if (schema_file.empty()) throw InputError("validate --kind instance needs --schema");
        auto inst = io::instance_from_json(
            j, io::category_from_json(io::load_json_file(schema_file)));
        rep = elements::validate_instance(inst);
    } else if (kind == "simplicial") {
        // the parser already validates; reaching here means valid
        io::simplicial_from_json(j);
    } else if (kind == "space") {
        io::space_from_json(j); // throws when invalid
    } else {
        throw InputError("unknown validation kind: " + kind);
    }
    ctx.emit({{"valid", rep.ok()}, {"violations", violations_to_json(rep)}});
    if (!rep.ok()) ctx.exit_code = 1;
}

void cmd_nerve(Ctx& ctx, const std::string& file, int truncation) {
    auto c = io::category_from_json(io::load_json_file(file));
    auto rep = fincat::validate_category(c);
    if (!rep.ok()) throw InputError("input is not a category: " + rep.violations.front().detail);
    ctx.emit(io::simplicial_to_json(simplicial::nerve(c, truncation)));
}

void cmd_fill_horn(Ctx& ctx, const std::string& target_file, int n, int k,
                   const std::vector<std::string>& faces, bool expect_solution) {
    auto X = io::simplicial_from_json(io::load_json_file(target_file));
    std::map<int, std::string> assignment;
    for (const auto& f : faces) {
        auto eq = f.find('=');
        if (eq == std::string::npos) throw InputError("--face entries look like i=simplex");
        assignment[std::stoi(f.substr(0, eq))] = f.substr(eq + 1);
    }
    auto p = simplicial::HornProblem::make(n, k, X, assignment);
    auto fillers = simplicial::enumerate_horn_fillers(p);
    ctx.emit({{"fillers", fillers.size()}, {"solutions", fillers}});
    if (expect_solution && fillers.empty()) ctx.exit_code = 1;
}

void cmd_kan_check(Ctx& ctx, const std::string& file, int dim, bool inner, long long budget) {
    auto X = io::simplicial_from_json(io::load_json_file(file));
    Budget b(budget);
    if (inner) {
        auto rep = simplicial::is_inner_extension_complete(X, dim, &b);
        json out = {{"inner_complete", rep.complete}, {"unique_fillers", rep.unique}};
        if (rep.witness)
            out["witness"] = {{"n", rep.witness->n},
                              {"k", rep.witness->k},
                              {"assignment", rep.witness->assignment}};
        ctx.emit(out);
    } else {
        auto rep = simplicial::is_kan_complex(X, dim, &b);
        json out = {{"kan", rep.is_kan}};
        if (rep.witness)
            out["witness"] = {{"n", rep.witness->n},
                              {"k", rep.witness->k},
                              {"assignment", rep.witness->assignment}};
        ctx.emit(out);
    }
}

void cmd_lift(Ctx& ctx, const std::string& f_file, const std::string& p_file,
              const std::string& top_file, const std::string& bottom_file, bool expect_solution,
              long long budget) {
    lifting::SetSquare sq;
    sq.f = io::function_from_json(io::load_json_file(f_file));
    sq.p = io::function_from_json(io::load_json_file(p_file));
    sq.top = io::function_from_json(io::load_json_file(top_file));
    sq.bottom = io::function_from_json(io::load_json_file(bottom_file));
    Budget b(budget);
    auto sols = lifting::solve_lifting(sq, &b);
    json out;
    out["count"] = sols.size();
    json list = json::array();
    for (const auto& h : sols) list.push_back(h.map);
    out["solutions"] = list;
    ctx.emit(out);
    if (expect_solution && sols.empty()) ctx.exit_code = 1;
}

void cmd_query(Ctx& ctx, const std::string& schema_file, const std::string& instance_file,
               const std::string& q_file, const std::string& r_file,
               const std::string& window_file, const std::string& nu_file,
               const std::string& mu_file, bool injective, bool dedupe, long long budget) {
    auto schema = io::category_from_json(io::load_json_file(schema_file));
    auto inst = io::instance_from_json(io::load_json_file(instance_file), schema);
    auto rep = elements::validate_instance(inst);
    if (!rep.ok()) throw InputError("invalid instance: " + rep.violations.front().detail);
    auto Q = io::category_from_json(io::load_json_file(q_file));
    auto R = io::category_from_json(io::load_json_file(r_file));
    auto window = io::functor_from_json(io::load_json_file(window_file), Q, R);
    auto nu = io::functor_from_json(io::load_json_file(nu_file), R, schema);
    if (!fincat::validate_functor(window).ok()) throw InputError("window is not a functor");
    if (!fincat::validate_functor(nu).ok()) throw InputError("nu is not a functor");

    std::optional<lifting::QueryBinding> mu;
    if (!mu_file.empty()) {
        auto mj = io::load_json_file(mu_file);
        lifting::QueryBinding b;
        for (const auto& [k, v] : mj.at("elements").items()) b.elements[k] = v.get<std::string>();
        mu = b;
    }
    lifting::QueryOptions opts;
    opts.injective_bindings = injective;
    opts.dedupe_symmetric = dedupe;
    Budget b(budget);
    auto sols = lifting::query_by_lifting(Q, R, window, nu, inst, mu, opts, &b);

    json out;
    json list = json::array();
    for (const auto& s : sols) {
        json diag = json::array();
        for (const auto& d : s.diagonals) diag.push_back(d);
        list.push_back({{"binding", s.binding.elements}, {"diagonals", diag}});
    }
    out["solutions"] = list;
    out["count"] = sols.size();
    ctx.emit(out);
}

void cmd_migrate(Ctx& ctx, const std::string& mode, const std::string& functor_file,
                 const std::string& source_cat_file, const std::string& target_cat_file,
                 const std::string& instance_file) {
    auto S = io::category_from_json(io::load_json_file(source_cat_file));
    auto T = io::category_from_json(io::load_json_file(target_cat_file));
    auto F = io::functor_from_json(io::load_json_file(functor_file), S, T);
    if (!fincat::validate_functor(F).ok()) throw InputError("migration map is not a functor");

    elements::SetInstance result;
    if (mode == "delta") {
        auto eps = io::instance_from_json(io::load_json_file(instance_file), T);
        if (!elements::validate_instance(eps).ok()) throw InputError("invalid instance");
        result = elements::pullback_migration(F, eps);
    } else if (mode == "sigma" || mode == "pi") {
        auto delta = io::instance_from_json(io::load_json_file(instance_file), S);
        if (!elements::validate_instance(delta).ok()) throw InputError("invalid instance");
        result = mode == "sigma" ? elements::left_kan_migration(F, delta)
                                 : elements::right_kan_migration(F, delta);
    } else {
        throw InputError("--mode must be delta, sigma or pi");
    }
    ctx.emit(io::instance_to_json(result));
}

void cmd_train(Ctx& ctx, const std::string& pipeline_file, const std::string& data_file,
               int epochs, const std::string& mode, std::optional<std::uint64_t> seed,
               double delta, std::optional<double> epsilon) {
    auto spec = pipeline_from_json(io::load_json_file(pipeline_file));
    if (epsilon) spec.epsilon = *epsilon;

    learn::Learner learner;
    if (mode == "backprop") {
        learner = learn::backprop_functor(spec.layers.front(), spec.epsilon, spec.error);
        for (size_t i = 1; i < spec.layers.size(); ++i)
            learner = learn::compose_seq(
                learner, learn::backprop_functor(spec.layers[i], spec.epsilon, spec.error));
    } else if (mode == "zeroth" || mode == "zeroth-literal") {
        if (!seed) throw InputError("zeroth-order training requires --seed");
        learn::ParamFn whole = spec.layers.front();
        for (size_t i = 1; i < spec.layers.size(); ++i)
            whole = learn::compose_paramfn(spec.layers[i], whole);
        learn::ZeroOrderConfig cfg;
        cfg.step_scale = spec.epsilon;
        cfg.delta = delta;
        cfg.seed = *seed;
        cfg.literal_value_update = (mode == "zeroth-literal");
        learner = learn::zeroth_order_functor(whole, spec.error, cfg);
    } else {
        throw InputError("--mode must be backprop, zeroth or zeroth-literal");
    }

    if (seed && mode == "backprop") {
        std::mt19937_64 rng(*seed);
        for (auto& p : learner.params) p = 0.2 * (2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0);
    }

    auto data = dataset_from_csv(data_file, learner.in_arity, learner.out_arity);
    auto res = learn::train(learner, data, epochs, spec.error);
    ctx.emit({{"final_params", res.final_params},
              {"epoch_loss", res.epoch_loss},
              {"epochs", epochs},
              {"samples", data.size()}});
}

void cmd_check_functoriality(Ctx& ctx, const std::string& pipeline_file, int samples,
                             std::uint64_t seed, double tolerance,
                             std::optional<double> epsilon) {
    auto spec = pipeline_from_json(io::load_json_file(pipeline_file));
    if (epsilon) spec.epsilon = *epsilon;
    if (spec.layers.size() < 2)
        throw InputError("check-functoriality needs at least two layers");

    double worst = 0.0;
    bool pass = true;
    json pairs = json::array();
    for (size_t i = 0; i + 1 < spec.layers.size(); ++i) {
        auto rep = learn::functoriality_check(spec.layers[i], spec.layers[i + 1], spec.epsilon,
                                              spec.error, samples, seed + i, tolerance);
        pairs.push_back({{"pair", i},
                         {"max_deviation", rep.max_deviation},
                         {"worst_part", rep.worst_part},
                         {"pass", rep.pass}});
        worst = std::max(worst, rep.max_deviation);
        pass = pass && rep.pass;
    }
    double grad = 0.0;
    for (const auto& layer : spec.layers) grad = std::max(grad, learn::gradient_check(layer, seed));
    ctx.emit({{"pass", pass && grad <= 1e-5},
              {"max_deviation", worst},
              {"gradient_check_max_rel", grad},
              {"pairs", pairs},
              {"tolerance", tolerance}});
    if (!(pass && grad <= 1e-5)) ctx.exit_code = 1;
}

void cmd_equivariance(Ctx& ctx, int d, int n, int heads, int head_dim, int hidden,
                      std::uint64_t seed, int permutations, bool exhaustive, double tolerance) {
    auto block = learn::TransformerBlock::random(seed, d, heads, head_dim, hidden);
    std::mt19937_64 rng(seed + 1);
    auto u = [&]() { return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0; };
    learn::Matrix X(d, n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) X.at(i, j) = u();

    double worst = 0.0;
    int tested = 0;
    if (exhaustive) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            worst = std::max(worst, learn::equivariance_deviation(block, X, perm));
            ++tested;
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int s = 0; s < permutations; ++s) {
            for (int i = n - 1; i > 0; --i)
                std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
            worst = std::max(worst, learn::equivariance_deviation(block, X, perm));
            ++tested;
        }
    }
    bool pass = worst <= tolerance;
    ctx.emit({{"max_deviation", worst},
              {"permutations_tested", tested},
              {"pass", pass},
              {"tolerance", tolerance}});
    if (!pass) ctx.exit_code = 1;
}

void cmd_bisim(Ctx& ctx, const std::string& lhs_file, const std::string& rhs_file) {
    auto L = io::lts_from_json(io::load_json_file(lhs_file));
    auto R = io::lts_from_json(io::load_json_file(rhs_file));
    auto bis = coalgebra::greatest_bisimulation(L, R);
    json pairs = json::array();
    for (const auto& [s, t] : bis.pairs) pairs.push_back({s, t});
    ctx.emit({{"pairs", pairs}, {"count", bis.pairs.size()}});
}

void cmd_coinductive_solve(Ctx& ctx, const std::string& file, double tolerance,
                           std::optional<double> modulus) {
    auto j = io::load_json_file(file);
    if (!j.contains("A") || !j.contains("b") || !j.contains("x0"))
        throw InputError("coinductive-solve input needs A, b, x0");
    std::vector<std::vector<double>> A = j.at("A").get<std::vector<std::vector<double>>>();
    std::vector<double> b = j.at("b").get<std::vector<double>>();
    std::vector<double> x0 = j.at("x0").get<std::vector<double>>();
    size_t dim = b.size();
    if (A.size() != dim || x0.size() != dim)
        throw InputError("coinductive-solve: dimension mismatch");
    for (const auto& row : A)
        if (row.size() != dim) throw InputError("coinductive-solve: A is not square");

    auto H = [A, b, dim](const learn::Vec& v) {
        learn::Vec out(dim, 0.0);
        for (size_t i = 0; i < dim; ++i) {
            for (size_t k = 0; k < dim; ++k) out[i] += A[i][k] * v[k];
            out[i] += b[i];
        }
        return out;
    };

    if (j.contains("modulus") && !modulus) modulus = j.at("modulus").get<double>();
    auto res = coalgebra::metric_coinduction_iterate(H, x0, modulus, tolerance);
    const auto& c = res.certificate;
    ctx.emit({{"fixed_point", res.fixed_point},
              {"iterations", c.iterations},
              {"converged", c.converged},
              {"modulus", c.modulus},
              {"modulus_estimated", c.modulus_estimated},
              {"final_step", c.final_step},
              {"final_residual", c.final_residual},
              {"h_contracts", c.h_contracts},
              {"h_squared_contracts", c.h_squared_contracts}});
    if (!c.converged) ctx.exit_code = 1;
}

void cmd_yoneda_check(Ctx& ctx, const std::string& file) {
    auto space = io::space_from_json(io::load_json_file(file));
    auto rep = genmetric::check_isometry(space);

    // per-pair deviations: exact zero everywhere when the isometry holds
    json deviations = json::object();
    std::map<std::string, genmetric::Copresheaf> embedded;
    for (const auto& x : space.carrier) embedded[x] = genmetric::yoneda_embed(space, x);
    for (const auto& x : space.carrier) {
        json row = json::object();
        for (const auto& y : space.carrier) {
            auto base = space.d(x, y);
            auto lifted = genmetric::presheaf_distance(embedded.at(x), embedded.at(y));
            row[y] = (base == lifted)
                         ? "0"
                         : "base " + base.str() + " vs presheaf " + lifted.str();
        }
        deviations[x] = row;
    }
    ctx.emit({{"isometry", rep.exact}, {"deviations", deviations}});
    if (!rep.exact) ctx.exit_code = 1;
}

void cmd_homology(Ctx& ctx, const std::string& file, const std::string& kind,
                  const std::string& schema_file, int truncation,
                  const std::string& export_prefix) {
    simplicial::SimplicialSet X;
    bool have_complex = true;
    homology::HomologyResult res;
    if (kind == "simplicial") {
        X = io::simplicial_from_json(io::load_json_file(file));
        res = homology::homology(X);
    } else if (kind == "category") {
        auto c = io::category_from_json(io::load_json_file(file));
        if (!fincat::validate_category(c).ok()) throw InputError("input is not a category");
        X = simplicial::nerve(c, truncation);
        res = homology::homology(X);
    } else if (kind == "instance") {
        if (schema_file.empty()) throw InputError("homology --kind instance needs --schema");
        auto schema = io::category_from_json(io::load_json_file(schema_file));
        auto inst = io::instance_from_json(io::load_json_file(file), schema);
        if (!elements::validate_instance(inst).ok()) throw InputError("invalid instance");
        res = homology::hocolim_homology(inst, truncation);
        have_complex = false;
        auto el = elements::category_of_elements(inst);
        if (!el.category.objects.empty()) X = simplicial::nerve(el.category, truncation);
        have_complex = !el.category.objects.empty();
    } else {
        throw InputError("--kind must be simplicial, category or instance");
    }

    json out = {{"betti", res.betti},
                {"torsion", res.torsion},
                {"top_dim", res.top_dim},
                {"top_dimension_flag", res.top_truncated ? "lower bound only" : "exact"},
                {"euler_characteristic", res.euler_characteristic()}};

    if (!export_prefix.empty() && have_complex) {
        auto cc = homology::chain_complex(X);
        json files = json::array();
        for (int n = 1; n <= cc.top_dim(); ++n) {
            std::string path = export_prefix + "_d" + std::to_string(n) + ".txt";
            std::ofstream f(path);
            f << homology::boundary_triplets(cc, n);
            files.push_back(path);
        }
        out["boundary_files"] = files;
    }
    ctx.emit(out);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"categorical computation kit"};
    app.require_subcommand(1);

    Ctx ctx{out};
    long long budget = Budget::default_budget();

    // validate ---------------------------------------------------------
    std::string v_kind = "category", v_file, v_schema, v_source, v_target;
    auto* validate = app.add_subcommand("validate", "check axioms of a presented structure");
    validate->add_option("file", v_file)->required();
    validate->add_option("--kind", v_kind, "category|functor|instance|simplicial|space");
    validate->add_option("--schema", v_schema);
    validate->add_option("--source", v_source);
    validate->add_option("--target", v_target);
    validate->callback([&] { cmd_validate(ctx, v_kind, v_file, v_schema, v_source, v_target); });

    // nerve --------------------------------------------------------------
    std::string n_file;
    int n_trunc = 3;
    auto* nerve = app.add_subcommand("nerve", "nerve of a finite category");
    nerve->add_option("file", n_file)->required();
    nerve->add_option("--truncation", n_trunc);
    nerve->callback([&] { cmd_nerve(ctx, n_file, n_trunc); });

    // fill-horn ------------------------------------------------------------
    std::string fh_file;
    int fh_n = 2, fh_k = 1;
    std::vector<std::string> fh_faces;
    bool fh_expect = false;
    auto* fill = app.add_subcommand("fill-horn", "enumerate horn fillers");
    fill->add_option("file", fh_file)->required();
    fill->add_option("--n", fh_n)->required();
    fill->add_option("--k", fh_k)->required();
    fill->add_option("--face", fh_faces, "i=simplex assignments");
    fill->add_flag("--expect-solution", fh_expect);
    fill->callback([&] { cmd_fill_horn(ctx, fh_file, fh_n, fh_k, fh_faces, fh_expect); });

    // kan-check ------------------------------------------------------------
    std::string kc_file;
    int kc_dim = 2;
    bool kc_inner = false;
    auto* kan = app.add_subcommand("kan-check", "horn filling survey");
    kan->add_option("file", kc_file)->required();
    kan->add_option("--dim", kc_dim);
    kan->add_flag("--inner", kc_inner);
    kan->add_option("--budget", budget);
    kan->callback([&] { cmd_kan_check(ctx, kc_file, kc_dim, kc_inner, budget); });

    // lift -------------------------------------------------------------
    std::string l_f, l_p, l_top, l_bottom;
    bool l_expect = false;
    auto* lift = app.add_subcommand("lift", "solve a lifting square in finite sets");
    lift->add_option("--f", l_f)->required();
    lift->add_option("--p", l_p)->required();
    lift->add_option("--top", l_top)->required();
    lift->add_option("--bottom", l_bottom)->required();
    lift->add_flag("--expect-solution", l_expect);
    lift->add_option("--budget", budget);
    lift->callback([&] { cmd_lift(ctx, l_f, l_p, l_top, l_bottom, l_expect, budget); });

    // query --------------------------------------------------------------
    std::string q_schema, q_instance, q_q, q_r, q_window, q_nu, q_mu;
    bool q_injective = false, q_dedupe = false;
    auto* query = app.add_subcommand("query", "query an instance through a lifting problem");
    query->add_option("--schema", q_schema)->required();
    query->add_option("--instance", q_instance)->required();
    query->add_option("--Q", q_q)->required();
    query->add_option("--R", q_r)->required();
    query->add_option("--window", q_window)->required();
    query->add_option("--nu", q_nu)->required();
    query->add_option("--mu", q_mu);
    query->add_flag("--injective-bindings", q_injective);
    query->add_flag("--dedupe-symmetric", q_dedupe);
    query->add_option("--budget", budget);
    query->callback([&] {
        cmd_query(ctx, q_schema, q_instance, q_q, q_r, q_window, q_nu, q_mu, q_injective,
                  q_dedupe, budget);
    });

    // migrate -------------------------------------------------------------
    std::string m_mode, m_functor, m_source, m_target, m_instance;
    auto* migrate = app.add_subcommand("migrate", "data migration along a functor");
    migrate->add_option("--mode", m_mode, "delta|sigma|pi")->required();
    migrate->add_option("--functor", m_functor)->required();
    migrate->add_option("--source-cat", m_source)->required();
    migrate->add_option("--target-cat", m_target)->required();
    migrate->add_option("--instance", m_instance)->required();
    migrate->callback([&] { cmd_migrate(ctx, m_mode, m_functor, m_source, m_target, m_instance); });

    // train ----------------------------------------------------------------
    std::string t_pipeline, t_data, t_mode = "backprop";
    int t_epochs = 100;
    double t_delta = 1e-3;
    std::uint64_t t_seed = 0;
    bool t_seed_set = false;
    auto* train = app.add_subcommand("train", "train a learner pipeline");
    train->add_option("--pipeline", t_pipeline)->required();
    train->add_option("--data", t_data)->required();
    train->add_option("--epochs", t_epochs);
    train->add_option("--mode", t_mode, "backprop|zeroth|zeroth-literal");
    train->add_option("--delta", t_delta);
    double t_epsilon = 0.0;
    auto* eps_opt = train->add_option("--epsilon", t_epsilon, "override pipeline learning rate");
    auto* seed_opt = train->add_option("--seed", t_seed);
    train->callback([&] {
        t_seed_set = seed_opt->count() > 0;
        cmd_train(ctx, t_pipeline, t_data, t_epochs, t_mode,
                  t_seed_set ? std::optional<std::uint64_t>(t_seed) : std::nullopt, t_delta,
                  eps_opt->count() > 0 ? std::optional<double>(t_epsilon) : std::nullopt);
    });

    // check-functoriality ----------------------------------------------------
    std::string cf_pipeline;
    int cf_samples = 100;
    std::uint64_t cf_seed = 0;
    double cf_tol = 1e-9;
    auto* cf = app.add_subcommand("check-functoriality",
                                  "compare L(g∘f) against L(g)∘L(f) on samples");
    cf->add_option("--pipeline", cf_pipeline)->required();
    cf->add_option("--samples", cf_samples);
    cf->add_option("--seed", cf_seed)->required();
    cf->add_option("--tolerance", cf_tol);
    double cf_epsilon = 0.0;
    auto* cf_eps_opt = cf->add_option("--epsilon", cf_epsilon);
    cf->callback([&] {
        cmd_check_functoriality(ctx, cf_pipeline, cf_samples, cf_seed, cf_tol,
                                cf_eps_opt->count() > 0 ? std::optional<double>(cf_epsilon)
                                                        : std::nullopt);
    });

    // equivariance -----------------------------------------------------------
    int e_d = 2, e_n = 4, e_heads = 1, e_head_dim = 2, e_hidden = 4, e_perms = 50;
    std::uint64_t e_seed = 0;
    bool e_exhaustive = false;
    double e_tol = 1e-6;
    auto* eq = app.add_subcommand("equivariance", "transformer permutation equivariance check");
    eq->add_option("--d", e_d);
    eq->add_option("--n", e_n);
    eq->add_option("--heads", e_heads);
    eq->add_option("--head-dim", e_head_dim);
    eq->add_option("--hidden", e_hidden);
    eq->add_option("--permutations", e_perms);
    eq->add_option("--seed", e_seed)->required();
    eq->add_flag("--exhaustive", e_exhaustive);
    eq->add_option("--tolerance", e_tol);
    eq->callback([&] {
        cmd_equivariance(ctx, e_d, e_n, e_heads, e_head_dim, e_hidden, e_seed, e_perms,
                         e_exhaustive, e_tol);
    });

    // bisim -------------------------------------------------------------------
    std::string b_lhs, b_rhs;
    auto* bisim = app.add_subcommand("bisim", "greatest bisimulation of two LTS files");
    bisim->add_option("--lhs", b_lhs)->required();
    bisim->add_option("--rhs", b_rhs)->required();
    bisim->callback([&] { cmd_bisim(ctx, b_lhs, b_rhs); });

    // coinductive-solve ---------------------------------------------------------
    std::string cs_file;
    double cs_tol = 1e-9;
    double cs_modulus = -1;
    auto* cs = app.add_subcommand("coinductive-solve", "iterate a contraction to its fixed point");
    cs->add_option("file", cs_file)->required();
    cs->add_option("--tolerance", cs_tol);
    auto* cs_mod_opt = cs->add_option("--modulus", cs_modulus);
    cs->callback([&] {
        cmd_coinductive_solve(ctx, cs_file, cs_tol,
                              cs_mod_opt->count() > 0 ? std::optional<double>(cs_modulus)
                                                      : std::nullopt);
    });

    // yoneda-check ---------------------------------------------------------------
    std::string y_file;
    auto* yoneda = app.add_subcommand("yoneda-check", "metric Yoneda isometry check");
    yoneda->add_option("file", y_file)->required();
    yoneda->callback([&] { cmd_yoneda_check(ctx, y_file); });

    // homology ---------------------------------------------------------------------
    std::string h_file, h_kind = "simplicial", h_schema, h_export;
    int h_trunc = 3;
    auto* hom = app.add_subcommand("homology", "integer homology of a realization");
    hom->add_option("--input", h_file)->required();
    hom->add_option("--kind", h_kind, "simplicial|category|instance");
    hom->add_option("--schema", h_schema);
    hom->add_option("--truncation", h_trunc);
    hom->add_option("--export-boundaries", h_export);
    hom->callback([&] { cmd_homology(ctx, h_file, h_kind, h_schema, h_trunc, h_export); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return ctx.exit_code;
}

} // namespace gaiakit::cli
