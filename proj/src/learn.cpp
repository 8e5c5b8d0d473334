#include "gaiakit/learn.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "gaiakit/fincat.hpp"

namespace gaiakit::learn {

// ---------------------------------------------------------------------------
// Expression trees
// ---------------------------------------------------------------------------

namespace {
ExprPtr node(Expr e) { return std::make_shared<Expr>(std::move(e)); }
}

ExprPtr cst(double v) { return node({Expr::Op::Const, v, 0, nullptr, nullptr}); }
ExprPtr input(int i) { return node({Expr::Op::Input, 0, i, nullptr, nullptr}); }
ExprPtr param(int i) { return node({Expr::Op::Param, 0, i, nullptr, nullptr}); }
ExprPtr add(ExprPtr a, ExprPtr b) { return node({Expr::Op::Add, 0, 0, a, b}); }
ExprPtr sub(ExprPtr a, ExprPtr b) { return node({Expr::Op::Sub, 0, 0, a, b}); }
ExprPtr mul(ExprPtr a, ExprPtr b) { return node({Expr::Op::Mul, 0, 0, a, b}); }
ExprPtr tanh_(ExprPtr a) { return node({Expr::Op::Tanh, 0, 0, a, nullptr}); }
ExprPtr sigmoid_(ExprPtr a) { return node({Expr::Op::Sigmoid, 0, 0, a, nullptr}); }

namespace {

void topo(const ExprPtr& e, std::vector<const Expr*>& order,
          std::unordered_map<const Expr*, bool>& seen) {
    if (!e || seen.count(e.get())) return;
    seen[e.get()] = true;
    topo(e->lhs, order, seen);
    topo(e->rhs, order, seen);
    order.push_back(e.get());
}

double forward_one(const Expr* n, const std::unordered_map<const Expr*, double>& val,
                   const Vec& p, const Vec& a) {
    switch (n->op) {
        case Expr::Op::Const: return n->value;
        case Expr::Op::Input:
            if (n->index < 0 || n->index >= static_cast<int>(a.size()))
                throw InputError("expression input index out of range");
            return a[n->index];
        case Expr::Op::Param:
            if (n->index < 0 || n->index >= static_cast<int>(p.size()))
                throw InputError("expression parameter index out of range");
            return p[n->index];
        case Expr::Op::Add: return val.at(n->lhs.get()) + val.at(n->rhs.get());
        case Expr::Op::Sub: return val.at(n->lhs.get()) - val.at(n->rhs.get());
        case Expr::Op::Mul: return val.at(n->lhs.get()) * val.at(n->rhs.get());
        case Expr::Op::Tanh: return std::tanh(val.at(n->lhs.get()));
        case Expr::Op::Sigmoid: return 1.0 / (1.0 + std::exp(-val.at(n->lhs.get())));
    }
    throw DomainError("unreachable expression op");
}

} // namespace

Vec ParamFn::eval(const Vec& p, const Vec& a) const {
    if (static_cast<int>(p.size()) != param_arity || static_cast<int>(a.size()) != in_arity)
        throw InputError("ParamFn::eval arity mismatch");
    std::vector<const Expr*> order;
    std::unordered_map<const Expr*, bool> seen;
    for (const auto& o : outputs) topo(o, order, seen);
    std::unordered_map<const Expr*, double> val;
    for (const Expr* n : order) val[n] = forward_one(n, val, p, a);
    Vec out;
    for (const auto& o : outputs) out.push_back(val.at(o.get()));
    return out;
}

std::pair<Vec, Vec> ParamFn::vjp(const Vec& p, const Vec& a, const Vec& w) const {
    if (static_cast<int>(w.size()) != out_arity()) throw InputError("vjp weight arity mismatch");
    std::vector<const Expr*> order;
    std::unordered_map<const Expr*, bool> seen;
    for (const auto& o : outputs) topo(o, order, seen);
    std::unordered_map<const Expr*, double> val;
    for (const Expr* n : order) val[n] = forward_one(n, val, p, a);

    std::unordered_map<const Expr*, double> adj;
    for (size_t j = 0; j < outputs.size(); ++j) adj[outputs[j].get()] += w[j];

    Vec gp(param_arity, 0.0), ga(in_arity, 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Expr* n = *it;
        auto found = adj.find(n);
        if (found == adj.end()) continue;
        double g = found->second;
        switch (n->op) {
            case Expr::Op::Const: break;
            case Expr::Op::Input: ga[n->index] += g; break;
            case Expr::Op::Param: gp[n->index] += g; break;
            case Expr::Op::Add:
                adj[n->lhs.get()] += g;
                adj[n->rhs.get()] += g;
                break;
            case Expr::Op::Sub:
                adj[n->lhs.get()] += g;
                adj[n->rhs.get()] -= g;
                break;
            case Expr::Op::Mul:
                adj[n->lhs.get()] += g * val.at(n->rhs.get());
                adj[n->rhs.get()] += g * val.at(n->lhs.get());
                break;
            case Expr::Op::Tanh: {
                double t = std::tanh(val.at(n->lhs.get()));
                adj[n->lhs.get()] += g * (1.0 - t * t);
                break;
            }
            case Expr::Op::Sigmoid: {
                double s = 1.0 / (1.0 + std::exp(-val.at(n->lhs.get())));
                adj[n->lhs.get()] += g * s * (1.0 - s);
                break;
            }
        }
    }
    return {gp, ga};
}

namespace {

// Rewrite with input substitution; params assumed already shifted.
ExprPtr substitute_inputs(const ExprPtr& e, const std::vector<ExprPtr>& input_subst,
                          std::unordered_map<const Expr*, ExprPtr>& memo) {
    auto it = memo.find(e.get());
    if (it != memo.end()) return it->second;
    ExprPtr out;
    switch (e->op) {
        case Expr::Op::Const:
        case Expr::Op::Param: out = e; break;
        case Expr::Op::Input:
            if (e->index >= static_cast<int>(input_subst.size()))
                throw InputError("compose: input index out of range");
            out = input_subst[e->index];
            break;
        default: {
            ExprPtr l = e->lhs ? substitute_inputs(e->lhs, input_subst, memo) : nullptr;
            ExprPtr r = e->rhs ? substitute_inputs(e->rhs, input_subst, memo) : nullptr;
            out = node({e->op, e->value, e->index, l, r});
        }
    }
    memo[e.get()] = out;
    return out;
}

ExprPtr shift_indices(const ExprPtr& e, int input_shift, int param_shift,
                      std::unordered_map<const Expr*, ExprPtr>& memo) {
    auto it = memo.find(e.get());
    if (it != memo.end()) return it->second;
    ExprPtr out;
    switch (e->op) {
        case Expr::Op::Const: out = e; break;
        case Expr::Op::Input: out = input(e->index + input_shift); break;
        case Expr::Op::Param: out = param(e->index + param_shift); break;
        default: {
            ExprPtr l = e->lhs ? shift_indices(e->lhs, input_shift, param_shift, memo) : nullptr;
            ExprPtr r = e->rhs ? shift_indices(e->rhs, input_shift, param_shift, memo) : nullptr;
            out = node({e->op, e->value, e->index, l, r});
        }
    }
    memo[e.get()] = out;
    return out;
}

} // namespace

ParamFn compose_paramfn(const ParamFn& g, const ParamFn& f) {
    if (g.in_arity != f.out_arity()) throw InputError("compose_paramfn arity mismatch");
    ParamFn out;
    out.in_arity = f.in_arity;
    out.param_arity = f.param_arity + g.param_arity;
    std::unordered_map<const Expr*, ExprPtr> shift_memo, subst_memo;
    for (const auto& o : g.outputs) {
        ExprPtr shifted = shift_indices(o, 0, f.param_arity, shift_memo);
        out.outputs.push_back(substitute_inputs(shifted, f.outputs, subst_memo));
    }
    return out;
}

ParamFn parallel_paramfn(const ParamFn& f, const ParamFn& g) {
    ParamFn out;
    out.in_arity = f.in_arity + g.in_arity;
    out.param_arity = f.param_arity + g.param_arity;
    out.outputs = f.outputs;
    std::unordered_map<const Expr*, ExprPtr> memo;
    for (const auto& o : g.outputs)
        out.outputs.push_back(shift_indices(o, f.in_arity, f.param_arity, memo));
    return out;
}

ParamFn identity_fn(int n) {
    ParamFn f;
    f.in_arity = n;
    for (int i = 0; i < n; ++i) f.outputs.push_back(input(i));
    return f;
}

ParamFn scalar_mul_fn() {
    ParamFn f;
    f.in_arity = 1;
    f.param_arity = 1;
    f.outputs = {mul(param(0), input(0))};
    return f;
}

ParamFn add_param_fn() {
    ParamFn f;
    f.in_arity = 1;
    f.param_arity = 1;
    f.outputs = {add(param(0), input(0))};
    return f;
}

ParamFn affine_fn(int in, int out) {
    ParamFn f;
    f.in_arity = in;
    f.param_arity = out * in + out;
    for (int r = 0; r < out; ++r) {
        ExprPtr acc = param(out * in + r); // bias
        for (int c = 0; c < in; ++c) acc = add(acc, mul(param(r * in + c), input(c)));
        f.outputs.push_back(acc);
    }
    return f;
}

ParamFn linear_fn(int in, int out) {
    ParamFn f;
    f.in_arity = in;
    f.param_arity = out * in;
    for (int r = 0; r < out; ++r) {
        ExprPtr acc = cst(0.0);
        for (int c = 0; c < in; ++c) acc = add(acc, mul(param(r * in + c), input(c)));
        f.outputs.push_back(acc);
    }
    return f;
}

ParamFn pointwise_tanh_fn(int n) {
    ParamFn f;
    f.in_arity = n;
    for (int i = 0; i < n; ++i) f.outputs.push_back(tanh_(input(i)));
    return f;
}

ParamFn product_pair_fn() {
    ParamFn f;
    f.in_arity = 2;
    f.outputs = {mul(input(0), input(1))};
    return f;
}

ParamFn param_value_fn() {
    ParamFn f;
    f.in_arity = 0;
    f.param_arity = 1;
    f.outputs = {param(0)};
    return f;
}

double gradient_check(const ParamFn& f, std::uint64_t seed, int samples, double step) {
    std::mt19937_64 rng(seed);
    auto u01 = [&]() { return (rng() >> 11) * 0x1.0p-53; };
    auto rand_vec = [&](int n) {
        Vec v(n);
        for (auto& x : v) x = 2.0 * u01() - 1.0;
        return v;
    };

    double max_rel = 0.0;
    for (int s = 0; s < samples; ++s) {
        Vec p = rand_vec(f.param_arity);
        Vec a = rand_vec(f.in_arity);
        Vec w = rand_vec(f.out_arity());
        auto [gp, ga] = f.vjp(p, a, w);

        auto weighted = [&](const Vec& pp, const Vec& aa) {
            Vec out = f.eval(pp, aa);
            double sum = 0;
            for (size_t j = 0; j < out.size(); ++j) sum += w[j] * out[j];
            return sum;
        };
        for (int i = 0; i < f.param_arity; ++i) {
            Vec hi = p, lo = p;
            hi[i] += step;
            lo[i] -= step;
            double fd = (weighted(hi, a) - weighted(lo, a)) / (2 * step);
            double denom = std::max({std::abs(fd), std::abs(gp[i]), 1e-8});
            max_rel = std::max(max_rel, std::abs(fd - gp[i]) / denom);
        }
        for (int i = 0; i < f.in_arity; ++i) {
            Vec hi = a, lo = a;
            hi[i] += step;
            lo[i] -= step;
            double fd = (weighted(p, hi) - weighted(p, lo)) / (2 * step);
            double denom = std::max({std::abs(fd), std::abs(ga[i]), 1e-8});
            max_rel = std::max(max_rel, std::abs(fd - ga[i]) / denom);
        }
    }
    return max_rel;
}

// ---------------------------------------------------------------------------
// Error functions
// ---------------------------------------------------------------------------

ErrorFn quadratic_error() {
    ErrorFn e;
    e.name = "quadratic";
    e.e = [](double x, double y) { return 0.5 * (x - y) * (x - y); };
    e.de_dx = [](double x, double y) { return x - y; };
    e.invert = [](double x0, double w) { return x0 - w; };
    return e;
}

ErrorFn scaled_quadratic_error(double alpha) {
    if (alpha == 0.0) throw InputError("scaled_quadratic_error: alpha must be nonzero");
    ErrorFn e;
    e.name = "scaled-quadratic";
    e.e = [alpha](double x, double y) { return 0.5 * alpha * (x - y) * (x - y); };
    e.de_dx = [alpha](double x, double y) { return alpha * (x - y); };
    e.invert = [alpha](double x0, double w) { return x0 - w / alpha; };
    return e;
}

void validate_error_fn(const ErrorFn& e, std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed);
    auto u01 = [&]() { return (rng() >> 11) * 0x1.0p-53; };
    for (int s = 0; s < samples; ++s) {
        double x0 = 4.0 * u01() - 2.0;
        double y = 4.0 * u01() - 2.0;
        double w = e.de_dx(x0, y);
        if (std::abs(e.invert(x0, w) - y) > 1e-9)
            throw InputError("error function: invert does not invert de_dx");
    }
}

// ---------------------------------------------------------------------------
// Learners
// ---------------------------------------------------------------------------

namespace {

Vec concat(const Vec& a, const Vec& b) {
    Vec out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Vec slice(const Vec& v, int from, int len) {
    if (from + len > static_cast<int>(v.size())) throw InputError("vector slice out of range");
    return Vec(v.begin() + from, v.begin() + from + len);
}

} // namespace

Learner compose_seq(const Learner& first, const Learner& second) {
    if (first.out_arity != second.in_arity) throw InputError("compose_seq arity mismatch");
    Learner out;
    out.name = first.name + ";" + second.name;
    out.in_arity = first.in_arity;
    out.out_arity = second.out_arity;
    out.param_arity = first.param_arity + second.param_arity;
    out.params = concat(first.params, second.params);

    const Learner L1 = first, L2 = second;
    const int p1 = first.param_arity;
    const int p2 = second.param_arity;

    out.implement = [L1, L2, p1, p2](const Vec& pq, const Vec& a) {
        return L2.implement(slice(pq, p1, p2), L1.implement(slice(pq, 0, p1), a));
    };
    out.update = [L1, L2, p1, p2](const Vec& pq, const Vec& a, const Vec& c) {
        Vec p = slice(pq, 0, p1), q = slice(pq, p1, p2);
        Vec b = L1.implement(p, a);
        Vec s = L2.request(q, b, c);
        return concat(L1.update(p, a, s), L2.update(q, b, c));
    };
    out.request = [L1, L2, p1, p2](const Vec& pq, const Vec& a, const Vec& c) {
        Vec p = slice(pq, 0, p1), q = slice(pq, p1, p2);
        Vec b = L1.implement(p, a);
        Vec s = L2.request(q, b, c);
        return L1.request(p, a, s);
    };
    return out;
}

Learner compose_par(const Learner& left, const Learner& right) {
    Learner out;
    out.name = left.name + "||" + right.name;
    out.in_arity = left.in_arity + right.in_arity;
    out.out_arity = left.out_arity + right.out_arity;
    out.param_arity = left.param_arity + right.param_arity;
    out.params = concat(left.params, right.params);

    const Learner L = left, R = right;
    const int pl = left.param_arity, al = left.in_arity, bl = left.out_arity;
    const int pr = right.param_arity, ar = right.in_arity, br = right.out_arity;

    out.implement = [L, R, pl, al, pr, ar](const Vec& pq, const Vec& ac) {
        Vec lv = L.implement(slice(pq, 0, pl), slice(ac, 0, al));
        Vec rv = R.implement(slice(pq, pl, pr), slice(ac, al, ar));
        return concat(lv, rv);
    };
    out.update = [L, R, pl, al, bl, pr, ar, br](const Vec& pq, const Vec& ac, const Vec& bd) {
        Vec lu = L.update(slice(pq, 0, pl), slice(ac, 0, al), slice(bd, 0, bl));
        Vec ru = R.update(slice(pq, pl, pr), slice(ac, al, ar), slice(bd, bl, br));
        return concat(lu, ru);
    };
    out.request = [L, R, pl, al, bl, pr, ar, br](const Vec& pq, const Vec& ac, const Vec& bd) {
        Vec lr = L.request(slice(pq, 0, pl), slice(ac, 0, al), slice(bd, 0, bl));
        Vec rr = R.request(slice(pq, pl, pr), slice(ac, al, ar), slice(bd, bl, br));
        return concat(lr, rr);
    };
    return out;
}

Learner identity_learner(int arity) {
    Learner out;
    out.name = "id";
    out.in_arity = arity;
    out.out_arity = arity;
    out.param_arity = 0;
    out.implement = [](const Vec&, const Vec& a) { return a; };
    out.update = [](const Vec&, const Vec&, const Vec&) { return Vec{}; };
    out.request = [](const Vec&, const Vec&, const Vec& b) { return b; };
    return out;
}

Learner braiding_learner(int left_arity, int right_arity) {
    Learner out;
    out.name = "braid";
    out.in_arity = left_arity + right_arity;
    out.out_arity = left_arity + right_arity;
    out.param_arity = 0;
    const int al = left_arity, ar = right_arity;
    out.implement = [al, ar](const Vec&, const Vec& ab) {
        return concat(slice(ab, al, ar), slice(ab, 0, al));
    };
    out.update = [](const Vec&, const Vec&, const Vec&) { return Vec{}; };
    out.request = [al, ar](const Vec&, const Vec&, const Vec& ba) {
        // desired output (b', a') corresponds to input (a', b')
        return concat(slice(ba, ar, al), slice(ba, 0, ar));
    };
    return out;
}

Learner backprop_functor(const ParamFn& f, double epsilon, const ErrorFn& e) {
    if (epsilon <= 0) throw InputError("backprop_functor: epsilon must be positive");
    validate_error_fn(e);

    Learner out;
    out.name = "backprop";
    out.in_arity = f.in_arity;
    out.out_arity = f.out_arity();
    out.param_arity = f.param_arity;
    out.params.assign(f.param_arity, 0.0);

    const ParamFn fn = f;
    const ErrorFn err = e;
    auto gradients = [fn, err](const Vec& p, const Vec& a, const Vec& b) {
        Vec value = fn.eval(p, a);
        Vec w(value.size());
        for (size_t j = 0; j < value.size(); ++j) w[j] = err.de_dx(value[j], b[j]);
        return fn.vjp(p, a, w); // (∇_p E, ∇_a E)
    };

    out.implement = [fn](const Vec& p, const Vec& a) { return fn.eval(p, a); };
    out.update = [gradients, epsilon](const Vec& p, const Vec& a, const Vec& b) {
        auto [gp, ga] = gradients(p, a, b);
        (void)ga;
        Vec next = p;
        for (size_t i = 0; i < next.size(); ++i) next[i] -= epsilon * gp[i];
        return next;
    };
    out.request = [gradients, err](const Vec& p, const Vec& a, const Vec& b) {
        auto [gp, ga] = gradients(p, a, b);
        (void)gp;
        Vec req(a.size());
        for (size_t i = 0; i < a.size(); ++i) req[i] = err.invert(a[i], ga[i]);
        return req;
    };
    return out;
}

FunctorialityReport functoriality_check(const ParamFn& f, const ParamFn& g, double epsilon,
                                        const ErrorFn& e, int samples, std::uint64_t seed,
                                        double tolerance) {
    ParamFn composite = compose_paramfn(g, f);
    Learner whole = backprop_functor(composite, epsilon, e);
    Learner split = compose_seq(backprop_functor(f, epsilon, e),
                                backprop_functor(g, epsilon, e));

    std::mt19937_64 rng(seed);
    auto u01 = [&]() { return (rng() >> 11) * 0x1.0p-53; };
    auto rand_vec = [&](int n) {
        Vec v(n);
        for (auto& x : v) x = 2.0 * u01() - 1.0;
        return v;
    };

    FunctorialityReport rep;
    auto compare = [&](const Vec& x, const Vec& y, const char* part) {
        for (size_t i = 0; i < x.size(); ++i) {
            double dev = std::abs(x[i] - y[i]);
            if (dev > rep.max_deviation) {
                rep.max_deviation = dev;
                rep.worst_part = part;
            }
        }
    };

    for (int s = 0; s < samples; ++s) {
        Vec pq = rand_vec(composite.param_arity);
        Vec a = rand_vec(composite.in_arity);
        Vec c = rand_vec(composite.out_arity());
        compare(whole.implement(pq, a), split.implement(pq, a), "implement");
        compare(whole.update(pq, a, c), split.update(pq, a, c), "update");
        compare(whole.request(pq, a, c), split.request(pq, a, c), "request");
    }
    rep.pass = rep.max_deviation <= tolerance;
    return rep;
}

Vec two_point_gradient_estimate(const std::function<double(const Vec&)>& E, const Vec& p,
                                double delta, std::mt19937_64& rng) {
    // Uniform direction via Box-Muller on raw 53-bit uniforms; avoids
    // implementation-defined std distributions so seeds reproduce everywhere.
    auto u01 = [&]() { return ((rng() >> 11) + 0.5) * 0x1.0p-53; };
    Vec u(p.size());
    double norm2 = 0;
    for (auto& x : u) {
        double r = std::sqrt(-2.0 * std::log(u01()));
        x = r * std::cos(2.0 * 3.14159265358979323846 * u01());
        norm2 += x * x;
    }
    double norm = std::sqrt(norm2);
    if (norm == 0) norm = 1;
    for (auto& x : u) x /= norm;

    Vec hi = p, lo = p;
    for (size_t i = 0; i < p.size(); ++i) {
        hi[i] += delta * u[i];
        lo[i] -= delta * u[i];
    }
    double scale = (E(hi) - E(lo)) / (2 * delta);
    Vec g(p.size());
    for (size_t i = 0; i < p.size(); ++i) g[i] = scale * u[i];
    return g;
}

Learner zeroth_order_functor(const ParamFn& f, const ErrorFn& e, const ZeroOrderConfig& cfg) {
    if (cfg.delta <= 0) throw InputError("zeroth_order_functor: delta must be positive");
    if (cfg.step_scale <= 0) throw InputError("zeroth_order_functor: step scale must be positive");
    if (cfg.literal_value_update && f.out_arity() != f.param_arity)
        throw InputError("literal value update needs out_arity == param_arity");

    struct State {
        std::mt19937_64 rng;
        long long t = 0;
    };
    auto state = std::make_shared<State>();
    state->rng.seed(cfg.seed);

    Learner out;
    out.name = cfg.literal_value_update ? "zeroth-order-literal" : "zeroth-order";
    out.in_arity = f.in_arity;
    out.out_arity = f.out_arity();
    out.param_arity = f.param_arity;
    out.params.assign(f.param_arity, 0.0);

    const ParamFn fn = f;
    const ErrorFn err = e;
    auto loss = [fn, err](const Vec& p, const Vec& a, const Vec& b) {
        Vec v = fn.eval(p, a);
        double sum = 0;
        for (size_t j = 0; j < v.size(); ++j) sum += err.e(v[j], b[j]);
        return sum;
    };

    out.implement = [fn](const Vec& p, const Vec& a) { return fn.eval(p, a); };
    out.update = [fn, loss, state, cfg](const Vec& p, const Vec& a, const Vec& b) {
        state->t += 1;
        double eps_t = cfg.step_scale / static_cast<double>(state->t);
        Vec next = p;
        if (cfg.literal_value_update) {
            Vec v = fn.eval(p, a);
            for (size_t i = 0; i < next.size(); ++i) next[i] -= eps_t * v[i];
            return next;
        }
        auto E = [&](const Vec& pp) { return loss(pp, a, b); };
        Vec g = two_point_gradient_estimate(E, p, cfg.delta, state->rng);
        for (size_t i = 0; i < next.size(); ++i) next[i] -= eps_t * g[i];
        return next;
    };
    out.request = [loss, err, state, cfg](const Vec& p, const Vec& a, const Vec& b) {
        auto E = [&](const Vec& aa) { return loss(p, aa, b); };
        Vec g = two_point_gradient_estimate(E, a, cfg.delta, state->rng);
        Vec req(a.size());
        for (size_t i = 0; i < a.size(); ++i) req[i] = err.invert(a[i], g[i]);
        return req;
    };
    return out;
}

TrainResult train(const Learner& learner, const std::vector<std::pair<Vec, Vec>>& dataset,
                  int epochs, const ErrorFn& e) {
    if (dataset.empty()) throw InputError("train: empty dataset");
    for (const auto& [a, b] : dataset)
        if (static_cast<int>(a.size()) != learner.in_arity ||
            static_cast<int>(b.size()) != learner.out_arity)
            throw InputError("train: dataset arity mismatch");

    TrainResult res;
    Vec p = learner.params;
    for (int ep = 0; ep < epochs; ++ep) {
        double total = 0;
        for (const auto& [a, b] : dataset) {
            Vec v = learner.implement(p, a);
            for (size_t j = 0; j < v.size(); ++j) total += e.e(v[j], b[j]);
            p = learner.update(p, a, b);
        }
        res.epoch_loss.push_back(total / static_cast<double>(dataset.size()));
        res.param_trajectory.push_back(p);
    }
    res.final_params = p;
    return res;
}

// ---------------------------------------------------------------------------
// Learner nerve
// ---------------------------------------------------------------------------

LearnerNerve learner_nerve(const std::vector<Learner>& pipeline) {
    if (pipeline.empty()) throw InputError("learner_nerve: empty pipeline");
    for (size_t i = 0; i + 1 < pipeline.size(); ++i)
        if (pipeline[i].out_arity != pipeline[i + 1].in_arity)
            throw InputError("learner_nerve: pipeline arities are not composable");

    int k = static_cast<int>(pipeline.size());
    auto chain = fincat::poset_category(k);

    LearnerNerve out;
    out.nerve = simplicial::nerve(chain, 3);

    // arrow i<=j carries the composite of stages i+1..j (identity when i=j)
    for (int i = 0; i <= k; ++i)
        for (int j = i; j <= k; ++j) {
            std::string id = std::to_string(i) + "<=" + std::to_string(j);
            if (i == j) {
                int arity = (i == 0) ? pipeline.front().in_arity : pipeline[i - 1].out_arity;
                out.arrows.emplace(id, identity_learner(arity));
                continue;
            }
            Learner acc = pipeline[i];
            for (int t = i + 1; t < j; ++t) acc = compose_seq(acc, pipeline[t]);
            out.arrows.emplace(id, std::move(acc));
        }
    return out;
}

} // namespace gaiakit::learn
