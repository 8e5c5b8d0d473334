#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "gaiakit/common.hpp"
#include "gaiakit/simplicial.hpp"

namespace gaiakit::learn {

using Vec = std::vector<double>;

// ---------------------------------------------------------------------------
// Differentiable parameterized functions as expression trees
// ---------------------------------------------------------------------------

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Op { Const, Input, Param, Add, Sub, Mul, Tanh, Sigmoid };
    Op op;
    double value = 0.0; // Const
    int index = 0;      // Input / Param
    ExprPtr lhs, rhs;
};

ExprPtr cst(double v);
ExprPtr input(int i);
ExprPtr param(int i);
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr sub(ExprPtr a, ExprPtr b);
ExprPtr mul(ExprPtr a, ExprPtr b);
ExprPtr tanh_(ExprPtr a);
ExprPtr sigmoid_(ExprPtr a);

// A differentiable map I: P x A -> B with exact gradients by reverse-mode
// traversal of the shared expression graph.
struct ParamFn {
    int in_arity = 0;
    int param_arity = 0;
    std::vector<ExprPtr> outputs;

    int out_arity() const { return static_cast<int>(outputs.size()); }

    Vec eval(const Vec& p, const Vec& a) const;

    // Reverse pass: gradients of sum_j w_j * I_j with respect to params and
    // inputs.
    std::pair<Vec, Vec> vjp(const Vec& p, const Vec& a, const Vec& w) const;
};

// g ∘ f: feeds f's outputs into g's inputs; parameter vector is [p_f, q_g].
ParamFn compose_paramfn(const ParamFn& g, const ParamFn& f);

// f ∥ g on concatenated inputs and parameters.
ParamFn parallel_paramfn(const ParamFn& f, const ParamFn& g);

// Library primitives.
ParamFn identity_fn(int n);
ParamFn scalar_mul_fn();                  // I(p, a) = p * a
ParamFn add_param_fn();                   // I(q, b) = q + b
ParamFn affine_fn(int in, int out);       // W a + b, params row-major then bias
ParamFn linear_fn(int in, int out);       // W a
ParamFn pointwise_tanh_fn(int n);
ParamFn product_pair_fn();                // I(∅, (x, y)) = x y
ParamFn param_value_fn();                 // I(p) = p, no inputs

// Central finite-difference check of both gradients; returns max relative
// error over `samples` random points.
double gradient_check(const ParamFn& f, std::uint64_t seed, int samples = 20,
                      double step = 1e-5);

// ---------------------------------------------------------------------------
// Error functions
// ---------------------------------------------------------------------------

// e(x, y) with invertible ∂e/∂x(x0, -): inverting the displayed derivative is
// what the request map needs.
struct ErrorFn {
    std::string name;
    std::function<double(double, double)> e;
    std::function<double(double, double)> de_dx;  // ∂e/∂x at (x, y)
    std::function<double(double, double)> invert; // invert(x0, w): y with de_dx(x0,y)=w
};

ErrorFn quadratic_error();                 // e = (x-y)^2 / 2
ErrorFn scaled_quadratic_error(double alpha);

// Spot-check invert against de_dx on random points; throws InputError when
// the pair is inconsistent beyond 1e-9.
void validate_error_fn(const ErrorFn& e, std::uint64_t seed = 1, int samples = 50);

// ---------------------------------------------------------------------------
// Learners
// ---------------------------------------------------------------------------

// The (P, I, U, r) 4-tuple. Functions are total on the declared arities.
struct Learner {
    std::string name;
    int in_arity = 0;
    int out_arity = 0;
    int param_arity = 0;
    Vec params;

    std::function<Vec(const Vec&, const Vec&)> implement;          // I(p, a)
    std::function<Vec(const Vec&, const Vec&, const Vec&)> update; // U(p, a, b)
    std::function<Vec(const Vec&, const Vec&, const Vec&)> request; // r(p, a, b)
};

// Sequential composite: implementation J(q, I(p,a)), update and request
// evaluate the downstream request first.
Learner compose_seq(const Learner& first, const Learner& second);

// Monoidal product on concatenated domains.
Learner compose_par(const Learner& left, const Learner& right);

Learner identity_learner(int arity);

// The parameter-free swap (a, b) -> (b, a).
Learner braiding_learner(int left_arity, int right_arity);

// Gradient-descent learner of a parameterized function: update and request
// follow U = p - ε ∇_p E and r = f_a(∇_a E) with E = Σ_j e(I_j, b_j).
Learner backprop_functor(const ParamFn& f, double epsilon, const ErrorFn& e);

struct FunctorialityReport {
    bool pass = true;
    double max_deviation = 0.0;
    std::string worst_part; // "implement" / "update" / "request"
};

// Compare L(g∘f) against L(g)∘L(f) on random samples.
FunctorialityReport functoriality_check(const ParamFn& f, const ParamFn& g, double epsilon,
                                        const ErrorFn& e, int samples, std::uint64_t seed,
                                        double tolerance = 1e-9);

// Zeroth-order stochastic learner. Default update is the two-point
// random-directions estimator
//   p <- p - ε_t ((E(p+δu) - E(p-δu)) / 2δ) u,   ε_t = step_scale / t.
// literal_value_update switches to the one-point value rule p - ε_t I(p, a),
// which requires out_arity == param_arity.
struct ZeroOrderConfig {
    double step_scale = 0.5;
    double delta = 1e-3;
    std::uint64_t seed = 0;
    bool literal_value_update = false;
};

Learner zeroth_order_functor(const ParamFn& f, const ErrorFn& e, const ZeroOrderConfig& cfg);

// Gradient estimate used by the zeroth-order learner, exposed for the
// estimator-vs-gradient diagnostics.
Vec two_point_gradient_estimate(const std::function<double(const Vec&)>& E, const Vec& p,
                                double delta, std::mt19937_64& rng);

struct TrainResult {
    Vec final_params;
    std::vector<double> epoch_loss;       // mean E per epoch
    std::vector<Vec> param_trajectory;    // params after each epoch
};

TrainResult train(const Learner& learner, const std::vector<std::pair<Vec, Vec>>& dataset,
                  int epochs, const ErrorFn& e);

// ---------------------------------------------------------------------------
// Learner pipelines as nerves
// ---------------------------------------------------------------------------

// Nerve (truncated at 3) of the chain category on a composable pipeline;
// each arrow i<=j carries the composite of learners i+1..j.
struct LearnerNerve {
    simplicial::SimplicialSet nerve;
    std::map<std::string, Learner> arrows; // morphism id -> learner
};

LearnerNerve learner_nerve(const std::vector<Learner>& pipeline);

} // namespace gaiakit::learn
