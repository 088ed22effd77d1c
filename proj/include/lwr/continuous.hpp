#pragma once

// Minimax over a box in R^n: convex scenario-cost families, envelope solvers
// (golden-section in 1-D, Kelley cutting-plane with local polish in n-D),
// greedy determining-set reduction, convex-hull scenario removal for anchored
// families, and the block-robust continuous solve.

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "lwr/core.hpp"
#include "lwr/robust.hpp"
#include "lwr/simplex.hpp"

namespace lwr {

using Vec = std::vector<double>;

// f(x) = (x - center)^T Q (x - center) + lin . x + constant, Q symmetric PSD.
struct Quadratic {
    std::vector<Vec> Q;
    Vec center;
    Vec lin;
    double constant = 0.0;
};

// f(x) = max_j (slope_j . x + offset_j)
struct PiecewiseLinear {
    struct Piece {
        Vec slope;
        double offset = 0.0;
    };
    std::vector<Piece> pieces;
};

// f(x) = sum_d scale_d * exp(-decay_d * (x_d - anchor_d)) + lin . x
struct ExpLinear {
    Vec anchor;
    Vec scale;
    Vec decay;
    Vec lin;
};

struct ScenarioFunction;

// Shared shape evaluated at x - anchor, plus a linear investment term.
struct Anchored {
    std::shared_ptr<const ScenarioFunction> shape;
    Vec anchor;
    Vec lin;
};

struct ScenarioFunction {
    std::variant<Quadratic, PiecewiseLinear, ExpLinear, Anchored> fn;
};

inline double evaluate(const ScenarioFunction& f, const Vec& x);

namespace detail {

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct EvalVisitor {
    const Vec& x;
    double operator()(const Quadratic& q) const {
        std::size_t n = x.size();
        Vec d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = x[i] - q.center[i];
        double v = q.constant + dot(q.lin, x);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v += d[i] * q.Q[i][j] * d[j];
        return v;
    }
    double operator()(const PiecewiseLinear& p) const {
        double v = -std::numeric_limits<double>::infinity();
        for (const auto& piece : p.pieces)
            v = std::max(v, dot(piece.slope, x) + piece.offset);
        return v;
    }
    double operator()(const ExpLinear& e) const {
        double v = 0.0;
        for (std::size_t d = 0; d < x.size(); ++d)
            v += e.scale[d] * std::exp(-e.decay[d] * (x[d] - e.anchor[d])) +
                 e.lin[d] * x[d];
        return v;
    }
    double operator()(const Anchored& a) const {
        Vec shifted(x.size());
        for (std::size_t d = 0; d < x.size(); ++d) shifted[d] = x[d] - a.anchor[d];
        return evaluate(*a.shape, shifted) + dot(a.lin, x);
    }
};

struct SubgradVisitor {
    const Vec& x;
    Vec operator()(const Quadratic& q) const {
        std::size_t n = x.size();
        Vec g(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            g[i] = q.lin[i];
            for (std::size_t j = 0; j < n; ++j)
                g[i] += 2.0 * q.Q[i][j] * (x[j] - q.center[j]);
        }
        return g;
    }
    Vec operator()(const PiecewiseLinear& p) const {
        std::size_t best = 0;
        double bv = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < p.pieces.size(); ++j) {
            double v = dot(p.pieces[j].slope, x) + p.pieces[j].offset;
            if (v > bv) { bv = v; best = j; }
        }
        return p.pieces[best].slope;
    }
    Vec operator()(const ExpLinear& e) const {
        Vec g(x.size());
        for (std::size_t d = 0; d < x.size(); ++d)
            g[d] = -e.decay[d] * e.scale[d] *
                       std::exp(-e.decay[d] * (x[d] - e.anchor[d])) +
                   e.lin[d];
        return g;
    }
    Vec operator()(const Anchored& a) const;
};

struct StrictConvexVisitor {
    bool operator()(const Quadratic& q) const {
        // Diagonal-dominance check; sufficient for the generated test
        // instances, conservative in general.
        for (std::size_t i = 0; i < q.Q.size(); ++i) {
            double off = 0.0;
            for (std::size_t j = 0; j < q.Q.size(); ++j)
                if (j != i) off += std::fabs(q.Q[i][j]);
            if (q.Q[i][i] <= off) return false;
        }
        return true;
    }
    bool operator()(const PiecewiseLinear&) const { return false; }
    bool operator()(const ExpLinear& e) const {
        for (std::size_t d = 0; d < e.scale.size(); ++d)
            if (e.scale[d] <= 0.0 || e.decay[d] <= 0.0) return false;
        return true;
    }
    bool operator()(const Anchored& a) const;
};

}  // namespace detail

inline double evaluate(const ScenarioFunction& f, const Vec& x) {
    return std::visit(detail::EvalVisitor{x}, f.fn);
}

inline Vec subgradient(const ScenarioFunction& f, const Vec& x) {
    return std::visit(detail::SubgradVisitor{x}, f.fn);
}

inline bool strictly_convex(const ScenarioFunction& f) {
    return std::visit(detail::StrictConvexVisitor{}, f.fn);
}

namespace detail {

inline Vec SubgradVisitor::operator()(const Anchored& a) const {
    Vec shifted(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) shifted[d] = x[d] - a.anchor[d];
    Vec g = subgradient(*a.shape, shifted);
    for (std::size_t d = 0; d < x.size(); ++d) g[d] += a.lin[d];
    return g;
}

inline bool StrictConvexVisitor::operator()(const Anchored& a) const {
    return strictly_convex(*a.shape);
}

}  // namespace detail

// Convex decision box plus named per-scenario cost functions.
struct ContinuousProblem {
    std::size_t dimension = 1;
    Vec lower, upper;
    std::vector<std::string> scenario_names;
    std::vector<ScenarioFunction> functions;
    RegretKind kind = RegretKind::COST;

    void validate() const {
        if (dimension < 1) throw DimensionMismatch("dimension must be >= 1");
        if (lower.size() != dimension || upper.size() != dimension)
            throw DimensionMismatch("bounds do not match dimension");
        for (std::size_t d = 0; d < dimension; ++d) {
            if (!std::isfinite(lower[d]) || !std::isfinite(upper[d]) ||
                lower[d] >= upper[d])
                throw DimensionMismatch("bounds must be finite with lower < upper");
        }
        if (functions.empty()) throw EmptyScenarioSet("no scenario functions");
        if (scenario_names.size() != functions.size())
            throw DimensionMismatch("scenario name count mismatch");
        if (kind != RegretKind::COST && kind != RegretKind::REGRET_MIN)
            throw DimensionMismatch("continuous problems support cost and min-regret only");
    }
};

// A scenario function shifted by its infimum over the box (the regret
// transform in the continuous setting).
struct TransformedFunction {
    ScenarioFunction fn;
    double shift = 0.0;

    double operator()(const Vec& x) const { return evaluate(fn, x) - shift; }
    Vec grad(const Vec& x) const { return subgradient(fn, x); }
};

struct ContinuousSolution {
    Vec x_star;
    double value = 0.0;
    std::vector<std::string> active;
    std::vector<std::string> determining;
    std::vector<std::string> warnings;
    double bound_gap = 0.0;  // certified upper-lower gap where available
};

namespace detail {

inline double golden_min_1d(const std::function<double(double)>& f, double lo,
                            double hi, double tol_rel) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    int guard = 0;
    while (b - a > tol_rel * (1.0 + std::fabs(a) + std::fabs(b))) {
        if (++guard > 300) break;
        if (fc <= fd) {
            b = d; d = c; fd = fc;
            c = b - phi * (b - a); fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + phi * (b - a); fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

using Envelope = std::function<double(const Vec&)>;

// Recursive coordinate-nested golden-section: valid for convex envelopes.
// Minimizes F over coordinates [d, n), x[0, d) held fixed; fills x[d, n).
inline double nested_golden(const Envelope& F, const Vec& lo, const Vec& hi,
                            std::size_t d, Vec& x, double tol_rel) {
    if (d == lo.size()) return F(x);
    auto slice = [&](double t) {
        x[d] = t;
        Vec tmp = x;
        return nested_golden(F, lo, hi, d + 1, tmp, tol_rel);
    };
    double t = golden_min_1d(slice, lo[d], hi[d], tol_rel);
    x[d] = t;
    return nested_golden(F, lo, hi, d + 1, x, tol_rel);
}

struct EnvelopeProblem {
    const std::vector<TransformedFunction>* funcs;
    std::vector<std::size_t> subset;  // indices into funcs

    double value(const Vec& x) const {
        double v = -std::numeric_limits<double>::infinity();
        for (auto i : subset) v = std::max(v, (*funcs)[i](x));
        return v;
    }
    std::size_t argmax(const Vec& x) const {
        std::size_t best = subset.front();
        double bv = (*funcs)[best](x);
        for (auto i : subset) {
            double v = (*funcs)[i](x);
            if (v > bv) { bv = v; best = i; }
        }
        return best;
    }
};

struct EnvelopeResult {
    Vec x;
    double value = 0.0;
    double lower_bound = -std::numeric_limits<double>::infinity();
};

// Kelley master: minimize t over the box subject to accumulated cuts
// g . x - t <= rhs. Variables are x shifted to be non-negative; t is free.
struct KelleyMaster {
    std::size_t n;
    Vec lo, hi;
    struct Cut {
        Vec g;
        double rhs;
    };
    std::vector<Cut> cuts;

    void add_cut(const Vec& g, const Vec& x0, double fx0) {
        // f(x) >= fx0 + g.(x - x0)  =>  g.x - t <= g.x0 - fx0
        cuts.push_back(Cut{g, dot(g, x0) - fx0});
    }

    // Returns (x, t). Throws NumericFailure if the master fails.
    std::pair<Vec, double> solve() const {
        LinearProgram lp;
        lp.num_vars = n + 1;  // y_0..y_{n-1}, t
        lp.objective.assign(lp.num_vars, 0.0);
        lp.objective[n] = -1.0;  // maximize -t
        lp.free_vars.assign(lp.num_vars, false);
        lp.free_vars[n] = true;
        for (std::size_t d = 0; d < n; ++d) {
            auto& row = lp.add_row(LpRel::LE, hi[d] - lo[d]);
            row.coeffs[d] = 1.0;
        }
        for (const auto& cut : cuts) {
            double rhs = cut.rhs;
            auto& row = lp.add_row(LpRel::LE, 0.0);
            for (std::size_t d = 0; d < n; ++d) {
                row.coeffs[d] = cut.g[d];
                rhs -= cut.g[d] * lo[d];
            }
            row.coeffs[n] = -1.0;
            row.rhs = rhs;
        }
        LpSolution sol = solve_lp(lp);
        if (sol.status != LpStatus::OPTIMAL)
            throw NumericFailure("Kelley master LP failed");
        Vec x(n);
        for (std::size_t d = 0; d < n; ++d) x[d] = sol.primal[d] + lo[d];
        return {x, sol.primal[n]};
    }
};

// Minimize the envelope over the box. 1-D: golden-section. n-D: nested
// golden polish (n <= 3) to localize, then Kelley cuts seeded near the
// incumbent to certify the bound, continuing classic iterations if needed.
inline EnvelopeResult minimize_envelope(const EnvelopeProblem& env, const Vec& lo,
                                        const Vec& hi, std::size_t max_cuts = 10000) {
    std::size_t n = lo.size();
    EnvelopeResult res;
    if (n == 1) {
        auto f = [&](double t) { return env.value(Vec{t}); };
        double x = golden_min_1d(f, lo[0], hi[0], 1e-9);
        res.x = Vec{x};
        res.value = env.value(res.x);
        res.lower_bound = res.value;  // interval-certified by golden-section
        return res;
    }

    Vec x(n);
    double ub;
    if (n <= 3) {
        Envelope F = [&](const Vec& p) { return env.value(p); };
        for (std::size_t d = 0; d < n; ++d) x[d] = 0.5 * (lo[d] + hi[d]);
        ub = nested_golden(F, lo, hi, 0, x, 1e-10);
    } else {
        for (std::size_t d = 0; d < n; ++d) x[d] = 0.5 * (lo[d] + hi[d]);
        ub = env.value(x);
    }

    KelleyMaster master{n, lo, hi, {}};
    auto add_cuts_at = [&](const Vec& p) {
        for (auto i : env.subset) {
            const auto& f = (*env.funcs)[i];
            master.add_cut(f.grad(p), p, f(p));
        }
    };
    // Seed cuts at the incumbent and a small stencil around it so the master
    // bound is pinned near the optimum.
    add_cuts_at(x);
    for (std::size_t d = 0; d < n; ++d) {
        double delta = 1e-3 * (1.0 + std::fabs(x[d]));
        for (double sgn : {-1.0, 1.0}) {
            Vec p = x;
            p[d] = std::clamp(p[d] + sgn * delta, lo[d], hi[d]);
            add_cuts_at(p);
        }
    }

    double lb = -std::numeric_limits<double>::infinity();
    Vec best = x;
    while (true) {
        auto [xm, tm] = master.solve();
        lb = std::max(lb, tm);
        double tol = 1e-7 * (1.0 + std::fabs(ub));
        if (ub - lb <= tol) break;
        double fm = env.value(xm);
        if (fm < ub) { ub = fm; best = xm; }
        add_cuts_at(xm);
        if (master.cuts.size() > max_cuts)
            throw IterationLimit("cutting-plane cut budget exhausted");
    }
    res.x = best;
    res.value = ub;
    res.lower_bound = lb;
    return res;
}

inline std::vector<std::size_t> all_indices(std::size_t m) {
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    return idx;
}

}  // namespace detail

// Infimum of a single scenario function over the box, to high accuracy.
inline double minimize_scenario(const ScenarioFunction& f, const Vec& lo,
                                const Vec& hi, Vec* argmin = nullptr) {
    std::vector<TransformedFunction> tf{TransformedFunction{f, 0.0}};
    detail::EnvelopeProblem env{&tf, {0}};
    auto res = detail::minimize_envelope(env, lo, hi);
    if (argmin) *argmin = res.x;
    return res.value;
}

// The continuous regret transform: each scenario function minus its infimum
// over the box. For COST the shifts are zero. For anchored families the
// per-scenario minimizer is the shared-shape minimizer translated by the
// anchor, which the numeric minimization recovers.
inline std::vector<TransformedFunction> regret_functions(const ContinuousProblem& p) {
    p.validate();
    std::vector<TransformedFunction> out;
    out.reserve(p.functions.size());
    for (const auto& f : p.functions) out.push_back(TransformedFunction{f, 0.0});
    if (p.kind == RegretKind::COST) return out;
    for (auto& tf : out) tf.shift = minimize_scenario(tf.fn, p.lower, p.upper);
    return out;
}

namespace detail {

inline ContinuousSolution finish_solution(const ContinuousProblem& p,
                                          const std::vector<TransformedFunction>& tf,
                                          const EnvelopeResult& res) {
    ContinuousSolution sol;
    sol.x_star = res.x;
    sol.value = res.value;
    sol.bound_gap = res.value - res.lower_bound;
    double tol = 1e-6 * (1.0 + std::fabs(sol.value));
    for (std::size_t i = 0; i < tf.size(); ++i)
        if (tf[i](res.x) >= sol.value - tol)
            sol.active.push_back(p.scenario_names[i]);
    bool all_strict = true;
    for (const auto& f : p.functions)
        if (!strictly_convex(f)) all_strict = false;
    if (!all_strict)
        sol.warnings.push_back(
            "not all scenario functions are strictly convex; the minimax "
            "envelope may be flat and the minimizer non-unique");
    return sol;
}

inline EnvelopeResult solve_subset(const std::vector<TransformedFunction>& tf,
                                   const Vec& lo, const Vec& hi,
                                   const std::vector<std::size_t>& subset) {
    EnvelopeProblem env{&tf, subset};
    return minimize_envelope(env, lo, hi);
}

}  // namespace detail

// Greedy reduction of the active set: drop any scenario whose removal leaves
// the re-solved optimum within 1e-6 of x_star.
inline std::vector<std::string> determining_set(const ContinuousProblem& p,
                                                const std::vector<TransformedFunction>& tf,
                                                const ContinuousSolution& sol) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < p.scenario_names.size(); ++i)
        if (std::find(sol.active.begin(), sol.active.end(), p.scenario_names[i]) !=
            sol.active.end())
            keep.push_back(i);
    for (std::size_t pos = 0; pos < keep.size() && keep.size() > 1;) {
        std::vector<std::size_t> trial = keep;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
        auto res = detail::solve_subset(tf, p.lower, p.upper, trial);
        double dist = 0.0;
        for (std::size_t d = 0; d < p.dimension; ++d)
            dist = std::max(dist, std::fabs(res.x[d] - sol.x_star[d]));
        if (dist <= 1e-6) {
            keep = std::move(trial);
        } else {
            ++pos;
        }
    }
    std::vector<std::string> names;
    for (auto i : keep) names.push_back(p.scenario_names[i]);
    return names;
}

inline ContinuousSolution solve(const ContinuousProblem& p) {
    p.validate();
    auto tf = regret_functions(p);
    auto res = detail::solve_subset(tf, p.lower, p.upper,
                                    detail::all_indices(tf.size()));
    ContinuousSolution sol = detail::finish_solution(p, tf, res);
    sol.determining = determining_set(p, tf, sol);
    return sol;
}

inline ContinuousSolution solve_1d(const ContinuousProblem& p) {
    if (p.dimension != 1) throw DimensionMismatch("solve_1d requires dimension 1");
    return solve(p);
}

inline ContinuousSolution solve_nd(const ContinuousProblem& p) {
    if (p.dimension > 10) throw DimensionMismatch("dimension capped at 10");
    return solve(p);
}

// Per-scenario anchor points sharing one shape function h and a cost vector k:
// f_i(x) = h(x - a_i) + k . x.
struct AnchoredFamily {
    std::vector<std::string> names;
    std::vector<Vec> anchors;
    ScenarioFunction shape;
    Vec cost;
};

inline ContinuousProblem anchored_problem(const AnchoredFamily& family, Vec lower,
                                          Vec upper, RegretKind kind) {
    ContinuousProblem p;
    p.dimension = lower.size();
    p.lower = std::move(lower);
    p.upper = std::move(upper);
    p.kind = kind;
    auto shape = std::make_shared<ScenarioFunction>(family.shape);
    for (std::size_t i = 0; i < family.anchors.size(); ++i) {
        p.scenario_names.push_back(family.names[i]);
        p.functions.push_back(
            ScenarioFunction{Anchored{shape, family.anchors[i], family.cost}});
    }
    return p;
}

// Convex-hull membership via phase-1 feasibility: lambda >= 0, sum lambda = 1,
// sum lambda a_i = point.
inline bool in_convex_hull(const std::vector<Vec>& points, const Vec& target) {
    if (points.empty()) return false;
    std::size_t n = target.size();
    LinearProgram lp;
    lp.num_vars = points.size();
    lp.objective.assign(lp.num_vars, 0.0);
    auto& norm = lp.add_row(LpRel::EQ, 1.0);
    std::fill(norm.coeffs.begin(), norm.coeffs.end(), 1.0);
    for (std::size_t d = 0; d < n; ++d) {
        auto& row = lp.add_row(LpRel::EQ, target[d]);
        for (std::size_t i = 0; i < points.size(); ++i)
            row.coeffs[i] = points[i][d];
    }
    return solve_lp(lp).status == LpStatus::OPTIMAL;
}

// Removes every scenario whose anchor is a convex combination of the retained
// others; the result contains all hull vertices.
inline std::vector<std::string> hull_reduce(const AnchoredFamily& family) {
    std::vector<std::size_t> retained = detail::all_indices(family.anchors.size());
    for (std::size_t pos = 0; pos < retained.size() && retained.size() > 1;) {
        std::vector<Vec> others;
        for (std::size_t k = 0; k < retained.size(); ++k)
            if (k != pos) others.push_back(family.anchors[retained[k]]);
        if (in_convex_hull(others, family.anchors[retained[pos]])) {
            retained.erase(retained.begin() + static_cast<std::ptrdiff_t>(pos));
        } else {
            ++pos;
        }
    }
    std::vector<std::string> names;
    for (auto i : retained) names.push_back(family.names[i]);
    return names;
}

struct BlockSolution {
    ContinuousSolution solution;
    std::vector<std::vector<std::string>> components;
    std::vector<std::vector<std::string>> determining_components;
};

namespace detail {

// max over components of the per-component inner LP value at x.
inline double block_objective(const std::vector<TransformedFunction>& tf,
                              const std::vector<std::string>& scenario_names,
                              const ProbabilityPolytope& polytope,
                              const std::vector<std::vector<std::string>>& comps,
                              const Vec& x, std::size_t* arg = nullptr) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < comps.size(); ++c) {
        std::vector<double> vals;
        for (const auto& name : comps[c]) {
            auto it = std::find(scenario_names.begin(), scenario_names.end(), name);
            vals.push_back(tf[static_cast<std::size_t>(
                it - scenario_names.begin())](x));
        }
        double g = component_value(vals, polytope, comps[c]);
        if (g > best) {
            best = g;
            if (arg) *arg = c;
        }
    }
    return best;
}

}  // namespace detail

// Robust continuous solve over a block-diagonal ambiguity set: minimizes the
// max over components of the component LP value g_j(x).
inline BlockSolution robust_block_solve(const ContinuousProblem& p,
                                        const ProbabilityPolytope& polytope) {
    p.validate();
    if (polytope.scenarios().names() != p.scenario_names)
        throw DimensionMismatch("polytope scenarios do not match problem");
    auto tf = regret_functions(p);
    auto comps = block_structure(polytope).components;

    auto solve_over = [&](const std::vector<std::vector<std::string>>& use) {
        detail::Envelope F = [&](const Vec& x) {
            return detail::block_objective(tf, p.scenario_names, polytope, use, x);
        };
        Vec x(p.dimension);
        for (std::size_t d = 0; d < p.dimension; ++d)
            x[d] = 0.5 * (p.lower[d] + p.upper[d]);
        double v;
        if (p.dimension == 1) {
            double t = detail::golden_min_1d(
                [&](double u) { return F(Vec{u}); }, p.lower[0], p.upper[0], 1e-9);
            x = Vec{t};
            v = F(x);
        } else if (p.dimension <= 3) {
            v = detail::nested_golden(F, p.lower, p.upper, 0, x, 1e-10);
        } else {
            throw DimensionMismatch("block-robust solve supports dimension <= 3");
        }
        return std::pair<Vec, double>(x, v);
    };

    auto [x_star, value] = solve_over(comps);

    BlockSolution bs;
    bs.components = comps;
    bs.solution.x_star = x_star;
    bs.solution.value = value;
    double tol = 1e-6 * (1.0 + std::fabs(value));
    std::vector<std::vector<std::string>> active_comps;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        std::vector<double> vals;
        for (const auto& name : comps[c]) {
            auto it = std::find(p.scenario_names.begin(), p.scenario_names.end(), name);
            vals.push_back(tf[static_cast<std::size_t>(
                it - p.scenario_names.begin())](x_star));
        }
        if (component_value(vals, polytope, comps[c]) >= value - tol) {
            active_comps.push_back(comps[c]);
            for (const auto& name : comps[c]) bs.solution.active.push_back(name);
        }
    }

    // Greedy reduction over whole components.
    auto keep = active_comps;
    for (std::size_t pos = 0; pos < keep.size() && keep.size() > 1;) {
        auto trial = keep;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
        auto [xr, vr] = solve_over(trial);
        double dist = 0.0;
        for (std::size_t d = 0; d < p.dimension; ++d)
            dist = std::max(dist, std::fabs(xr[d] - x_star[d]));
        if (dist <= 1e-6) keep = std::move(trial);
        else ++pos;
    }
    bs.determining_components = keep;
    for (const auto& comp : keep)
        for (const auto& name : comp) bs.solution.determining.push_back(name);
    return bs;
}

}  // namespace lwr
