#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <span>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "anacon/hypergraph.hpp"
#include "anacon/laplacian.hpp"
#include "anacon/rng.hpp"

// Analytic connectivity.
//
//   alpha(H) = min over j of  min { L x^k : x >= 0, sum x_v^k = 1, x_j = 0 }.
//
// Each inner problem is solved in y = x^[k] coordinates, where the objective
//     f(y) = sum_v d(v) y_v - k * sum_e (prod_{v in e} y_v)^(1/k)
// is convex on the simplex slice {y >= 0, sum y = 1, y_j = 0}.  The solver
// runs entropic mirror descent (exponentiated gradient) on an
// eps-smoothed surrogate with a decaying step and a halving eps schedule,
// then polishes on the identified support face with a monotone backtracking
// phase at eps = 0.  Multiple starts (one uniform, the rest Dirichlet)
// guard against poor conditioning; the best value wins.
//
// Determinism: every random draw comes from an mt19937_64 seeded by
// (seed, excluded vertex, start index), subproblems are independent, and
// each is solved sequentially inside a single thread, so results are
// bit-identical regardless of the thread count.

namespace anacon {

struct SolverConfig {
    double tol = 1e-8;            // convergence tolerance on the objective window
    long long max_iter = 50000;   // per-(vertex, start) iteration budget
    int restarts = 8;             // random starts in addition to the uniform one
    double eps_initial = 1e-3;    // smoothing at iteration 1
    int eps_halving_period = 500; // iterations between eps halvings
    double eps_floor = 1e-12;     // smoothing never goes below this
    std::uint64_t seed = 0;
    double step0 = 1.0;           // base step size; phase-one step is step0/sqrt(t)
};

inline void validate(const SolverConfig& c) {
    if (!(c.tol > 0.0)) throw std::invalid_argument("solver config: tol must be positive");
    if (c.max_iter < 1) throw std::invalid_argument("solver config: max_iter must be >= 1");
    if (c.restarts < 0) throw std::invalid_argument("solver config: restarts must be >= 0");
    if (!(c.eps_initial > 0.0) || !(c.eps_floor > 0.0) || c.eps_floor > c.eps_initial)
        throw std::invalid_argument("solver config: eps schedule needs 0 < floor <= initial");
    if (c.eps_halving_period < 1)
        throw std::invalid_argument("solver config: eps halving period must be >= 1");
    if (!(c.step0 > 0.0)) throw std::invalid_argument("solver config: step0 must be positive");
}

struct SolveOutcome {
    int excluded = 0;        // j, the pinned-to-zero vertex
    double value = 0.0;      // minimum of the constrained form
    Point minimizer;         // x with x_j = 0, sum x^k = 1
    double kkt = 0.0;        // first-order residual at the minimizer
    long long iterations = 0;  // iterations of the start that produced the result
    bool converged = false;  // tolerance met before the iteration budget ran out
};

struct AlphaResult {
    double alpha = 0.0;
    int argmin = 0;                        // smallest j attaining alpha within tol
    std::vector<SolveOutcome> per_vertex;  // index j-1
};

namespace detail {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Relative cutoff for declaring a coordinate off the support face.
// Coordinates abandoned by mirror descent decay below eps_floor scale
// (~1e-12), while genuine support entries stay orders of magnitude above.
constexpr double kFaceCutoff = 1e-9;

struct Instance {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> edges;     // 0-based member lists
    std::vector<std::vector<int>> incident;  // vertex -> incident edge ids
    std::vector<int> deg;

    explicit Instance(const Hypergraph& h) : n(h.n()), k(h.k()) {
        edges.reserve(h.edges().size());
        incident.assign(static_cast<std::size_t>(n), {});
        deg.assign(static_cast<std::size_t>(n), 0);
        for (const Edge& e : h.edges()) {
            std::vector<int> e0;
            e0.reserve(e.size());
            for (int v : e) e0.push_back(v - 1);
            const int id = static_cast<int>(edges.size());
            for (int v0 : e0) {
                incident[static_cast<std::size_t>(v0)].push_back(id);
                ++deg[static_cast<std::size_t>(v0)];
            }
            edges.push_back(std::move(e0));
        }
    }

    double geomean(const std::vector<int>& e0, std::span<const double> y, double eps) const {
        double prod = 1.0;
        bool zero = false;
        for (int v : e0) {
            const double t = y[static_cast<std::size_t>(v)] + eps;
            if (t == 0.0) zero = true;
            prod *= t;
        }
        if (zero) return 0.0;
        if (prod > 0.0) return std::pow(prod, 1.0 / k);
        double lg = 0.0;  // direct product underflowed; go through logs
        for (int v : e0) lg += std::log(y[static_cast<std::size_t>(v)] + eps);
        return std::exp(lg / k);
    }

    double objective(std::span<const double> y) const {
        double lin = 0.0;
        for (int v = 0; v < n; ++v) lin += deg[static_cast<std::size_t>(v)] * y[static_cast<std::size_t>(v)];
        double gms = 0.0;
        for (const auto& e : edges) gms += geomean(e, y, 0.0);
        return lin - k * gms;
    }

    void geomeans(std::span<const double> y, double eps, std::vector<double>& gm) const {
        gm.resize(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) gm[i] = geomean(edges[i], y, eps);
    }
};

// First-order residual at a feasible slice point (y[j0] = 0, sum y = 1).
// Zero coordinates with a strictly positive edge continuation (every other
// member positive) have directional derivative -inf and are excluded from
// the residual; optimal points never have such coordinates.  Remaining zero
// coordinates have limit gradient d(v).
inline double kkt_core(const Instance& I, std::span<const double> y, int j0) {
    std::vector<double> gm;
    I.geomeans(y, 0.0, gm);
    std::vector<double> g(static_cast<std::size_t>(I.n), 0.0);
    std::vector<char> in_support(static_cast<std::size_t>(I.n), 0);
    double mu = kInf;
    for (int v = 0; v < I.n; ++v) {
        if (v == j0) continue;
        const double yv = y[static_cast<std::size_t>(v)];
        if (yv > 0.0) {
            double s = 0.0;
            for (int e : I.incident[static_cast<std::size_t>(v)]) s += gm[static_cast<std::size_t>(e)];
            g[static_cast<std::size_t>(v)] = I.deg[static_cast<std::size_t>(v)] - s / yv;
            in_support[static_cast<std::size_t>(v)] = 1;
            mu = std::min(mu, g[static_cast<std::size_t>(v)]);
        }
    }
    if (mu == kInf) throw std::invalid_argument("kkt residual: point has empty support");
    double spread = 0.0, viol = 0.0;
    for (int v = 0; v < I.n; ++v) {
        if (v == j0) continue;
        if (in_support[static_cast<std::size_t>(v)]) {
            spread = std::max(spread, g[static_cast<std::size_t>(v)] - mu);
            continue;
        }
        bool escapes = false;
        for (int e : I.incident[static_cast<std::size_t>(v)]) {
            bool others_pos = true;
            for (int w : I.edges[static_cast<std::size_t>(e)])
                if (w != v && !(y[static_cast<std::size_t>(w)] > 0.0)) {
                    others_pos = false;
                    break;
                }
            if (others_pos) {
                escapes = true;
                break;
            }
        }
        if (escapes) continue;
        viol = std::max(viol, mu - I.deg[static_cast<std::size_t>(v)]);
    }
    return std::max(spread, std::max(0.0, viol));
}

inline std::vector<double> clamped_copy(std::span<const double> y, double rel) {
    double mx = 0.0;
    for (double t : y) mx = std::max(mx, t);
    const double thr = rel * mx;
    std::vector<double> z(y.begin(), y.end());
    double s = 0.0;
    for (double& t : z) {
        if (t < thr) t = 0.0;
        s += t;
    }
    for (double& t : z) t /= s;
    return z;
}

struct StartOutcome {
    std::vector<double> y;
    double f = kInf;
    double kkt = kInf;
    long long iters = 0;
    bool converged = false;
};

inline StartOutcome run_start(const Instance& I, int j0, const SolverConfig& cfg, int start_idx) {
    std::vector<int> A;  // free coordinates
    A.reserve(static_cast<std::size_t>(I.n) - 1);
    for (int v = 0; v < I.n; ++v)
        if (v != j0) A.push_back(v);

    std::mt19937_64 rng(derive_stream(cfg.seed, static_cast<std::uint64_t>(j0) + 1,
                                      static_cast<std::uint64_t>(start_idx)));
    std::vector<double> l(A.size(), 0.0);
    if (start_idx > 0)
        for (double& t : l) t = std::log(std::max(exp1(rng), 1e-300));  // Dirichlet(1) start

    std::vector<double> y(static_cast<std::size_t>(I.n), 0.0);
    auto softmax = [&]() {
        double mx = -kInf;
        for (double t : l) mx = std::max(mx, t);
        double s = 0.0;
        for (std::size_t i = 0; i < A.size(); ++i) {
            l[i] -= mx;
            const double e = std::exp(l[i]);
            y[static_cast<std::size_t>(A[i])] = e;
            s += e;
        }
        for (int v : A) y[static_cast<std::size_t>(v)] /= s;
    };
    softmax();

    long long polish_budget = std::clamp<long long>(cfg.max_iter / 4, 50, 4000);
    polish_budget = std::min(polish_budget, cfg.max_iter);
    const long long phase_a = cfg.max_iter - polish_budget;

    std::vector<double> g(A.size(), 0.0), gm;
    long long used = 0;
    bool stalled = false;

    // Phase one: smoothed mirror descent, step0/sqrt(t) steps.
    double f_window = kInf;
    for (long long t = 1; t <= phase_a; ++t) {
        const int halvings = static_cast<int>((t - 1) / cfg.eps_halving_period);
        const double eps = std::max(cfg.eps_floor, std::ldexp(cfg.eps_initial, -std::min(halvings, 4000)));
        I.geomeans(y, eps, gm);
        for (std::size_t i = 0; i < A.size(); ++i) {
            const int v = A[i];
            double s = 0.0;
            for (int e : I.incident[static_cast<std::size_t>(v)]) s += gm[static_cast<std::size_t>(e)];
            const double gv = I.deg[static_cast<std::size_t>(v)] - s / (y[static_cast<std::size_t>(v)] + eps);
            g[i] = std::clamp(gv, -1e12, 1e12);
        }
        const double eta = cfg.step0 / std::sqrt(static_cast<double>(t));
        for (std::size_t i = 0; i < A.size(); ++i) l[i] -= eta * g[i];
        softmax();
        ++used;
        if (t % 50 == 0) {
            const double f = I.objective(y);
            if (eps <= cfg.eps_floor && std::abs(f - f_window) < cfg.tol) {
                stalled = true;
                break;
            }
            f_window = f;
        }
    }

    // Phase two: drop to the support face suggested by phase one and run a
    // monotone backtracking variant at eps = 0.
    double f_cur = I.objective(y);
    {
        std::vector<double> yc = clamped_copy(y, kFaceCutoff);
        const double fc = I.objective(yc);
        if (fc <= f_cur + 1e-6 * (1.0 + std::abs(f_cur))) {
            y = std::move(yc);
            f_cur = fc;
        }
    }
    std::vector<int> F;
    for (int v = 0; v < I.n; ++v)
        if (v != j0 && y[static_cast<std::size_t>(v)] > 0.0) F.push_back(v);
    l.assign(F.size(), 0.0);
    for (std::size_t i = 0; i < F.size(); ++i) l[i] = std::log(y[static_cast<std::size_t>(F[i])]);
    g.assign(F.size(), 0.0);

    std::vector<double> lt(F.size(), 0.0), ytrial(static_cast<std::size_t>(I.n), 0.0);
    double eta = cfg.step0;
    double f_window_b = f_cur;
    long long trial = 0;
    bool polished = false;
    while (used < cfg.max_iter && trial < polish_budget && F.size() > 1) {
        ++trial;
        ++used;
        I.geomeans(y, 0.0, gm);
        for (std::size_t i = 0; i < F.size(); ++i) {
            const int v = F[i];
            double s = 0.0;
            for (int e : I.incident[static_cast<std::size_t>(v)]) s += gm[static_cast<std::size_t>(e)];
            const double gv = I.deg[static_cast<std::size_t>(v)] - s / y[static_cast<std::size_t>(v)];
            g[i] = std::clamp(gv, -1e12, 1e12);
        }
        double mx = -kInf;
        for (std::size_t i = 0; i < F.size(); ++i) {
            lt[i] = l[i] - eta * g[i];
            mx = std::max(mx, lt[i]);
        }
        double s = 0.0;
        std::fill(ytrial.begin(), ytrial.end(), 0.0);
        for (std::size_t i = 0; i < F.size(); ++i) {
            lt[i] -= mx;
            const double e = std::exp(lt[i]);
            ytrial[static_cast<std::size_t>(F[i])] = e;
            s += e;
        }
        for (int v : F) ytrial[static_cast<std::size_t>(v)] /= s;
        const double f_new = I.objective(ytrial);
        if (f_new < f_cur) {
            l = lt;
            y = ytrial;
            f_cur = f_new;
            eta = std::min(eta * 1.3, 100.0 * cfg.step0);
        } else {
            eta *= 0.5;
            if (eta < 1e-16 * cfg.step0) {
                stalled = true;  // line search exhausted: numerically stationary
                break;
            }
        }
        if (trial % 25 == 0) {
            if (std::abs(f_cur - f_window_b) < cfg.tol) {
                std::vector<double> snap = clamped_copy(y, kFaceCutoff);
                if (I.objective(snap) <= f_cur + cfg.tol &&
                    kkt_core(I, snap, j0) <= 10.0 * cfg.tol) {
                    y = std::move(snap);
                    stalled = true;
                    polished = true;
                    break;
                }
            }
            f_window_b = f_cur;
        }
    }
    if (F.size() <= 1) stalled = true;  // nothing left to optimize on a singleton face

    StartOutcome out;
    if (!polished) {
        std::vector<double> fin = clamped_copy(y, kFaceCutoff);
        if (I.objective(fin) <= I.objective(y) + 1e-6 * (1.0 + std::abs(f_cur))) y = std::move(fin);
    }
    out.y = std::move(y);
    out.f = I.objective(out.y);
    out.kkt = kkt_core(I, out.y, j0);
    out.iters = used;
    out.converged = stalled && out.kkt <= 100.0 * cfg.tol;
    return out;
}

}  // namespace detail

// Residual of the first-order optimality conditions for the slice problem:
// max gradient spread over the support plus any violation from zero
// coordinates whose limit gradient lies below the support multiplier.
// Zero at exact minimizers, and a practical certificate of near-optimality.
inline double kkt_residual(const Hypergraph& h, const SimplexPoint& p, int j) {
    if (j < 1 || j > h.n()) throw std::invalid_argument("kkt_residual: excluded vertex out of range");
    if (static_cast<int>(p.y.size()) != h.n())
        throw std::invalid_argument("kkt_residual: point has wrong dimension");
    double sum = 0.0;
    for (double t : p.y) {
        if (!(t >= 0.0)) throw std::invalid_argument("kkt_residual: entries must be nonnegative");
        sum += t;
    }
    if (p.y[static_cast<std::size_t>(j - 1)] != 0.0)
        throw std::invalid_argument("kkt_residual: excluded coordinate must be exactly zero");
    if (std::abs(sum - 1.0) > 1e-6)
        throw std::invalid_argument("kkt_residual: coordinates must sum to 1");
    detail::Instance I(h);
    return detail::kkt_core(I, p.y, j - 1);
}

// Minimum of the constrained form with vertex j pinned to zero.
inline SolveOutcome solve_subproblem(const Hypergraph& h, int j, const SolverConfig& cfg = {}) {
    validate(cfg);
    if (h.n() < 2) throw std::invalid_argument("solve_subproblem: need at least 2 vertices");
    if (j < 1 || j > h.n()) throw std::invalid_argument("solve_subproblem: excluded vertex out of range");
    detail::Instance I(h);
    const int j0 = j - 1;
    SolveOutcome out;
    out.excluded = j;

    const auto comps = components(h);
    if (h.edge_count() == 0 || comps.size() > 1) {
        // Minimum 0 in closed form: spread mass over a component avoiding j
        // (or over everything but j when there are no edges at all).
        std::vector<double> y(static_cast<std::size_t>(I.n), 0.0);
        if (comps.size() > 1) {
            for (const auto& c : comps) {
                if (std::find(c.begin(), c.end(), j) != c.end()) continue;
                for (int v : c) y[static_cast<std::size_t>(v - 1)] = 1.0 / static_cast<double>(c.size());
                break;
            }
        } else {
            for (int v = 0; v < I.n; ++v)
                if (v != j0) y[static_cast<std::size_t>(v)] = 1.0 / (I.n - 1);
        }
        out.value = 0.0;
        out.minimizer.x.assign(static_cast<std::size_t>(I.n), 0.0);
        for (int v = 0; v < I.n; ++v)
            out.minimizer.x[static_cast<std::size_t>(v)] =
                std::pow(y[static_cast<std::size_t>(v)], 1.0 / I.k);
        out.kkt = detail::kkt_core(I, y, j0);
        out.iterations = 0;
        out.converged = true;
        return out;
    }

    if (I.n == 2) {
        // One free coordinate; the slice is a single point.
        std::vector<double> y(2, 0.0);
        y[static_cast<std::size_t>(1 - j0)] = 1.0;
        out.minimizer.x.assign(2, 0.0);
        out.minimizer.x[static_cast<std::size_t>(1 - j0)] = 1.0;
        out.value = laplacian_form(h, out.minimizer.x);
        out.kkt = detail::kkt_core(I, y, j0);
        out.iterations = 0;
        out.converged = true;
        return out;
    }

    detail::StartOutcome best;
    for (int s = 0; s <= cfg.restarts; ++s) {
        detail::StartOutcome r = detail::run_start(I, j0, cfg, s);
        if (r.f < best.f) best = std::move(r);
    }
    out.minimizer.x.assign(static_cast<std::size_t>(I.n), 0.0);
    for (int v = 0; v < I.n; ++v)
        out.minimizer.x[static_cast<std::size_t>(v)] =
            std::pow(best.y[static_cast<std::size_t>(v)], 1.0 / I.k);
    out.value = laplacian_form(h, out.minimizer.x);
    out.kkt = best.kkt;
    out.iterations = best.iters;
    out.converged = best.converged;
    return out;
}

// alpha(H): minimum over all n excluded-vertex subproblems.  jobs > 1
// distributes subproblems over threads; each subproblem is solved
// sequentially with its own derived random streams, so the result does not
// depend on the thread count.
inline AlphaResult analytic_connectivity(const Hypergraph& h, const SolverConfig& cfg = {},
                                         int jobs = 1) {
    validate(cfg);
    if (h.n() < 2) throw std::invalid_argument("analytic_connectivity: need at least 2 vertices");
    if (jobs < 1) throw std::invalid_argument("analytic_connectivity: jobs must be >= 1");
    AlphaResult r;
    r.per_vertex.resize(static_cast<std::size_t>(h.n()));
    const int nthreads = std::min(jobs, h.n());
    if (nthreads == 1) {
        for (int j = 1; j <= h.n(); ++j)
            r.per_vertex[static_cast<std::size_t>(j - 1)] = solve_subproblem(h, j, cfg);
    } else {
        std::atomic<int> next{1};
        std::mutex err_mutex;
        std::exception_ptr err;
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    const int j = next.fetch_add(1);
                    if (j > h.n()) return;
                    try {
                        r.per_vertex[static_cast<std::size_t>(j - 1)] = solve_subproblem(h, j, cfg);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(err_mutex);
                        if (!err) err = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& th : pool) th.join();
        if (err) std::rethrow_exception(err);
    }
    r.alpha = detail::kInf;
    for (const auto& o : r.per_vertex) r.alpha = std::min(r.alpha, o.value);
    for (int j = 1; j <= h.n(); ++j)
        if (r.per_vertex[static_cast<std::size_t>(j - 1)].value <= r.alpha + cfg.tol) {
            r.argmin = j;
            break;
        }
    return r;
}

// Exhaustive lower-resolution check: minimizes the reformulated objective
// over all rational points y = c/M (c nonnegative integers summing to M)
// on the slice.  An upper bound on the true minimum that converges as M
// grows; independent of the iterative solver in every respect.
inline double grid_oracle(const Hypergraph& h, int j, int M) {
    if (h.n() < 2) throw std::invalid_argument("grid_oracle: need at least 2 vertices");
    if (j < 1 || j > h.n()) throw std::invalid_argument("grid_oracle: excluded vertex out of range");
    if (M < 1) throw std::invalid_argument("grid_oracle: resolution must be >= 1");
    const int a = h.n() - 1;
    const std::uint64_t points = binomial_u64(M + a - 1, a - 1);
    if (points > 100000000ull)
        throw std::invalid_argument("grid_oracle: " + std::to_string(points) +
                                    " grid points exceed the 1e8 limit; lower the resolution");
    detail::Instance I(h);
    std::vector<int> A;
    for (int v = 0; v < I.n; ++v)
        if (v != j - 1) A.push_back(v);

    // Small-k fast path: tabulated k-th roots of integer products.
    std::vector<double> root;
    long long table_max = 0;
    if (I.k <= 4 && M <= 100) {
        table_max = 1;
        for (int i = 0; i < I.k; ++i) table_max *= M;
        root.resize(static_cast<std::size_t>(table_max) + 1);
        for (long long p = 0; p <= table_max; ++p)
            root[static_cast<std::size_t>(p)] = std::pow(static_cast<double>(p), 1.0 / I.k);
    }

    std::vector<int> c(static_cast<std::size_t>(I.n), 0);
    double best = detail::kInf;
    auto leaf = [&](long long linsum) {
        double gms = 0.0;
        if (!root.empty()) {
            for (const auto& e : I.edges) {
                long long p = 1;
                for (int w : e) p *= c[static_cast<std::size_t>(w)];
                gms += root[static_cast<std::size_t>(p)];
            }
        } else {
            for (const auto& e : I.edges) {
                double p = 1.0;
                for (int w : e) p *= static_cast<double>(c[static_cast<std::size_t>(w)]);
                gms += (p > 0.0) ? std::pow(p, 1.0 / I.k) : 0.0;
            }
        }
        const double f = (static_cast<double>(linsum) - I.k * gms) / M;
        best = std::min(best, f);
    };
    auto rec = [&](auto&& self, std::size_t pos, int rem, long long linsum) -> void {
        const int v = A[pos];
        if (pos + 1 == A.size()) {
            c[static_cast<std::size_t>(v)] = rem;
            leaf(linsum + static_cast<long long>(I.deg[static_cast<std::size_t>(v)]) * rem);
            c[static_cast<std::size_t>(v)] = 0;
            return;
        }
        for (int t = 0; t <= rem; ++t) {
            c[static_cast<std::size_t>(v)] = t;
            self(self, pos + 1, rem - t, linsum + static_cast<long long>(I.deg[static_cast<std::size_t>(v)]) * t);
        }
        c[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0, M, 0);
    return best;
}

// Grid upper bound on alpha itself: the oracle minimum over all excluded
// vertices.
inline double alpha_oracle(const Hypergraph& h, int M) {
    double best = detail::kInf;
    for (int j = 1; j <= h.n(); ++j) best = std::min(best, grid_oracle(h, j, M));
    return best;
}

// Value of the form at a caller-supplied feasible point: a rigorous upper
// bound on the j-th subproblem minimum (and hence on alpha).  The point is
// renormalized onto sum x^k = 1 if it is within 1e-6 of it, and rejected
// otherwise.
inline double certify_upper(const Hypergraph& h, const Point& p, int j) {
    if (j < 1 || j > h.n()) throw std::invalid_argument("certify_upper: excluded vertex out of range");
    if (static_cast<int>(p.x.size()) != h.n())
        throw std::invalid_argument("certify_upper: point has wrong dimension");
    for (double t : p.x)
        if (!(t >= 0.0)) throw std::invalid_argument("certify_upper: entries must be nonnegative");
    if (p.x[static_cast<std::size_t>(j - 1)] != 0.0)
        throw std::invalid_argument("certify_upper: excluded coordinate must be exactly zero");
    double s = 0.0;
    for (double t : p.x) s += pow_int(t, h.k());
    if (std::abs(s - 1.0) > 1e-6)
        throw std::invalid_argument("certify_upper: sum of k-th powers must be within 1e-6 of 1");
    const double scale = std::pow(s, 1.0 / h.k());
    std::vector<double> x(p.x.begin(), p.x.end());
    for (double& t : x) t /= scale;
    return laplacian_form(h, x);
}

}  // namespace anacon
