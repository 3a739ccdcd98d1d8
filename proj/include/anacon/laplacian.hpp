#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "anacon/hypergraph.hpp"

// Evaluation of the hypergraph Laplacian form and its convex reformulation.
//
// For a k-uniform edge e and x >= 0 the edge term is
//     sum_{v in e} x_v^k  -  k * prod_{v in e} x_v,
// which is nonnegative by the AM-GM inequality and zero exactly when the
// edge's coordinates are all equal.  The full form L x^k sums this over
// edges.  Substituting y_v = x_v^k turns the form into
//     f(y) = sum_v d(v) y_v  -  k * sum_e (prod_{v in e} y_v)^(1/k),
// a convex function of y on the simplex (linear minus a sum of concave
// geometric means), which is what the solver minimizes.

namespace anacon {

// Point in x coordinates (the original variables, x >= 0, sum x^k = 1
// when feasible).
struct Point {
    std::vector<double> x;
};

// Point in y = x^[k] coordinates (y >= 0, sum y = 1 when feasible).
struct SimplexPoint {
    std::vector<double> y;

    std::vector<int> support(double cutoff = 0.0) const {
        std::vector<int> s;
        for (std::size_t i = 0; i < y.size(); ++i)
            if (y[i] > cutoff) s.push_back(static_cast<int>(i) + 1);
        return s;
    }
};

// Integer power by repeated squaring; k >= 0.
inline double pow_int(double base, int k) {
    double r = 1.0, b = base;
    for (unsigned e = static_cast<unsigned>(k); e; e >>= 1) {
        if (e & 1u) r *= b;
        b *= b;
    }
    return r;
}

namespace detail {

inline void require_size(std::span<const double> v, int n, const char* what) {
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument(std::string(what) + ": vector has " +
                                    std::to_string(v.size()) + " entries, expected " +
                                    std::to_string(n));
}

inline void require_nonnegative(std::span<const double> v, const char* what) {
    for (double t : v)
        if (!(t >= 0.0))
            throw std::invalid_argument(std::string(what) + ": entries must be nonnegative finite");
}

// (prod_{v in e} (y_v + eps))^(1/k).  Falls back to log space when the
// direct product underflows to 0 while every factor is positive.
inline double edge_geomean(const Edge& e, std::span<const double> y, double eps) {
    double prod = 1.0;
    bool has_zero = false;
    for (int v : e) {
        const double t = y[static_cast<std::size_t>(v - 1)] + eps;
        if (t == 0.0) has_zero = true;
        prod *= t;
    }
    if (has_zero) return 0.0;
    const int k = static_cast<int>(e.size());
    if (prod > 0.0) return std::pow(prod, 1.0 / k);
    double lg = 0.0;
    for (int v : e) lg += std::log(y[static_cast<std::size_t>(v - 1)] + eps);
    return std::exp(lg / k);
}

}  // namespace detail

// Edge term sum_{v in e} x_v^k - k * prod_{v in e} x_v.
inline double edge_term(const Edge& e, std::span<const double> x, int k) {
    double s = 0.0, p = 1.0;
    for (int v : e) {
        const double t = x[static_cast<std::size_t>(v - 1)];
        s += pow_int(t, k);
        p *= t;
    }
    return s - k * p;
}

// L x^k: sum of edge terms.  Nonnegative for x >= 0.
inline double laplacian_form(const Hypergraph& h, std::span<const double> x) {
    detail::require_size(x, h.n(), "laplacian_form");
    double total = 0.0;
    for (const Edge& e : h.edges()) total += edge_term(e, x, h.k());
    return total;
}

// Coordinates of L x^{k-1}:
//   (L x^{k-1})_i = d(v_i) x_i^{k-1} - sum_{e containing i} prod_{v in e, v != i} x_v.
// Euler's identity for the degree-k form gives sum_i x_i * apply_i = L x^k.
inline std::vector<double> laplacian_apply(const Hypergraph& h, std::span<const double> x) {
    detail::require_size(x, h.n(), "laplacian_apply");
    const int k = h.k();
    std::vector<double> out(static_cast<std::size_t>(h.n()), 0.0);
    std::vector<int> deg(static_cast<std::size_t>(h.n()), 0);
    for (const Edge& e : h.edges()) {
        for (int v : e) ++deg[static_cast<std::size_t>(v - 1)];
        for (int v : e) {
            double p = 1.0;
            for (int w : e)
                if (w != v) p *= x[static_cast<std::size_t>(w - 1)];
            out[static_cast<std::size_t>(v - 1)] -= p;
        }
    }
    for (int i = 0; i < h.n(); ++i)
        out[static_cast<std::size_t>(i)] +=
            deg[static_cast<std::size_t>(i)] * pow_int(x[static_cast<std::size_t>(i)], k - 1);
    return out;
}

// f(y) = sum_v d(v) y_v - k * sum_e (prod_{v in e} (y_v + eps))^(1/k).
// eps = 0 gives the exact reformulated objective; eps > 0 the smoothed
// surrogate used during optimization.  Smoothing enlarges each geometric
// mean, so the smoothed value never exceeds the exact one at the same y,
// and it converges to it pointwise as eps -> 0.
inline double objective_y(const Hypergraph& h, std::span<const double> y, double eps = 0.0) {
    detail::require_size(y, h.n(), "objective_y");
    if (!(eps >= 0.0)) throw std::invalid_argument("objective_y: eps must be nonnegative");
    std::vector<int> deg(static_cast<std::size_t>(h.n()), 0);
    double gm_sum = 0.0;
    for (const Edge& e : h.edges()) {
        for (int v : e) ++deg[static_cast<std::size_t>(v - 1)];
        gm_sum += detail::edge_geomean(e, y, eps);
    }
    double lin = 0.0;
    for (int i = 0; i < h.n(); ++i)
        lin += deg[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    return lin - h.k() * gm_sum;
}

// Gradient of the smoothed objective:
//   g_v = d(v) - sum_{e containing v} GM_eps(e) / (y_v + eps),
// where GM_eps(e) = (prod_{w in e} (y_w + eps))^(1/k).  With eps = 0 every
// vertex of every edge must have y_v > 0; a zero coordinate inside an edge
// makes the true gradient undefined (division by zero) and is reported as
// an error rather than patched.
inline std::vector<double> gradient_y(const Hypergraph& h, std::span<const double> y, double eps) {
    detail::require_size(y, h.n(), "gradient_y");
    if (!(eps >= 0.0)) throw std::invalid_argument("gradient_y: eps must be nonnegative");
    if (eps == 0.0) {
        for (const Edge& e : h.edges())
            for (int v : e)
                if (y[static_cast<std::size_t>(v - 1)] == 0.0)
                    throw std::domain_error(
                        "gradient_y: zero coordinate on an edge with eps = 0 (division by zero)");
    }
    std::vector<double> g(static_cast<std::size_t>(h.n()), 0.0);
    std::vector<int> deg(static_cast<std::size_t>(h.n()), 0);
    for (const Edge& e : h.edges()) {
        for (int v : e) ++deg[static_cast<std::size_t>(v - 1)];
        const double gm = detail::edge_geomean(e, y, eps);
        for (int v : e)
            g[static_cast<std::size_t>(v - 1)] -= gm / (y[static_cast<std::size_t>(v - 1)] + eps);
    }
    for (int i = 0; i < h.n(); ++i) g[static_cast<std::size_t>(i)] += deg[static_cast<std::size_t>(i)];
    return g;
}

// Conversions between the two coordinate systems.  Both clamp nothing:
// inputs must already be nonnegative.
inline SimplexPoint simplex_from_point(const Point& p, int k) {
    detail::require_nonnegative(p.x, "simplex_from_point");
    SimplexPoint s;
    s.y.reserve(p.x.size());
    for (double t : p.x) s.y.push_back(pow_int(t, k));
    return s;
}

inline Point point_from_simplex(const SimplexPoint& s, int k) {
    detail::require_nonnegative(s.y, "point_from_simplex");
    Point p;
    p.x.reserve(s.y.size());
    for (double t : s.y) p.x.push_back(std::pow(t, 1.0 / k));
    return p;
}

// Arithmetic-geometric mean gap diagnostics for a nonnegative vector a of
// length >= 2:
//   gap  = mean(a) - (prod a)^(1/n)
//   rhs1 = (1/n) * sum_{j=1..floor(n/2)} (sqrt(b_j) - sqrt(b_{n+1-j}))^2,
//          b = a sorted descending
//   rhs2 = (1/(n(n-1))) * sum_{i<j} (sqrt(a_i) - sqrt(a_j))^2
// Both right-hand sides are lower bounds on the gap; rhs2 is exact for
// n = 2.
struct AgmBounds {
    double gap = 0.0;
    double rhs1 = 0.0;
    double rhs2 = 0.0;
};

inline AgmBounds agm_bounds(std::span<const double> a) {
    if (a.size() < 2) throw std::invalid_argument("agm_bounds: need at least 2 entries");
    detail::require_nonnegative(a, "agm_bounds");
    const int n = static_cast<int>(a.size());
    double mean = 0.0, prod = 1.0;
    for (double t : a) {
        mean += t;
        prod *= t;
    }
    mean /= n;
    const double geo = (prod > 0.0) ? std::pow(prod, 1.0 / n) : 0.0;
    std::vector<double> b(a.begin(), a.end());
    std::sort(b.begin(), b.end(), std::greater<double>());
    double rhs1 = 0.0;
    for (int j = 0; j < n / 2; ++j) {
        const double d = std::sqrt(b[static_cast<std::size_t>(j)]) -
                         std::sqrt(b[static_cast<std::size_t>(n - 1 - j)]);
        rhs1 += d * d;
    }
    rhs1 /= n;
    double rhs2 = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d = std::sqrt(a[static_cast<std::size_t>(i)]) -
                             std::sqrt(a[static_cast<std::size_t>(j)]);
            rhs2 += d * d;
        }
    rhs2 /= static_cast<double>(n) * (n - 1);
    return AgmBounds{mean - geo, rhs1, rhs2};
}

}  // namespace anacon
