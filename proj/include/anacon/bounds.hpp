#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "anacon/hypergraph.hpp"
#include "anacon/invariants.hpp"

// Closed-form bounds on the analytic connectivity, and a harness that checks
// an alpha estimate against every bound that applies to the instance.
//
// Each bound is exposed on its own so callers can evaluate them without
// running the solver; verify_all packages the full comparison with a slack
// that absorbs solver error.

namespace anacon {

// Generalized binomial coefficient via the falling factorial:
//   x (x-1) ... (x-m+1) / m!
// Defined for any real x; m >= 0.  Not clamped here; callers that use it as
// a stand-in for a count clamp negatives themselves.
inline double gen_binomial(double x, int m) {
    if (m < 0) throw std::invalid_argument("gen_binomial: lower index must be >= 0");
    double num = 1.0, den = 1.0;
    for (int i = 0; i < m; ++i) {
        num *= x - i;
        den *= i + 1;
    }
    return num / den;
}

// alpha of the complete k-uniform hypergraph on n vertices: C(n-2, k-2).
// For k = 2 this is 1, matching the classic complete-graph value.
inline double complete_alpha(int n, int k) {
    if (k < 2 || n < k) throw std::invalid_argument("complete_alpha: need n >= k >= 2");
    return static_cast<double>(binomial_u64(n - 2, k - 2));
}

// Upper bound min over edges of (sum_{v in e} d(v) - k) / k.  Needs more
// than one edge: with a single edge the minimum over the slice is not
// controlled by this expression.
inline double degree_bound(const Hypergraph& h) {
    if (h.edge_count() < 2)
        throw std::invalid_argument("degree_bound: needs more than one edge");
    const DegreeProfile p = degree_profile(h);
    double best = std::numeric_limits<double>::infinity();
    for (const Edge& e : h.edges()) {
        long long s = 0;
        for (int v : e) s += p.degrees[static_cast<std::size_t>(v - 1)];
        best = std::min(best, static_cast<double>(s - h.k()) / h.k());
    }
    return best;
}

struct CutsetBound {
    int vertex_connectivity = 0;
    double value = 0.0;        // with the fractional (n - v)/2 - 1 upper index
    double value_floored = 0.0;  // with the index floored to an integer first
};

// Upper bound from a minimum vertex cut of size v:
//   C(n-2, k-2) - [ C(n-v-1, k-1) - C((n-v)/2 - 1, k-1) ] * (k-1)/(n-1).
// The middle binomial with fractional upper index is evaluated through the
// falling factorial and clamped at zero (it stands in for a count).  The
// floored variant is reported alongside; it is never larger.  nullopt when
// the hypergraph has no vertex cut.
inline std::optional<CutsetBound> cutset_bound(const Hypergraph& h) {
    const auto vc = vertex_connectivity(h);
    if (!vc) return std::nullopt;
    const int n = h.n(), k = h.k(), v = vc->value;
    const double lead = static_cast<double>(binomial_u64(n - 2, k - 2));
    const double mid = gen_binomial(n - v - 1, k - 1);
    const double frac = std::max(0.0, gen_binomial((n - v) / 2.0 - 1.0, k - 1));
    const double floored =
        std::max(0.0, gen_binomial(std::floor((n - v) / 2.0) - 1.0, k - 1));
    CutsetBound b;
    b.vertex_connectivity = v;
    b.value = lead - (mid - frac) * (k - 1) / (n - 1);
    b.value_floored = lead - (mid - floored) * (k - 1) / (n - 1);
    return b;
}

struct CheegerBounds {
    bool applicable = false;  // k >= 3 and connected; values are filled in regardless
    double isoperimetric = 0.0;
    double upper = 0.0;  // (k/2) * i(H)
    double lower = 0.0;  // max_degree - sqrt(max_degree^2 - i(H)^2)
};

// Isoperimetric sandwich: (k/2) i(H) >= alpha >= D - sqrt(D^2 - i(H)^2)
// with D the maximum degree.  Established for k >= 3 on connected
// hypergraphs; i(H) <= min degree <= D keeps the radicand nonnegative.
inline CheegerBounds cheeger_bounds(const Hypergraph& h) {
    const CutWitness iso = isoperimetric_number(h);
    const DegreeProfile p = degree_profile(h);
    CheegerBounds b;
    b.isoperimetric = iso.ratio();
    b.applicable = h.k() >= 3 && is_connected(h);
    b.upper = 0.5 * h.k() * b.isoperimetric;
    const double dmax = p.max_degree;
    const double rad = dmax * dmax - b.isoperimetric * b.isoperimetric;
    b.lower = dmax - std::sqrt(std::max(0.0, rad));
    return b;
}

// Lower bound 4 / (n^2 (k-1) diam(H)); requires a finite diameter.
inline double diameter_lower_bound(const Hypergraph& h) {
    if (h.n() < 2) throw std::invalid_argument("diameter_lower_bound: need at least 2 vertices");
    const auto d = diameter(h);
    if (!d) throw std::domain_error("diameter_lower_bound: disconnected hypergraph");
    return 4.0 / (static_cast<double>(h.n()) * h.n() * (h.k() - 1) * *d);
}

// For a 2-design with no cut vertex, alpha equals the pair multiplicity
// lambda exactly, attained by the uniform vector on any n-1 vertices.
// The cut-vertex condition is checked directly: removing any single vertex
// must leave the rest connected.
inline std::optional<double> design_alpha(const Hypergraph& h) {
    const auto d = check_two_design(h);
    if (!d) return std::nullopt;
    if (h.n() < 3) return std::nullopt;
    for (int v = 1; v <= h.n(); ++v)
        if (!is_connected(remove_vertices(h, {v}))) return std::nullopt;
    return static_cast<double>(d->lambda);
}

struct BoundCheck {
    std::string name;
    bool applicable = false;
    bool pass = true;     // meaningful only when applicable
    double bound = 0.0;   // value alpha was compared against
    std::string note;     // reason when inapplicable, witness info otherwise
};

struct BoundReport {
    double alpha = 0.0;
    double slack = 0.0;
    bool connected = false;
    std::vector<BoundCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.applicable && !c.pass) return false;
        return true;
    }
};

// Checks the estimate against every applicable bound, with |slack| room for
// solver error.  Upper bounds must satisfy alpha <= bound + slack, lower
// bounds alpha >= bound - slack, equalities |alpha - bound| <= slack.
inline BoundReport verify_all(const Hypergraph& h, double alpha, double slack) {
    if (!(slack >= 0.0)) throw std::invalid_argument("verify_all: slack must be nonnegative");
    if (h.n() < 2) throw std::invalid_argument("verify_all: need at least 2 vertices");
    BoundReport rep;
    rep.alpha = alpha;
    rep.slack = slack;
    rep.connected = is_connected(h);
    const bool enumerable = h.n() <= 24;

    {
        BoundCheck c;
        c.name = "connectivity";
        c.applicable = true;
        c.bound = 0.0;
        c.pass = rep.connected ? (alpha > slack) : (alpha <= slack);
        c.note = rep.connected ? "connected, so alpha must be positive"
                               : "disconnected, so alpha must be zero";
        rep.checks.push_back(std::move(c));
    }
    {
        BoundCheck c;
        c.name = "degree-upper";
        if (h.edge_count() >= 2) {
            c.applicable = true;
            c.bound = degree_bound(h);
            c.pass = alpha <= c.bound + slack;
        } else {
            c.note = "needs more than one edge";
        }
        rep.checks.push_back(std::move(c));
    }
    {
        BoundCheck c;
        c.name = "cutset-upper";
        const bool complete = static_cast<std::uint64_t>(h.edge_count()) ==
                              binomial_u64(h.n(), h.k());
        if (!enumerable) {
            c.note = "vertex connectivity not computed beyond n = 24";
        } else if (complete) {
            c.note = "complete hypergraph; covered by the exact value check";
        } else {
            const auto b = cutset_bound(h);
            if (b) {
                c.applicable = true;
                c.bound = b->value;
                c.pass = alpha <= c.bound + slack;
                c.note = "cut size " + std::to_string(b->vertex_connectivity) +
                         ", floored variant " + std::to_string(b->value_floored);
            } else {
                c.note = "no vertex cut";
            }
        }
        rep.checks.push_back(std::move(c));
    }
    if (enumerable) {
        const CheegerBounds cb = cheeger_bounds(h);
        BoundCheck up, lo;
        up.name = "isoperimetric-upper";
        lo.name = "isoperimetric-lower";
        up.applicable = lo.applicable = cb.applicable;
        up.bound = cb.upper;
        lo.bound = cb.lower;
        up.pass = alpha <= cb.upper + slack;
        lo.pass = alpha >= cb.lower - slack;
        if (!cb.applicable) up.note = lo.note = (h.k() < 3 ? "stated for k >= 3" : "disconnected");
        rep.checks.push_back(std::move(up));
        rep.checks.push_back(std::move(lo));
    } else {
        BoundCheck up, lo;
        up.name = "isoperimetric-upper";
        lo.name = "isoperimetric-lower";
        up.note = lo.note = "isoperimetric number not computed beyond n = 24";
        rep.checks.push_back(std::move(up));
        rep.checks.push_back(std::move(lo));
    }
    {
        BoundCheck c;
        c.name = "diameter-lower";
        if (rep.connected) {
            c.applicable = true;
            c.bound = diameter_lower_bound(h);
            c.pass = alpha >= c.bound - slack;
        } else {
            c.note = "diameter infinite";
        }
        rep.checks.push_back(std::move(c));
    }
    {
        BoundCheck c;
        c.name = "edge-connectivity-lower";
        if (enumerable) {
            c.applicable = true;
            const CutWitness e = edge_connectivity(h);
            c.bound = static_cast<double>(h.n()) / h.k() * alpha;  // e(H) >= (n/k) alpha
            c.pass = static_cast<double>(e.crossing) >= c.bound - slack;
            c.note = "edge connectivity " + std::to_string(e.crossing);
        } else {
            c.note = "edge connectivity not computed beyond n = 24";
        }
        rep.checks.push_back(std::move(c));
    }
    {
        BoundCheck c;
        c.name = "design-value";
        const auto dv = design_alpha(h);
        if (dv) {
            c.applicable = true;
            c.bound = *dv;
            c.pass = std::abs(alpha - *dv) <= slack;
        } else {
            c.note = "not a 2-design without cut vertices";
        }
        rep.checks.push_back(std::move(c));
    }
    {
        BoundCheck c;
        c.name = "complete-value";
        if (h.n() >= h.k() &&
            static_cast<std::uint64_t>(h.edge_count()) == binomial_u64(h.n(), h.k())) {
            c.applicable = true;
            c.bound = complete_alpha(h.n(), h.k());
            c.pass = std::abs(alpha - c.bound) <= slack;
        } else {
            c.note = "not complete";
        }
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

}  // namespace anacon
