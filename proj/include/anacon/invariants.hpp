#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "anacon/hypergraph.hpp"

// Exact combinatorial invariants by exhaustive enumeration over vertex
// subsets.  All three quantities are NP-hard in general, so computation is
// refused beyond n = 24 rather than silently approximated.
//
// Witness tie-breaking is deterministic everywhere: smallest attaining set
// size first, then lexicographically smallest vertex list.

namespace anacon {

namespace detail {

inline void require_enumerable(const Hypergraph& h, const char* what) {
    if (h.n() > 24)
        throw std::invalid_argument(std::string(what) +
                                    " uses exhaustive subset enumeration and is limited to n <= 24");
    if (h.n() < 2)
        throw std::invalid_argument(std::string(what) + " needs at least 2 vertices");
}

inline std::vector<std::uint32_t> edge_masks(const Hypergraph& h) {
    std::vector<std::uint32_t> masks;
    masks.reserve(h.edges().size());
    for (const Edge& e : h.edges()) {
        std::uint32_t m = 0;
        for (int v : e) m |= 1u << (v - 1);
        masks.push_back(m);
    }
    return masks;
}

inline std::vector<int> mask_to_vertices(std::uint32_t mask) {
    std::vector<int> vs;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1u) vs.push_back(v + 1);
    return vs;
}

// Calls fn(mask) for every size-sz subset of [0, n), in lexicographic order
// of the ascending vertex lists.
template <class Fn>
inline void for_each_subset(int n, int sz, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(sz));
    for (int i = 0; i < sz; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        std::uint32_t mask = 0;
        for (int i : idx) mask |= 1u << i;
        fn(mask);
        int p = sz - 1;
        while (p >= 0 && idx[static_cast<std::size_t>(p)] == n - sz + p) --p;
        if (p < 0) break;
        ++idx[static_cast<std::size_t>(p)];
        for (int q = p + 1; q < sz; ++q)
            idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
    }
}

}  // namespace detail

// A vertex subset S together with the number of edges meeting both S and
// its complement.  For isoperimetric results ratio() = crossing / |S|.
struct CutWitness {
    std::vector<int> side;         // the set S, ascending
    long long crossing = 0;        // |E(S, complement)|
    long long ratio_num = 0;       // crossing
    long long ratio_den = 1;       // |S|
    double ratio() const { return static_cast<double>(ratio_num) / static_cast<double>(ratio_den); }
};

struct BoundaryEdges {
    std::vector<Edge> crossing;  // edges meeting S and its complement
    std::vector<Edge> inside;    // edges contained in S
};

// Splits the edge set relative to S (nonempty, proper).
inline BoundaryEdges boundary_edges(const Hypergraph& h, const std::vector<int>& side) {
    std::vector<char> in_side(static_cast<std::size_t>(h.n()) + 1, 0);
    int count = 0;
    for (int v : side) {
        if (v < 1 || v > h.n()) throw std::invalid_argument("vertex id outside [1, n]");
        if (!in_side[static_cast<std::size_t>(v)]) { in_side[static_cast<std::size_t>(v)] = 1; ++count; }
    }
    if (count == 0 || count == h.n())
        throw std::invalid_argument("side must be a nonempty proper subset of the vertices");
    BoundaryEdges b;
    for (const Edge& e : h.edges()) {
        int hit = 0;
        for (int v : e)
            if (in_side[static_cast<std::size_t>(v)]) ++hit;
        if (hit == 0) continue;
        if (hit == static_cast<int>(e.size()))
            b.inside.push_back(e);
        else
            b.crossing.push_back(e);
    }
    return b;
}

// i(H) = min over nonempty S with |S| <= floor(n/2) of |E(S, S^c)| / |S|.
// Ratios are compared exactly via cross-multiplication; no floating point
// is involved in the minimization.
inline CutWitness isoperimetric_number(const Hypergraph& h) {
    detail::require_enumerable(h, "isoperimetric_number");
    const auto masks = detail::edge_masks(h);
    const std::uint32_t full = (1u << h.n()) - 1;
    long long best_num = -1, best_den = 1;
    std::uint32_t best_mask = 0;
    for (int sz = 1; sz <= h.n() / 2; ++sz) {
        detail::for_each_subset(h.n(), sz, [&](std::uint32_t s) {
            long long crossing = 0;
            for (std::uint32_t em : masks)
                if ((em & s) != 0 && (em & ~s & full) != 0) ++crossing;
            // crossing/sz < best_num/best_den  <=>  crossing*best_den < best_num*sz
            if (best_num < 0 || crossing * best_den < best_num * sz) {
                best_num = crossing;
                best_den = sz;
                best_mask = s;
            }
        });
    }
    CutWitness w;
    w.side = detail::mask_to_vertices(best_mask);
    w.crossing = best_num;
    w.ratio_num = best_num;
    w.ratio_den = best_den;
    return w;
}

// Minimum number of edges whose removal disconnects the vertex set, i.e.
// min over bipartitions of the crossing-edge count.  Sides of size
// <= floor(n/2) cover every bipartition.
inline CutWitness edge_connectivity(const Hypergraph& h) {
    detail::require_enumerable(h, "edge_connectivity");
    const auto masks = detail::edge_masks(h);
    const std::uint32_t full = (1u << h.n()) - 1;
    long long best = -1;
    std::uint32_t best_mask = 0;
    for (int sz = 1; sz <= h.n() / 2; ++sz) {
        detail::for_each_subset(h.n(), sz, [&](std::uint32_t s) {
            long long crossing = 0;
            for (std::uint32_t em : masks)
                if ((em & s) != 0 && (em & ~s & full) != 0) ++crossing;
            if (best < 0 || crossing < best) {
                best = crossing;
                best_mask = s;
            }
        });
    }
    CutWitness w;
    w.side = detail::mask_to_vertices(best_mask);
    w.crossing = best;
    w.ratio_num = best;
    w.ratio_den = static_cast<long long>(w.side.size());
    return w;
}

struct VertexCut {
    int value = 0;            // |V'|
    std::vector<int> cut;     // removed vertices, ascending
};

// Smallest V' (|V'| <= n-2) whose removal leaves a disconnected remainder;
// isolated survivors count as components.  nullopt when no such set exists
// (e.g. complete hypergraphs with k = 2; for k >= 3 removing vertices can
// break all edges, so complete hypergraphs do have vertex cuts).
inline std::optional<VertexCut> vertex_connectivity(const Hypergraph& h) {
    detail::require_enumerable(h, "vertex_connectivity");
    for (int sz = 1; sz <= h.n() - 2; ++sz) {
        std::optional<VertexCut> found;
        detail::for_each_subset(h.n(), sz, [&](std::uint32_t s) {
            if (found) return;
            const Hypergraph rest = remove_vertices(h, detail::mask_to_vertices(s));
            if (components(rest).size() > 1)
                found = VertexCut{sz, detail::mask_to_vertices(s)};
        });
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace anacon
