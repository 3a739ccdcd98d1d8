#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "anacon/rng.hpp"

// k-uniform hypergraphs with 1-based vertex ids.
//
// Canonical form, maintained as a class invariant: every edge is a strictly
// ascending list of k distinct vertices in [1, n], and the edge list is
// sorted lexicographically with no duplicates.  All functions below may rely
// on this.

namespace anacon {

using Edge = std::vector<int>;

// Thrown by the .khg reader; carries the 1-based line number of the offending
// input line (0 when the problem is not tied to a specific line, e.g.
// truncated input).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Binomial coefficient in uint64, saturating at UINT64_MAX instead of
// overflowing.  Partial products are exact binomials, so the running value
// stays integral.
inline std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        unsigned __int128 t = static_cast<unsigned __int128>(c) * static_cast<unsigned>(n - k + i);
        t /= static_cast<unsigned>(i);
        if (t > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
        c = static_cast<std::uint64_t>(t);
    }
    return c;
}

// rank-th k-subset of {1..n} in lexicographic order (rank 0-based).
inline Edge unrank_subset(std::uint64_t rank, int n, int k) {
    Edge e;
    e.reserve(static_cast<std::size_t>(k));
    int v = 1;
    int remaining = k;
    while (remaining > 0) {
        if (v > n) throw std::invalid_argument("subset rank out of range");
        const std::uint64_t starting_here = binomial_u64(n - v, remaining - 1);
        if (rank < starting_here) {
            e.push_back(v);
            --remaining;
        } else {
            rank -= starting_here;
        }
        ++v;
    }
    return e;
}

class Hypergraph {
public:
    // Requires edges already in canonical form; use canonicalized() for raw
    // input.  Throws std::invalid_argument on any violation.
    Hypergraph(int n, int k, std::vector<Edge> edges)
        : n_(n), k_(k), edges_(std::move(edges)) {
        if (n_ < 1) throw std::invalid_argument("vertex count must be at least 1");
        if (k_ < 2) throw std::invalid_argument("uniformity must be at least 2");
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            if (static_cast<int>(e.size()) != k_)
                throw std::invalid_argument("edge " + std::to_string(i) + " has " +
                                            std::to_string(e.size()) + " vertices, expected " +
                                            std::to_string(k_));
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (e[j] < 1 || e[j] > n_)
                    throw std::invalid_argument("edge " + std::to_string(i) +
                                                ": vertex id " + std::to_string(e[j]) +
                                                " outside [1, " + std::to_string(n_) + "]");
                if (j > 0 && e[j] <= e[j - 1])
                    throw std::invalid_argument("edge " + std::to_string(i) +
                                                " is not strictly ascending");
            }
            if (i > 0 && !(edges_[i - 1] < e)) {
                if (edges_[i - 1] == e)
                    throw std::invalid_argument("duplicate edge at index " + std::to_string(i));
                throw std::invalid_argument("edge list is not sorted");
            }
        }
    }

    // Sorts vertices within each edge and the edge list itself, then
    // validates.  Duplicate edges (after sorting) are an error, not silently
    // merged.
    static Hypergraph canonicalized(int n, int k, std::vector<Edge> edges) {
        for (Edge& e : edges) std::sort(e.begin(), e.end());
        std::sort(edges.begin(), edges.end());
        return Hypergraph(n, k, std::move(edges));
    }

    int n() const { return n_; }
    int k() const { return k_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const Hypergraph& o) const {
        return n_ == o.n_ && k_ == o.k_ && edges_ == o.edges_;
    }

private:
    int n_;
    int k_;
    std::vector<Edge> edges_;
};

// Re-checks the canonical-form invariant on an existing instance.  The
// constructor already enforces it; this exists so external callers (and
// tests) can assert it explicitly after transformations.
inline void validate(const Hypergraph& h) {
    Hypergraph copy(h.n(), h.k(), h.edges());
    (void)copy;
}

struct DegreeProfile {
    std::vector<int> degrees;  // degrees[v-1] = number of edges containing v
    int min_degree = 0;
    int max_degree = 0;
    double average = 0.0;      // equals k * m / n
};

inline DegreeProfile degree_profile(const Hypergraph& h) {
    DegreeProfile p;
    p.degrees.assign(static_cast<std::size_t>(h.n()), 0);
    for (const Edge& e : h.edges())
        for (int v : e) ++p.degrees[static_cast<std::size_t>(v - 1)];
    const auto [mn, mx] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *mn;
    p.max_degree = *mx;
    p.average = static_cast<double>(h.k()) * h.edge_count() / h.n();
    return p;
}

// Connected components as sorted vertex lists, ordered by smallest member.
// Isolated vertices form singleton components.
inline std::vector<std::vector<int>> components(const Hypergraph& h) {
    std::vector<int> parent(static_cast<std::size_t>(h.n()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    for (const Edge& e : h.edges()) {
        const int r0 = find(e[0] - 1);
        for (std::size_t i = 1; i < e.size(); ++i) parent[static_cast<std::size_t>(find(e[i] - 1))] = r0;
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> comp_of(static_cast<std::size_t>(h.n()), -1);
    for (int v = 0; v < h.n(); ++v) {
        const int r = find(v);
        if (comp_of[static_cast<std::size_t>(r)] < 0) {
            comp_of[static_cast<std::size_t>(r)] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(r)])].push_back(v + 1);
    }
    return comps;
}

inline bool is_connected(const Hypergraph& h) {
    return components(h).size() == 1;
}

// Longest shortest path in the 2-section (vertices adjacent when they share
// an edge).  nullopt when disconnected; 0 for a single vertex.
inline std::optional<int> diameter(const Hypergraph& h) {
    const int n = h.n();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : h.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                adj[static_cast<std::size_t>(e[i] - 1)].push_back(e[j] - 1);
                adj[static_cast<std::size_t>(e[j] - 1)].push_back(e[i] - 1);
            }
    int diam = 0;
    std::vector<int> dist(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[static_cast<std::size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int w : adj[static_cast<std::size_t>(u)])
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    q.push(w);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (dist[static_cast<std::size_t>(v)] < 0) return std::nullopt;
            diam = std::max(diam, dist[static_cast<std::size_t>(v)]);
        }
    }
    return diam;
}

// Deletes the given vertices and every edge meeting them, relabeling the
// survivors 1..n-|vs| in ascending order of old id.  At least one vertex
// must remain.
inline Hypergraph remove_vertices(const Hypergraph& h, const std::vector<int>& vs) {
    std::vector<char> removed(static_cast<std::size_t>(h.n()) + 1, 0);
    int removed_count = 0;
    for (int v : vs) {
        if (v < 1 || v > h.n())
            throw std::invalid_argument("vertex id " + std::to_string(v) + " outside [1, " +
                                        std::to_string(h.n()) + "]");
        if (!removed[static_cast<std::size_t>(v)]) {
            removed[static_cast<std::size_t>(v)] = 1;
            ++removed_count;
        }
    }
    if (removed_count >= h.n())
        throw std::invalid_argument("cannot remove all vertices");
    std::vector<int> new_id(static_cast<std::size_t>(h.n()) + 1, 0);
    int next = 1;
    for (int v = 1; v <= h.n(); ++v)
        if (!removed[static_cast<std::size_t>(v)]) new_id[static_cast<std::size_t>(v)] = next++;
    std::vector<Edge> kept;
    for (const Edge& e : h.edges()) {
        bool hit = false;
        for (int v : e)
            if (removed[static_cast<std::size_t>(v)]) { hit = true; break; }
        if (hit) continue;
        Edge mapped;
        mapped.reserve(e.size());
        for (int v : e) mapped.push_back(new_id[static_cast<std::size_t>(v)]);
        kept.push_back(std::move(mapped));
    }
    // Relabeling is monotone, so canonical order is preserved.
    return Hypergraph(h.n() - removed_count, h.k(), std::move(kept));
}

// --- generators ---------------------------------------------------------

inline Hypergraph gen_complete(int n, int k) {
    if (k < 2) throw std::invalid_argument("uniformity must be at least 2");
    if (n < k) throw std::invalid_argument("complete hypergraph needs n >= k");
    const std::uint64_t total = binomial_u64(n, k);
    if (total > (1u << 22))
        throw std::invalid_argument("complete hypergraph too large: " + std::to_string(total) + " edges");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(total));
    for (std::uint64_t r = 0; r < total; ++r) edges.push_back(unrank_subset(r, n, k));
    return Hypergraph(n, k, std::move(edges));
}

// Fano plane: the unique 2-(7,3,1) design.
inline Hypergraph gen_fano() {
    std::vector<Edge> edges = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                               {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    std::sort(edges.begin(), edges.end());
    return Hypergraph(7, 3, std::move(edges));
}

// m distinct edges drawn uniformly from all k-subsets of [n], by Floyd's
// sampling over lexicographic subset ranks.  With require_connected, retries
// whole samples until connected (bounded attempts).  Fixed seed gives a
// fixed hypergraph.
inline Hypergraph gen_random(int n, int k, int m, std::uint64_t seed, bool require_connected = false) {
    if (k < 2) throw std::invalid_argument("uniformity must be at least 2");
    if (n < k) throw std::invalid_argument("need n >= k");
    if (m < 0) throw std::invalid_argument("edge count must be nonnegative");
    const std::uint64_t total = binomial_u64(n, k);
    if (static_cast<std::uint64_t>(m) > total)
        throw std::invalid_argument("requested " + std::to_string(m) + " edges but only " +
                                    std::to_string(total) + " exist");
    std::mt19937_64 rng(derive_stream(seed, static_cast<std::uint64_t>(n) << 16 |
                                                static_cast<std::uint64_t>(k),
                                      static_cast<std::uint64_t>(m)));
    const int max_attempts = 1000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::set<std::uint64_t> ranks;
        for (std::uint64_t t = total - static_cast<std::uint64_t>(m); t < total; ++t) {
            const std::uint64_t r = uniform_below(rng, t + 1);
            if (!ranks.insert(r).second) ranks.insert(t);
        }
        std::vector<Edge> edges;
        edges.reserve(ranks.size());
        // Ranks ascend, and unranking is order-preserving, so the edge list
        // comes out sorted.
        for (std::uint64_t r : ranks) edges.push_back(unrank_subset(r, n, k));
        Hypergraph h(n, k, std::move(edges));
        if (!require_connected || is_connected(h)) return h;
    }
    throw std::runtime_error("no connected sample found after " + std::to_string(max_attempts) +
                             " attempts; increase m or drop the connectivity requirement");
}

// --- 2-design recognition ------------------------------------------------

struct DesignParams {
    int b = 0;       // number of blocks (edges)
    int r = 0;       // common degree
    int lambda = 0;  // common pair codegree
};

// A 2-(n, k, lambda) design: every vertex in exactly r edges, every vertex
// pair in exactly lambda.  Returns nullopt when either count varies.
inline std::optional<DesignParams> check_two_design(const Hypergraph& h) {
    if (h.edge_count() == 0) return std::nullopt;
    if (h.n() < 2) return std::nullopt;
    const DegreeProfile p = degree_profile(h);
    if (p.min_degree != p.max_degree) return std::nullopt;
    std::vector<int> codeg(static_cast<std::size_t>(h.n()) * static_cast<std::size_t>(h.n()), 0);
    for (const Edge& e : h.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                ++codeg[static_cast<std::size_t>(e[i] - 1) * static_cast<std::size_t>(h.n()) +
                        static_cast<std::size_t>(e[j] - 1)];
    int lambda = codeg[1];  // pair (1,2)
    for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v)
            if (codeg[static_cast<std::size_t>(u) * static_cast<std::size_t>(h.n()) +
                      static_cast<std::size_t>(v)] != lambda)
                return std::nullopt;
    if (lambda == 0) return std::nullopt;  // would need m = 0
    return DesignParams{h.edge_count(), p.min_degree, lambda};
}

// --- .khg serialization ---------------------------------------------------
//
// Text format, LF line endings:
//   khg 1          header with format version
//   n k            vertex count, uniformity
//   v1 v2 ... vk   one edge per line, ascending ids
// Lines starting with '#' are comments; blank lines are ignored.  The
// reader rejects rather than repairs: duplicate edges, out-of-range ids,
// wrong arity and malformed tokens are all hard errors.

namespace detail {

inline std::vector<long long> parse_int_line(const std::string& line, int lineno) {
    std::istringstream iss(line);
    std::vector<long long> out;
    std::string tok;
    while (iss >> tok) {
        try {
            std::size_t pos = 0;
            const long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("trailing characters");
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(lineno, "invalid integer token '" + tok + "'");
        }
    }
    return out;
}

}  // namespace detail

inline Hypergraph parse_khg(std::istream& in) {
    std::string line;
    int lineno = 0;
    int stage = 0;  // 0: expect header, 1: expect dimensions, 2: edges
    int n = 0, k = 0;
    std::vector<std::pair<Edge, int>> edges_with_lines;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            throw ParseError(lineno, "carriage return found; .khg files use LF line endings");
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;           // blank
        if (line[first] == '#') continue;                   // comment
        if (stage == 0) {
            std::istringstream iss(line);
            std::string word, version, extra;
            iss >> word >> version;
            if (word != "khg" || version != "1" || (iss >> extra))
                throw ParseError(lineno, "malformed header: expected 'khg 1'");
            stage = 1;
        } else if (stage == 1) {
            const auto vals = detail::parse_int_line(line, lineno);
            if (vals.size() != 2)
                throw ParseError(lineno, "expected two integers: vertex count and uniformity");
            if (vals[0] < 1 || vals[0] > 1000000)
                throw ParseError(lineno, "vertex count out of range");
            if (vals[1] < 2 || vals[1] > 1000000)
                throw ParseError(lineno, "uniformity must be an integer >= 2");
            n = static_cast<int>(vals[0]);
            k = static_cast<int>(vals[1]);
            stage = 2;
        } else {
            const auto vals = detail::parse_int_line(line, lineno);
            if (static_cast<int>(vals.size()) != k)
                throw ParseError(lineno, "edge has " + std::to_string(vals.size()) +
                                             " vertices, expected " + std::to_string(k));
            Edge e;
            e.reserve(vals.size());
            for (long long v : vals) {
                if (v < 1 || v > n)
                    throw ParseError(lineno, "vertex id " + std::to_string(v) + " outside [1, " +
                                                 std::to_string(n) + "]");
                e.push_back(static_cast<int>(v));
            }
            std::sort(e.begin(), e.end());
            for (std::size_t i = 1; i < e.size(); ++i)
                if (e[i] == e[i - 1])
                    throw ParseError(lineno, "repeated vertex " + std::to_string(e[i]) + " in edge");
            edges_with_lines.emplace_back(std::move(e), lineno);
        }
    }
    if (stage < 2) throw ParseError(0, "unexpected end of file before dimensions line");
    std::stable_sort(edges_with_lines.begin(), edges_with_lines.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Edge> edges;
    edges.reserve(edges_with_lines.size());
    for (std::size_t i = 0; i < edges_with_lines.size(); ++i) {
        if (i > 0 && edges_with_lines[i].first == edges_with_lines[i - 1].first)
            throw ParseError(edges_with_lines[i].second, "duplicate edge");
        edges.push_back(edges_with_lines[i].first);
    }
    return Hypergraph(n, k, std::move(edges));
}

inline Hypergraph parse_khg_string(const std::string& text) {
    std::istringstream iss(text);
    return parse_khg(iss);
}

inline std::string serialize_khg(const Hypergraph& h) {
    std::string out = "khg 1\n" + std::to_string(h.n()) + " " + std::to_string(h.k()) + "\n";
    for (const Edge& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace anacon
