#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "anacon/hypergraph.hpp"

using namespace anacon;

TEST_CASE("binomial coefficients", "[hypergraph]") {
    REQUIRE(binomial_u64(0, 0) == 1);
    REQUIRE(binomial_u64(5, 0) == 1);
    REQUIRE(binomial_u64(7, 3) == 35);
    REQUIRE(binomial_u64(6, 6) == 1);
    REQUIRE(binomial_u64(3, 5) == 0);
    REQUIRE(binomial_u64(-1, 0) == 0);
    REQUIRE(binomial_u64(64, 32) == 1832624140942590534ull);
    // C(100,50) ~ 1e29 does not fit; the function saturates instead of wrapping
    REQUIRE(binomial_u64(100, 50) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("subset unranking is lexicographic", "[hypergraph]") {
    const std::vector<Edge> expected = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    for (std::uint64_t r = 0; r < 6; ++r) REQUIRE(unrank_subset(r, 4, 2) == expected[r]);
    REQUIRE(unrank_subset(0, 5, 5) == Edge{1, 2, 3, 4, 5});
    REQUIRE_THROWS_AS(unrank_subset(6, 4, 2), std::invalid_argument);
}

TEST_CASE("constructor enforces canonical form", "[hypergraph]") {
    REQUIRE_NOTHROW(Hypergraph(4, 3, {{1, 2, 3}, {1, 2, 4}}));
    REQUIRE_NOTHROW(Hypergraph(3, 5, {}));  // k > n is fine when edgeless
    REQUIRE_THROWS_AS(Hypergraph(0, 2, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(Hypergraph(4, 1, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(Hypergraph(4, 3, {{1, 2}}), std::invalid_argument);          // arity
    REQUIRE_THROWS_AS(Hypergraph(4, 3, {{1, 2, 5}}), std::invalid_argument);       // range
    REQUIRE_THROWS_AS(Hypergraph(4, 3, {{1, 3, 2}}), std::invalid_argument);       // order
    REQUIRE_THROWS_AS(Hypergraph(4, 3, {{1, 2, 2}}), std::invalid_argument);       // repeat
    REQUIRE_THROWS_AS(Hypergraph(4, 3, {{1, 2, 4}, {1, 2, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Hypergraph(4, 3, {{1, 2, 3}, {1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("canonicalized sorts but refuses duplicates", "[hypergraph]") {
    const Hypergraph h = Hypergraph::canonicalized(4, 3, {{4, 2, 1}, {3, 2, 1}});
    REQUIRE(h.edges() == std::vector<Edge>{{1, 2, 3}, {1, 2, 4}});
    REQUIRE_NOTHROW(validate(h));
    REQUIRE_THROWS_AS(Hypergraph::canonicalized(4, 3, {{3, 2, 1}, {1, 2, 3}}),
                      std::invalid_argument);
}

TEST_CASE("degree profile and handshake identity", "[hypergraph]") {
    const Hypergraph fano = gen_fano();
    const DegreeProfile p = degree_profile(fano);
    REQUIRE(p.min_degree == 3);
    REQUIRE(p.max_degree == 3);
    REQUIRE(p.average == Catch::Approx(3.0));

    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const Hypergraph h = gen_random(8, 3, 9, seed);
        const DegreeProfile q = degree_profile(h);
        long long total = 0;
        for (int d : q.degrees) total += d;
        REQUIRE(total == static_cast<long long>(h.k()) * h.edge_count());
    }
}

TEST_CASE("components and connectivity", "[hypergraph]") {
    const Hypergraph two(7, 3, {{1, 2, 3}, {4, 5, 6}});
    const auto comps = components(two);
    REQUIRE(comps == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}, {7}});
    REQUIRE_FALSE(is_connected(two));
    REQUIRE(is_connected(gen_complete(4, 3)));
    REQUIRE(is_connected(Hypergraph(1, 2, {})));
}

TEST_CASE("diameter of the 2-section", "[hypergraph]") {
    REQUIRE(diameter(Hypergraph(1, 2, {})) == 0);
    REQUIRE(diameter(gen_fano()) == 1);
    REQUIRE(diameter(Hypergraph(3, 2, {{1, 2}, {2, 3}})) == 2);
    REQUIRE_FALSE(diameter(Hypergraph(7, 3, {{1, 2, 3}, {4, 5, 6}})).has_value());
}

TEST_CASE("diameter one exactly when every pair shares an edge", "[hypergraph]") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const Hypergraph h = gen_random(6, 3, 3 + static_cast<int>(seed % 14), seed);
        const auto d = diameter(h);
        if (!d) continue;
        std::vector<std::vector<char>> together(7, std::vector<char>(7, 0));
        for (const Edge& e : h.edges())
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::size_t j = i + 1; j < e.size(); ++j)
                    together[static_cast<std::size_t>(e[i])][static_cast<std::size_t>(e[j])] = 1;
        bool all_pairs = true;
        for (int u = 1; u <= 6; ++u)
            for (int v = u + 1; v <= 6; ++v)
                if (!together[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) all_pairs = false;
        REQUIRE((*d <= 1) == all_pairs);
    }
}

TEST_CASE("vertex removal relabels and drops touched edges", "[hypergraph]") {
    const Hypergraph h(4, 3, {{1, 2, 3}, {2, 3, 4}});
    const Hypergraph r = remove_vertices(h, {1});
    REQUIRE(r.n() == 3);
    REQUIRE(r.edges() == std::vector<Edge>{{1, 2, 3}});  // old {2,3,4}
    REQUIRE_NOTHROW(validate(r));

    const Hypergraph glued(6, 3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4},
                                  {3, 4, 5}, {3, 4, 6}, {3, 5, 6}, {4, 5, 6}});
    REQUIRE_FALSE(is_connected(remove_vertices(glued, {3, 4})));

    REQUIRE_THROWS_AS(remove_vertices(h, {0}), std::invalid_argument);
    REQUIRE_THROWS_AS(remove_vertices(h, {1, 2, 3, 4}), std::invalid_argument);
    // duplicates in the removal list are harmless
    REQUIRE(remove_vertices(h, {1, 1}).n() == 3);
}

TEST_CASE("complete generator", "[hypergraph]") {
    const Hypergraph h = gen_complete(4, 3);
    REQUIRE(h.edge_count() == 4);
    REQUIRE(h.edges() == std::vector<Edge>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    REQUIRE(gen_complete(6, 2).edge_count() == 15);
    REQUIRE_THROWS_AS(gen_complete(3, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_complete(30, 15), std::invalid_argument);  // size guard
}

TEST_CASE("random generator is deterministic and exact at the extremes", "[hypergraph]") {
    const Hypergraph a = gen_random(8, 3, 10, 42);
    const Hypergraph b = gen_random(8, 3, 10, 42);
    REQUIRE(a == b);
    REQUIRE(a.edge_count() == 10);
    REQUIRE_NOTHROW(validate(a));
    REQUIRE_FALSE(a == gen_random(8, 3, 10, 43));

    // asking for every edge must reproduce the complete hypergraph
    for (std::uint64_t seed : {0ull, 7ull, 99ull})
        REQUIRE(gen_random(4, 3, 4, seed) == gen_complete(4, 3));

    REQUIRE(gen_random(9, 4, 12, 5, true).edge_count() == 12);
    REQUIRE(is_connected(gen_random(9, 4, 12, 5, true)));
    REQUIRE_THROWS_AS(gen_random(4, 3, 5, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_random(6, 3, 0, 0, true), std::runtime_error);  // can't connect
}

TEST_CASE("two-design recognition", "[hypergraph]") {
    const auto fano = check_two_design(gen_fano());
    REQUIRE(fano.has_value());
    REQUIRE(fano->b == 7);
    REQUIRE(fano->r == 3);
    REQUIRE(fano->lambda == 1);

    const auto k4 = check_two_design(gen_complete(4, 3));
    REQUIRE(k4.has_value());
    REQUIRE(k4->lambda == 2);

    REQUIRE_FALSE(check_two_design(Hypergraph(3, 2, {{1, 2}, {2, 3}})).has_value());
    REQUIRE_FALSE(check_two_design(Hypergraph(4, 3, {})).has_value());

    // every complete hypergraph is a 2-design with lambda = C(n-2, k-2)
    for (int n = 2; n <= 8; ++n)
        for (int k = 2; k <= n; ++k) {
            const auto d = check_two_design(gen_complete(n, k));
            REQUIRE(d.has_value());
            REQUIRE(d->lambda == static_cast<int>(binomial_u64(n - 2, k - 2)));
        }
}

TEST_CASE("khg round trip", "[hypergraph]") {
    const Hypergraph h = gen_random(7, 3, 8, 9);
    const Hypergraph back = parse_khg_string(serialize_khg(h));
    REQUIRE(back == h);
    REQUIRE(serialize_khg(gen_complete(4, 3)) ==
            "khg 1\n4 3\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
}

TEST_CASE("khg reader accepts comments, blanks and unsorted edges", "[hypergraph]") {
    const std::string text =
        "# generated for a unit test\n"
        "khg 1\n"
        "\n"
        "4 3\n"
        "3 2 1\n"
        "  # interior comment\n"
        "2 4 3\n";
    const Hypergraph h = parse_khg_string(text);
    REQUIRE(h.n() == 4);
    REQUIRE(h.edges() == std::vector<Edge>{{1, 2, 3}, {2, 3, 4}});

    // k > n parses when no edge follows
    const Hypergraph tall = parse_khg_string("khg 1\n2 5\n");
    REQUIRE(tall.n() == 2);
    REQUIRE(tall.k() == 5);
    REQUIRE(tall.edge_count() == 0);
}

namespace {
int khg_error_line(const std::string& text) {
    try {
        parse_khg_string(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}
}  // namespace

TEST_CASE("khg reader rejects malformed input with line numbers", "[hypergraph]") {
    REQUIRE(khg_error_line("khg 2\n3 2\n") == 1);
    REQUIRE(khg_error_line("khg 1 x\n3 2\n") == 1);
    REQUIRE(khg_error_line("khg 1\n3\n") == 2);
    REQUIRE(khg_error_line("khg 1\n0 2\n") == 2);
    REQUIRE(khg_error_line("khg 1\n3 1\n") == 2);
    REQUIRE(khg_error_line("khg 1\n3 2\n1 2\n1 2 3\n") == 4);   // arity
    REQUIRE(khg_error_line("khg 1\n3 2\n1 4\n") == 3);          // range
    REQUIRE(khg_error_line("khg 1\n3 2\n1 1\n") == 3);          // repeated vertex
    REQUIRE(khg_error_line("khg 1\n3 2\n1 2\n2 1\n") == 4);     // duplicate edge
    REQUIRE(khg_error_line("khg 1\n3 2\n1 2x\n") == 3);         // bad token
    REQUIRE(khg_error_line("khg 1\n3 2\r\n1 2\n") == 2);        // CRLF
    REQUIRE(khg_error_line("khg 1\n") == 0);                    // truncated
    REQUIRE(khg_error_line("") == 0);
}
