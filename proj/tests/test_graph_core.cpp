#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "giclass/errors.hpp"
#include "giclass/graph.hpp"
#include "test_support.hpp"

using namespace giclass;

namespace {

Graph path(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return std::move(b).build();
}

Graph complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

Graph random_graph(int n, std::mt19937_64& rng) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) b.add_edge(u, v);
    return std::move(b).build();
}

}  // namespace

TEST_CASE("graph construction and accessors") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.adj(0, 1));
    CHECK(g.adj(1, 0));
    CHECK_FALSE(g.adj(0, 2));
    CHECK_FALSE(g.adj(2, 2));
    CHECK(g.degree(0) == 2);
    CHECK(g.neighbors(0) == std::vector<int>{1, 3});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    Graph h(4, {{2, 3}, {0, 3}, {1, 2}, {0, 1}});
    CHECK(g == h);
    CHECK(g != Graph(4, {{0, 1}}));
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph(-1, {}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
    CHECK_THROWS_AS(GraphBuilder(2).add_edge(0, 0), InvalidArgument);
}

TEST_CASE("builder tolerates repeated edges") {
    GraphBuilder b(3);
    b.add_edge(0, 1);
    b.add_edge(1, 0);
    b.add_edge(0, 1);
    Graph g = std::move(b).build();
    CHECK(g.edge_count() == 1);
}

TEST_CASE("degree_sequence is ascending") {
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}});
    CHECK(degree_sequence(g) == std::vector<int>{1, 1, 2, 2, 4});
}

TEST_CASE("complement flips every pair") {
    std::mt19937_64 rng(7);
    for (int n : {0, 1, 2, 5, 9}) {
        Graph g = random_graph(n, rng);
        Graph c = complement(g);
        REQUIRE(c.n() == n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) CHECK(c.adj(u, v) == !g.adj(u, v));
        CHECK(complement(c) == g);
    }
}

TEST_CASE("disjoint_union offsets the second operand") {
    Graph g = disjoint_union(complete(3), path(3));
    CHECK(g.n() == 6);
    CHECK(g.edge_count() == 5);
    CHECK(g.adj(0, 1));
    CHECK(g.adj(3, 4));
    CHECK_FALSE(g.adj(2, 3));
    CHECK(disjoint_union(Graph(0, {}), complete(2)) == complete(2));
}

TEST_CASE("induced_subgraph keeps exactly the selected pairs") {
    Graph g = path(5);
    CHECK(induced_subgraph(g, {0, 1, 2}) == path(3));
    CHECK(induced_subgraph(g, {0, 2, 4}) == Graph(3, {}));
    CHECK(induced_subgraph(g, {2, 1, 0}) == path(3));  // order defines new labels
    CHECK(induced_subgraph(g, {}) == Graph(0, {}));
    CHECK_THROWS_AS(induced_subgraph(g, {0, 0}), InvalidArgument);
    CHECK_THROWS_AS(induced_subgraph(g, {5}), InvalidArgument);
}

TEST_CASE("apply_permutation relabels consistently") {
    Graph g = path(4);
    std::vector<int> p{3, 1, 0, 2};  // mapping v -> p[v]
    Graph h = apply_permutation(g, p);
    VertexMapping m{p};
    CHECK(is_isomorphism(g, h, m));
    CHECK_THROWS_AS(apply_permutation(g, {0, 1, 2}), InvalidArgument);
    CHECK_THROWS_AS(apply_permutation(g, {0, 1, 2, 2}), InvalidArgument);
}

TEST_CASE("is_isomorphism validates the actual mapping") {
    Graph g = path(3);
    CHECK(is_isomorphism(g, g, VertexMapping{{0, 1, 2}}));
    CHECK(is_isomorphism(g, g, VertexMapping{{2, 1, 0}}));
    CHECK_FALSE(is_isomorphism(g, g, VertexMapping{{1, 0, 2}}));  // breaks the middle
    CHECK_FALSE(is_isomorphism(g, complete(3), VertexMapping{{0, 1, 2}}));
}

TEST_CASE("is_induced_embedding demands exact pair pattern") {
    Graph host = path(5);
    Graph pat = path(3);
    CHECK(is_induced_embedding(pat, host, VertexMapping{{0, 1, 2}}));
    CHECK_FALSE(is_induced_embedding(pat, host, VertexMapping{{0, 1, 3}}));
    // 0-2-4 is independent in P5, so the path pattern does not embed.
    CHECK_FALSE(is_induced_embedding(pat, host, VertexMapping{{0, 2, 4}}));
}

TEST_CASE("graph6 encodes the documented example") {
    CHECK(encode_graph6(complete(3)) == "Bw");
    CHECK(encode_graph6(Graph(0, {})) == "?");
    CHECK(encode_graph6(Graph(1, {})) == "@");
    CHECK(encode_graph6(Graph(2, {{0, 1}})) == "A_");
}

TEST_CASE("graph6 matches an independent encoder") {
    for (int n = 0; n <= 4; ++n)
        for (const Graph& g : testsupport::all_labeled(n))
            CHECK(encode_graph6(g) == testsupport::ref_graph6(g));
    std::mt19937_64 rng(99);
    for (int t = 0; t < 200; ++t) {
        int n = static_cast<int>(rng() % 33);
        Graph g = random_graph(n, rng);
        CHECK(encode_graph6(g) == testsupport::ref_graph6(g));
    }
}

TEST_CASE("graph6 round-trips, including multi-byte sizes") {
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : testsupport::all_labeled(n)) CHECK(decode_graph6(encode_graph6(g)) == g);
    std::mt19937_64 rng(3);
    for (int n : {62, 63, 64, 100}) {
        Graph g = random_graph(n, rng);
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("graph6 decode reports the failing byte") {
    CHECK_THROWS_AS(decode_graph6(""), ParseError);
    CHECK_THROWS_AS(decode_graph6("B"), ParseError);      // truncated body
    CHECK_THROWS_AS(decode_graph6("Bww"), ParseError);    // trailing data
    CHECK_THROWS_AS(decode_graph6("B\x20"), ParseError);  // byte below 63
    CHECK_THROWS_WITH_AS(decode_graph6("B"), doctest::Contains("offset"), ParseError);
    // Nonzero padding bits are corruption, not an alternate spelling.
    CHECK_THROWS_AS(decode_graph6("A~"), ParseError);
}

TEST_CASE("edge list codec round-trips and pins the format") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    std::string text = encode_edge_list(g);
    CHECK(text == "4 3\n0 1\n1 2\n2 3\n");
    CHECK(decode_edge_list(text) == g);
    CHECK(decode_edge_list("0 0\n") == Graph(0, {}));
    CHECK(decode_edge_list("\n2 1\n\n0 1\n \n") == Graph(2, {{0, 1}}));
}

TEST_CASE("edge list decode reports the failing line") {
    CHECK_THROWS_AS(decode_edge_list(""), ParseError);
    CHECK_THROWS_AS(decode_edge_list("2\n"), ParseError);
    CHECK_THROWS_AS(decode_edge_list("2 1\n0 1 9\n"), ParseError);
    CHECK_THROWS_AS(decode_edge_list("2 1\n0 2\n"), ParseError);
    CHECK_THROWS_AS(decode_edge_list("2 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(decode_edge_list("2 1\n0 1\n0 1\n"), ParseError);
    CHECK_THROWS_WITH_AS(decode_edge_list("3 1\n0 3\n"), doctest::Contains("line"), ParseError);
    // a non-numeric line is malformed, not blank; graph6 fed as an edge list must say so
    CHECK_THROWS_WITH_AS(decode_edge_list("Bw\n"), doctest::Contains("two integers"), ParseError);
    CHECK_THROWS_WITH_AS(decode_edge_list("2 1\nx y\n"), doctest::Contains("at line 2"), ParseError);
}

TEST_CASE("parse_graph auto-detects the format") {
    CHECK(parse_graph("Bw", GraphFormat::Auto) == complete(3));
    CHECK(parse_graph("3 2\n0 1\n1 2\n", GraphFormat::Auto) == path(3));
    CHECK(parse_graph("  Bw \n", GraphFormat::Auto) == complete(3));
    CHECK(parse_graph("Bw", GraphFormat::Graph6) == complete(3));
    CHECK_THROWS_AS(parse_graph("Bw", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("", GraphFormat::Auto), ParseError);
}

TEST_CASE("vertex mapping validity helpers") {
    VertexMapping m{{0, 2, 1}};
    CHECK(m.size() == 3);
    CHECK(m.injective());
    CHECK(m.within(3));
    CHECK_FALSE(m.within(2));
    CHECK_FALSE(VertexMapping{{0, 0}}.injective());
}
