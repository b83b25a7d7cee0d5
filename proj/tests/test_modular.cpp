#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "giclass/errors.hpp"
#include "giclass/expr.hpp"
#include "giclass/graph.hpp"
#include "giclass/modular.hpp"
#include "test_support.hpp"

using namespace giclass;

namespace {

Graph make(const char* expr) { return realize(parse_expr(expr)); }

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> p(g.n());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return apply_permutation(g, p);
}

Graph random_graph(int n, std::mt19937_64& rng) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) b.add_edge(u, v);
    return std::move(b).build();
}

int count_leaves(const MDTree& t, int node) {
    const MDNode& nd = t.nodes[static_cast<std::size_t>(node)];
    if (nd.tag == MDNode::Tag::Leaf) return 1;
    int total = 0;
    for (int c : nd.children) total += count_leaves(t, c);
    return total;
}

}  // namespace

TEST_CASE("decomposition roots match the graph's structure") {
    MDTree p4 = modular_decomposition(make("P4"));
    REQUIRE(p4.root >= 0);
    CHECK(p4.nodes[static_cast<std::size_t>(p4.root)].tag == MDNode::Tag::Prime);
    CHECK(p4.nodes[static_cast<std::size_t>(p4.root)].children.size() == 4);
    CHECK(p4.nodes[static_cast<std::size_t>(p4.root)].quotient.n() == 4);

    MDTree k3 = modular_decomposition(make("K3"));
    CHECK(k3.nodes[static_cast<std::size_t>(k3.root)].tag == MDNode::Tag::Join);

    MDTree i3 = modular_decomposition(make("I3"));
    CHECK(i3.nodes[static_cast<std::size_t>(i3.root)].tag == MDNode::Tag::Union);

    MDTree c5 = modular_decomposition(make("C5"));
    CHECK(c5.nodes[static_cast<std::size_t>(c5.root)].tag == MDNode::Tag::Prime);

    // Duplicating a C5 vertex as a true twin makes {4,5} a module: the
    // quotient stays the prime C5 while that child becomes a Join node.
    Graph blown(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 5}, {3, 5}, {0, 5}});
    MDTree bt = modular_decomposition(blown);
    const MDNode& root = bt.nodes[static_cast<std::size_t>(bt.root)];
    CHECK(root.tag == MDNode::Tag::Prime);
    CHECK(root.children.size() == 5);
    CHECK(count_leaves(bt, bt.root) == 6);
}

TEST_CASE("every vertex appears exactly once as a leaf") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 9), rng);
        MDTree tree = modular_decomposition(g);
        std::vector<int> seen;
        for (const MDNode& nd : tree.nodes)
            if (nd.tag == MDNode::Tag::Leaf) seen.push_back(nd.vertex);
        std::sort(seen.begin(), seen.end());
        std::vector<int> want(static_cast<std::size_t>(g.n()));
        std::iota(want.begin(), want.end(), 0);
        CHECK(seen == want);
        CHECK(count_leaves(tree, tree.root) == g.n());
    }
}

TEST_CASE("canonical code is invariant under relabeling") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 10), rng);
        CHECK(md_canonical_code(g) == md_canonical_code(shuffled(g, rng)));
    }
}

TEST_CASE("code equality separates classes exactly on all 5-vertex graphs") {
    std::vector<Graph> reps = testsupport::iso_classes(5);
    REQUIRE(reps.size() == 34);
    std::set<std::string> codes;
    for (const Graph& g : reps) codes.insert(md_canonical_code(g));
    CHECK(codes.size() == 34);
}

TEST_CASE("md_iso agrees with permutation search on small pairs") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<Graph> reps = testsupport::iso_classes(n);
        for (const Graph& a : reps)
            for (const Graph& b : reps) {
                bool expect = testsupport::perm_iso(a, b).has_value();
                IsoResult r = md_iso(a, b);
                CAPTURE(encode_graph6(a));
                CAPTURE(encode_graph6(b));
                CHECK(r.isomorphic() == expect);
                if (expect) CHECK(is_isomorphism(a, b, *r.mapping));
            }
    }
}

TEST_CASE("md_iso handles graphs the small canon engine cannot take whole") {
    // 16 vertices in total, but every prime quotient stays tiny.
    std::mt19937_64 rng(29);
    Graph big = disjoint_union(make("co(P3+P3)"), complement(make("co(P3+P3)")));
    Graph big2 = disjoint_union(big, make("C4"));
    CHECK(big2.n() == 16);
    Graph other = shuffled(big2, rng);
    IsoResult r = md_iso(big2, other);
    REQUIRE(r.isomorphic());
    CHECK(is_isomorphism(big2, other, *r.mapping));
}

TEST_CASE("oversized prime quotients are refused, not mangled") {
    // C12 is prime: its only modules are trivial, so the quotient has 12
    // vertices, above the small-canon bound of 11.
    CHECK_THROWS_AS(md_canonical_code(make("C12")), UnsupportedSize);
    CHECK_NOTHROW(md_canonical_code(make("C11")));
}

TEST_CASE("split graphs flow through the modular route") {
    // Split pairs are the dispatch target for this code path; make sure a
    // typical split graph (clique 0..2, independents hung off it) works.
    Graph s(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
    std::mt19937_64 rng(37);
    CHECK(md_canonical_code(s) == md_canonical_code(shuffled(s, rng)));
    IsoResult r = md_iso(s, shuffled(s, rng));
    REQUIRE(r.isomorphic());
}
