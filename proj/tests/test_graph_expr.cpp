#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "giclass/errors.hpp"
#include "giclass/expr.hpp"
#include "giclass/graph.hpp"
#include "giclass/iso.hpp"
#include "test_support.hpp"

using namespace giclass;

TEST_CASE("parse and print round-trip") {
    for (const char* s : {"P4", "K1", "I3", "C5", "P4+K1", "K2+I2", "co(P4+K1)",
                          "co(P6)", "P3+co(K2+I2)", "co(co(P4))"}) {
        GraphExpr e = parse_expr(s);
        CHECK(print_expr(e) == s);
        CHECK(parse_expr(print_expr(e)) == e);
    }
}

TEST_CASE("parser accepts flexible spacing") {
    CHECK(parse_expr(" P4 + K1 ") == parse_expr("P4+K1"));
    CHECK(parse_expr("co( P4 )") == parse_expr("co(P4)"));
}

TEST_CASE("parser rejects malformed expressions") {
    for (const char* s : {"", "P", "P0", "Q4", "P4+", "+P4", "co(P4", "co()", "coP4",
                          "P4 K1", "P4+K1)", "P-4", "C2"}) {
        CAPTURE(s);
        CHECK_THROWS_AS(parse_expr(s), ParseError);
    }
}

TEST_CASE("factories build the advertised shapes") {
    CHECK(GraphExpr::path(4).vertex_count() == 4);
    CHECK(GraphExpr::union_of({GraphExpr::path(2), GraphExpr::complete(3)}).vertex_count() == 5);
    // union_of flattens nested unions
    GraphExpr nested = GraphExpr::union_of(
        {GraphExpr::union_of({GraphExpr::path(2), GraphExpr::path(3)}), GraphExpr::path(1)});
    CHECK(nested == parse_expr("P2+P3+P1"));
}

TEST_CASE("realize produces the named graphs") {
    Graph p4 = realize(parse_expr("P4"));
    CHECK(p4.n() == 4);
    CHECK(p4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    Graph k3 = realize(parse_expr("K3"));
    CHECK(k3.edge_count() == 3);

    CHECK(realize(parse_expr("I4")).edge_count() == 0);

    Graph c5 = realize(parse_expr("C5"));
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    Graph u = realize(parse_expr("K2+I2"));
    CHECK(u.n() == 4);
    CHECK(u.edges() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("realize of co() is the exact complement, not merely isomorphic") {
    for (const char* s : {"P4", "P4+K1", "K3+C5", "co(P3)+K2"}) {
        GraphExpr e = parse_expr(s);
        CHECK(realize(GraphExpr::complement_of(e)) == complement(realize(e)));
    }
    CHECK(realize(parse_expr("co(co(P5))")) == realize(parse_expr("P5")));
}

TEST_CASE("known complements of the exception-set members") {
    // co(P4+K1) is the gem: P4 plus a vertex adjacent to all of it.
    GraphBuilder gem(5);
    gem.add_edge(0, 1);
    gem.add_edge(1, 2);
    gem.add_edge(2, 3);
    for (int v = 0; v < 4; ++v) gem.add_edge(v, 4);
    CHECK(testsupport::perm_iso(realize(parse_expr("co(P4+K1)")), std::move(gem).build()));

    // co(K2+I2) is the diamond: K4 minus one edge.
    CHECK(testsupport::perm_iso(realize(parse_expr("co(K2+I2)")),
                                Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})));

    // co(P3+K1) is the paw: a triangle with a pendant vertex.
    CHECK(testsupport::perm_iso(realize(parse_expr("co(P3+K1)")),
                                Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})));
}

TEST_CASE("normalized flattens and orders unions") {
    CHECK(normalized(parse_expr("K1+P4")) == normalized(parse_expr("P4+K1")));
    CHECK(normalized(parse_expr("P2+P3+P2")) == normalized(parse_expr("P3+P2+P2")));
    CHECK(print_expr(normalized(parse_expr("K1+P4"))) == print_expr(normalized(parse_expr("P4+K1"))));
    CHECK_FALSE(normalized(parse_expr("P4+K1")) == normalized(parse_expr("P4+K2")));
}

TEST_CASE("the path-union-complement catalog") {
    std::vector<GraphExpr> cat = enumerate_path_union_complements(7, 3);
    CHECK(static_cast<int>(cat.size()) == testsupport::count_path_partitions(7, 3));
    CHECK(cat.size() == 30);

    std::set<std::string> canons;
    for (const GraphExpr& e : cat) {
        Graph g = realize(e);
        CHECK(g.n() <= 7);
        canons.insert(canonical_form_small(g));
    }
    CHECK(canons.size() == 30);  // pairwise non-isomorphic

    CHECK(enumerate_path_union_complements(4, 2).size() == 8);
    CHECK(static_cast<int>(enumerate_path_union_complements(6, 12).size()) ==
          testsupport::count_path_partitions(6, 12));
    CHECK(enumerate_path_union_complements(1, 1).size() == 1);
    CHECK_THROWS_AS(enumerate_path_union_complements(0, 3), InvalidArgument);
    CHECK_THROWS_AS(enumerate_path_union_complements(7, 0), InvalidArgument);
}

TEST_CASE("exception set holds exactly the three known pairs' left sides") {
    std::vector<GraphExpr> exc = exception_set();
    REQUIRE(exc.size() == 3);
    std::set<std::string> printed;
    for (const GraphExpr& e : exc) printed.insert(print_expr(e));
    CHECK(printed == std::set<std::string>{"P4+K1", "K2+I2", "P3+I2"});
}

TEST_CASE("is_basic means complete or edgeless") {
    CHECK(is_basic(realize(parse_expr("K1"))));
    CHECK(is_basic(realize(parse_expr("K5"))));
    CHECK(is_basic(realize(parse_expr("I4"))));
    CHECK(is_basic(Graph(0, {})));
    CHECK_FALSE(is_basic(realize(parse_expr("P3"))));
    CHECK_FALSE(is_basic(realize(parse_expr("K2+K1"))));
    CHECK_FALSE(is_basic(realize(parse_expr("C4"))));
}

TEST_CASE("vertex_count agrees with realization") {
    for (const char* s : {"P7", "co(P4+K1)", "K3+I2+C4"})
        CHECK(parse_expr(s).vertex_count() == realize(parse_expr(s)).n());
}
