#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "giclass/classify.hpp"
#include "giclass/errors.hpp"
#include "giclass/expr.hpp"
#include "giclass/graph.hpp"
#include "giclass/subgraph.hpp"
#include "test_support.hpp"

using namespace giclass;

namespace {

Graph make(const char* expr) { return realize(parse_expr(expr)); }

ForbiddenPair pair_of(const char* a, const char* b) {
    return ForbiddenPair(parse_expr(a), parse_expr(b));
}

ClassificationStatus classify_pair(const char* a, const char* b) {
    return classify(pair_of(a, b));
}

}  // namespace

TEST_CASE("status rendering") {
    CHECK(to_string(StatusKind::GIComplete) == "GIComplete");
    ClassificationStatus s{StatusKind::Polynomial, "cograph", "x"};
    CHECK(to_string(s) == "Polynomial(cograph)");
    ClassificationStatus o{StatusKind::Open, "", "y"};
    CHECK(to_string(o) == "Open");
}

TEST_CASE("forbidden pairs are unordered and normalized") {
    CHECK(pair_of("P4", "K2+I2") == pair_of("K2+I2", "P4"));
    CHECK(pair_of("K1+P4", "K3") == pair_of("P4+K1", "K3"));
    CHECK(print_expr(pair_of("P4", "K3").h1) == print_expr(pair_of("K3", "P4").h1));
}

TEST_CASE("basic forbidden graphs put the pair out of scope") {
    for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"K3", "P4"}, {"P4", "K3"}, {"I2", "C5"}, {"K1", "K1"}, {"P5", "I4"}}) {
        ClassificationStatus s = classify_pair(a, b);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(s.kind == StatusKind::Unknown);
        CHECK(s.source == "basic case; out of scope");
    }
    CHECK(classify_pair("P4", "C5").kind != StatusKind::Unknown);
}

TEST_CASE("cograph rows match through the wildcard") {
    for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"P4", "C5"}, {"C5", "P4"}, {"P3", "C6"}, {"K2+K1", "C5"}, {"P4", "P4"}}) {
        ClassificationStatus s = classify_pair(a, b);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(s.kind == StatusKind::Polynomial);
        CHECK(s.method == "cograph");
        CHECK(s.source == "thm:p4-free-canonical");
    }
}

TEST_CASE("table rows match up to isomorphism, not expression spelling") {
    // co(co(P4)) realizes to the exact P4; a relabeled spelling of the paw
    // pair must hit the bothsplit row all the same.
    CHECK(classify_pair("co(co(P4))", "C7").method == "cograph");
    ClassificationStatus s = classify_pair("co(P3+K1)", "K1+P3");
    CHECK(s.kind == StatusKind::Polynomial);
    CHECK(s.method == "bothsplit");
    CHECK(s.source == "thm:split-pair-decomposition");
}

TEST_CASE("the known-polynomial exception pair routes to rao") {
    ClassificationStatus s = classify_pair("P4+K1", "co(P4+K1)");
    CHECK(s.kind == StatusKind::Polynomial);
    CHECK(s.method == "rao");
    CHECK(s.source == "rao:modular-decomposition-preprint");
}

TEST_CASE("exception region against the big path complements is settled") {
    for (const char* exc : {"P4+K1", "K2+I2", "P3+I2"})
        for (const char* big : {"co(P6)", "co(P7)"}) {
            ClassificationStatus s = classify_pair(exc, big);
            CAPTURE(exc);
            CAPTURE(big);
            CHECK(s.kind == StatusKind::GIComplete);
            CHECK(s.source == "reduction:co-p6-co-p7-variants");
        }
}

TEST_CASE("region pairs under the known polynomial case stay polynomial") {
    // The paw is an induced subgraph of both P4+K1's complement-side pattern
    // and the gem, so forbidding it alongside P4+K1 is a subclass of the
    // settled case.
    ClassificationStatus s = classify_pair("P4+K1", "co(P3+K1)");
    CHECK(s.kind == StatusKind::Polynomial);
    CHECK(s.method == "rao");
    CHECK(s.source == "rao:modular-decomposition-preprint; interpretation:subclass-inclusion");
}

TEST_CASE("region pairs outside the subclass stay open") {
    ClassificationStatus s = classify_pair("K2+I2", "co(P3+P3)");
    CHECK(s.kind == StatusKind::Open);
    CHECK(s.source == "region:unresolved");
}

TEST_CASE("everything else defaults to GI-complete") {
    for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"C5", "C5"}, {"C4+K1", "C7"}, {"P5", "P5"}, {"co(P6)", "co(P7)"}}) {
        ClassificationStatus s = classify_pair(a, b);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(s.kind == StatusKind::GIComplete);
        CHECK(s.source == "dichotomy:gi-complete-default");
    }
}

TEST_CASE("classification is invariant under swap and double complement") {
    std::vector<std::pair<const char*, const char*>> pairs{
        {"P4", "C5"},          {"P4+K1", "co(P4+K1)"}, {"K2+I2", "co(P6)"},
        {"C5", "C5"},          {"P3+I2", "co(P3+P3)"}, {"P4+K1", "co(P3+K1)"},
        {"co(P3+K1)", "P3+K1"}};
    for (auto [a, b] : pairs) {
        Graph g1 = make(a), g2 = make(b);
        ClassificationStatus s = classify_graphs(g1, g2);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(classify_graphs(g2, g1) == s);
        CHECK(classify_graphs(complement(g1), complement(g2)) == s);
        CHECK(classify_graphs(complement(g2), complement(g1)) == s);
    }
}

TEST_CASE("classify_graphs matches classify on realizations") {
    ForbiddenPair p = pair_of("P3+K1", "co(P3+K1)");
    CHECK(classify_graphs(make("P3+K1"), make("co(P3+K1)")) == classify(p));
}

TEST_CASE("exhaustive sweep: every small pair gets a definite, lawful answer") {
    // Over all graph pairs on up to 4 vertices: never Unknown unless basic,
    // Open only with the region source, and each Polynomial/GIComplete
    // answer carries a provenance tag.
    std::vector<Graph> reps;
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : testsupport::iso_classes(n)) reps.push_back(g);
    for (const Graph& a : reps)
        for (const Graph& b : reps) {
            ClassificationStatus s = classify_graphs(a, b);
            CAPTURE(encode_graph6(a));
            CAPTURE(encode_graph6(b));
            if (is_basic(a) || is_basic(b)) {
                CHECK(s.kind == StatusKind::Unknown);
                continue;
            }
            CHECK(s.kind != StatusKind::Unknown);
            CHECK_FALSE(s.source.empty());
            if (s.kind == StatusKind::Open) CHECK(s.source == "region:unresolved");
            if (s.kind == StatusKind::Polynomial) CHECK_FALSE(s.method.empty());
        }
}

TEST_CASE("the embedded table text and the data file are byte-identical") {
    std::ifstream in(GICLASS_TABLE_FILE, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == std::string(embedded_classification_table_text()));
}

TEST_CASE("embedded table parses to the expected shape") {
    const ClassificationTable& t = ClassificationTable::embedded();
    REQUIRE(t.rows().size() == 11);
    int wildcard = 0, poly = 0, gic = 0;
    for (const TableRow& r : t.rows()) {
        if (r.pattern2 == "*") {
            ++wildcard;
            CHECK_FALSE(r.expr2.has_value());
        }
        if (r.status.kind == StatusKind::Polynomial) ++poly;
        if (r.status.kind == StatusKind::GIComplete) ++gic;
        CHECK(r.line > 0);
    }
    CHECK(wildcard == 3);
    CHECK(poly == 5);
    CHECK(gic == 6);
}

TEST_CASE("table parsing accepts comments and rejects malformed rows") {
    CHECK(ClassificationTable::parse("# nothing but comments\n\n").rows().empty());
    ClassificationTable one = ClassificationTable::parse(
        "# header\nP5\t*\tpolynomial:cograph\tcustom:test # trailing note\n");
    REQUIRE(one.rows().size() == 1);
    CHECK(one.rows()[0].status.method == "cograph");
    CHECK(one.rows()[0].status.source == "custom:test");

    CHECK_THROWS_AS(ClassificationTable::parse("P5\t*\tpolynomial:cograph\n"), ParseError);
    CHECK_THROWS_AS(ClassificationTable::parse("P5\t*\tmagic\tsrc\n"), ParseError);
    CHECK_THROWS_AS(ClassificationTable::parse("P5\t*\tgi-complete\tsrc\n"), ParseError);
    CHECK_THROWS_AS(ClassificationTable::parse("*\t*\tpolynomial:cograph\tsrc\n"), ParseError);
    CHECK_THROWS_AS(ClassificationTable::parse("Q9\tP4\tgi-complete\tsrc\n"), ParseError);
    CHECK_THROWS_WITH_AS(ClassificationTable::parse("P4\tP4\tgi-complete\tsrc\nbroken\n"),
                         doctest::Contains("line"), ParseError);
}

TEST_CASE("a custom table changes the verdicts") {
    ClassificationTable t =
        ClassificationTable::parse("C5\t*\tpolynomial:cograph\tcustom:test\n");
    ClassificationStatus s = classify(pair_of("C5", "C5"), t);
    CHECK(s.kind == StatusKind::Polynomial);
    CHECK(s.source == "custom:test");
    // Absent its usual row, the rao pair falls back to the region logic and
    // still comes out polynomial, via the subclass rule.
    ClassificationStatus rao = classify(pair_of("P4+K1", "co(P4+K1)"), t);
    CHECK(rao.kind == StatusKind::Polynomial);
    CHECK(rao.method == "rao");
    CHECK(rao.source == "rao:modular-decomposition-preprint; interpretation:subclass-inclusion");
}

TEST_CASE("load_file reports missing files") {
    CHECK_THROWS_AS(ClassificationTable::load_file("/nonexistent/table.tsv"), Error);
}

TEST_CASE("dispatch routes cograph classes to the cotree algorithm") {
    std::mt19937_64 rng(51);
    std::vector<int> p(10);
    std::iota(p.begin(), p.end(), 0);
    Graph a = make("co(K2+K2+K1)+K2+K3");
    REQUIRE(a.n() == 10);
    std::shuffle(p.begin(), p.end(), rng);
    Graph b = apply_permutation(a, p);
    DispatchResult d = iso_in_class(pair_of("P4", "C5"), a, b);
    CHECK(d.status.method == "cograph");
    CHECK_FALSE(d.oracle_answered);
    REQUIRE(d.result);
    REQUIRE(d.result->isomorphic());
    CHECK(is_isomorphism(a, b, *d.result->mapping));
}

TEST_CASE("dispatch routes the paw pair to the split algorithm") {
    // K3 and P3 are both (P3+K1)-free and paw-free.
    DispatchResult d = iso_in_class(pair_of("P3+K1", "co(P3+K1)"), make("K3"), make("P3"));
    CHECK(d.status.method == "bothsplit");
    CHECK_FALSE(d.oracle_answered);
    REQUIRE(d.result);
    CHECK_FALSE(d.result->isomorphic());
}

TEST_CASE("dispatch falls back to the oracle with the flag raised") {
    DispatchResult d = iso_in_class(pair_of("C5", "C5"), make("P4"), make("K1+K3"));
    CHECK(d.status.kind == StatusKind::GIComplete);
    CHECK(d.oracle_answered);
    REQUIRE(d.result);
    CHECK_FALSE(d.result->isomorphic());
}

TEST_CASE("dispatch refuses oversized oracle cases instead of hanging") {
    GraphBuilder b(kOracleSoftBound + 1);
    for (int v = 0; v + 1 < kOracleSoftBound + 1; ++v) b.add_edge(v, v + 1);
    Graph long_path = std::move(b).build();  // paths are C5-free
    DispatchResult d = iso_in_class(pair_of("C5", "C5"), long_path, long_path);
    CHECK_FALSE(d.result);
    REQUIRE(d.refusal);
    CHECK(d.refusal->find("20") != std::string::npos);
    CHECK_FALSE(d.oracle_answered);
}

TEST_CASE("dispatch rejects non-members with a located witness") {
    try {
        iso_in_class(pair_of("P4", "C5"), make("P5"), make("P5"));
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        REQUIRE(e.witness);
        CHECK(e.witness->size() == 4);  // the P4 inside P5
    }
}

TEST_CASE("the rao row is dispatched to the oracle under its own flag") {
    // Table-classified polynomial, but the specialized algorithm is not
    // shipped; small members still get exact answers, flagged.
    Graph a = make("C4");  // gem-free and (P4+K1)-free
    DispatchResult d = iso_in_class(pair_of("P4+K1", "co(P4+K1)"), a, a);
    CHECK(d.status.method == "rao");
    CHECK(d.oracle_answered);
    REQUIRE(d.result);
    CHECK(d.result->isomorphic());
}

TEST_CASE("bothsplit_iso demands a bothsplit pair") {
    CHECK_THROWS_AS(bothsplit_iso(make("K3"), make("K3"), pair_of("P4", "C5")), DispatchError);
    IsoResult r = bothsplit_iso(make("K3"), make("K3"), pair_of("P3+K1", "co(P3+K1)"));
    CHECK(r.isomorphic());
}

TEST_CASE("bothsplit_iso agrees with permutation search on class members") {
    ForbiddenPair p = pair_of("P3+K1", "co(P3+K1)");
    ClassSpec spec({p.h1, p.h2});
    std::vector<Graph> members;
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : testsupport::iso_classes(n))
            if (is_member(g, spec)) members.push_back(g);
    REQUIRE(members.size() > 10);
    for (const Graph& a : members)
        for (const Graph& b : members) {
            bool expect = testsupport::perm_iso(a, b).has_value();
            IsoResult r = bothsplit_iso(a, b, p);
            CAPTURE(encode_graph6(a));
            CAPTURE(encode_graph6(b));
            CHECK(r.isomorphic() == expect);
            if (expect) CHECK(is_isomorphism(a, b, *r.mapping));
        }
}
