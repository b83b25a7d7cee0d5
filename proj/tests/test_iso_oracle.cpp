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
#include "giclass/iso.hpp"
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

}  // namespace

TEST_CASE("color refinement reaches a stable partition") {
    Graph g = make("co(P4+K1)");  // gem: degrees 2,2,3,3,4
    Coloring c = color_refinement(g);
    REQUIRE(static_cast<int>(c.color.size()) == g.n());
    // Refining the stable coloring again changes nothing.
    Coloring c2 = color_refinement(g, c);
    CHECK(c2.color == c.color);
    // The apex is alone in its class; the two degree classes below split.
    std::set<int> colors(c.color.begin(), c.color.end());
    CHECK(colors.size() == 3);
}

TEST_CASE("color refinement cannot separate regular graphs") {
    Graph a = make("C6");
    Coloring c = color_refinement(a);
    CHECK(std::set<int>(c.color.begin(), c.color.end()).size() == 1);
}

TEST_CASE("brute force verdicts carry usable evidence") {
    SUBCASE("isomorphic pair yields a verified mapping") {
        std::mt19937_64 rng(4);
        Graph a = make("co(P3+P3)");
        Graph b = shuffled(a, rng);
        IsoResult r = brute_force_iso(a, b);
        REQUIRE(r.isomorphic());
        REQUIRE(r.mapping);
        CHECK(is_isomorphism(a, b, *r.mapping));
    }
    SUBCASE("C6 versus 2K3: same degrees, not isomorphic") {
        IsoResult r = brute_force_iso(make("C6"), make("K3+K3"));
        CHECK_FALSE(r.isomorphic());
        CHECK_FALSE(r.witness.empty());
    }
    SUBCASE("size and edge-count mismatches are cheap refusals") {
        CHECK_FALSE(brute_force_iso(make("P3"), make("P4")).isomorphic());
        CHECK_FALSE(brute_force_iso(make("K3"), make("I3")).isomorphic());
    }
    SUBCASE("empty graphs are isomorphic") {
        CHECK(brute_force_iso(Graph(0, {}), Graph(0, {})).isomorphic());
    }
}

TEST_CASE("brute force agrees with plain permutation search on all small pairs") {
    for (int n = 0; n <= 4; ++n) {
        std::vector<Graph> reps = testsupport::iso_classes(n);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i; j < reps.size(); ++j) {
                bool expect = testsupport::perm_iso(reps[i], reps[j]).has_value();
                IsoResult r = brute_force_iso(reps[i], reps[j]);
                CAPTURE(encode_graph6(reps[i]));
                CAPTURE(encode_graph6(reps[j]));
                CHECK(r.isomorphic() == expect);
                if (r.isomorphic()) CHECK(is_isomorphism(reps[i], reps[j], *r.mapping));
            }
    }
}

TEST_CASE("canonical form separates exactly the isomorphism classes") {
    // Counts pinned to the number of graphs on n unlabeled vertices.
    const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> forms;
        for (const Graph& g : testsupport::all_labeled(n)) forms.insert(canonical_form_small(g));
        CAPTURE(n);
        CHECK(forms.size() == expected[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("canonical form equality matches brute isomorphism pairwise") {
    for (int n = 0; n <= 4; ++n) {
        std::vector<Graph> reps = testsupport::iso_classes(n);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                CHECK(canonical_form_small(reps[i]) != canonical_form_small(reps[j]));
    }
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= kExactCanonicalMax; ++n)
        for (int t = 0; t < 20; ++t) {
            GraphBuilder b(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() & 1) b.add_edge(u, v);
            Graph g = std::move(b).build();
            CHECK(canonical_form_small(g) == canonical_form_small(shuffled(g, rng)));
        }
}

TEST_CASE("canonical form is a decodable graph6 string of the same graph") {
    Graph g = make("C5");
    std::string form = canonical_form_small(g);
    Graph back = decode_graph6(form);
    CHECK(testsupport::perm_iso(g, back));
}

TEST_CASE("canonical form refuses oversized inputs") {
    CHECK_NOTHROW(canonical_form_small(Graph(kExactCanonicalMax, {})));
    CHECK_THROWS_AS(canonical_form_small(Graph(kExactCanonicalMax + 1, {})), UnsupportedSize);
}
