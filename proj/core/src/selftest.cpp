#include "giclass/selftest.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <random>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "giclass/classify.hpp"
#include "giclass/cograph.hpp"
#include "giclass/enumeration.hpp"
#include "giclass/errors.hpp"
#include "giclass/expr.hpp"
#include "giclass/graph.hpp"
#include "giclass/iso.hpp"
#include "giclass/reduction.hpp"
#include "giclass/subgraph.hpp"

namespace giclass {

namespace {

constexpr double kScaleBudgetSeconds = 1.0;
constexpr int kScaleLeaves = 10000;

struct Corpus {
    int max_n = 0;
    std::vector<std::vector<Graph>> by_n;
};

// Collects mismatch descriptions; keeps the first few verbatim so a failed
// check names concrete offenders without flooding the report.
struct Problems {
    std::size_t count = 0;
    std::vector<std::string> sample;

    void add(std::string what) {
        ++count;
        if (sample.size() < 3) sample.push_back(std::move(what));
    }
    bool clean() const { return count == 0; }
    std::string summary() const {
        std::string out = std::to_string(count) + " problem(s): ";
        for (std::size_t i = 0; i < sample.size(); ++i) out += (i ? " | " : "") + sample[i];
        return out;
    }
};

template <typename Body>
CheckResult run_check(const std::string& name, Body&& body) {
    CheckResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

int min_degree(const Graph& g) {
    int d = g.n() == 0 ? 0 : g.degree(0);
    for (int v = 1; v < g.n(); ++v) d = std::min(d, g.degree(v));
    return d;
}

Graph random_graph(int n, std::mt19937_64& rng) {
    GraphBuilder b(n);
    std::uint64_t word = 0;
    int left = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (left == 0) {
                word = rng();
                left = 64;
            }
            if (word & 1) b.add_edge(u, v);
            word >>= 1;
            --left;
        }
    return b.build();
}

void oracle_counts_body(const Corpus& corpus, CheckResult& r) {
    static constexpr std::array<int, 8> kExpected = {1, 1, 2, 4, 11, 34, 156, 1044};
    Problems p;
    std::string counts;
    for (int n = 1; n <= corpus.max_n; ++n) {
        int got = static_cast<int>(corpus.by_n[static_cast<std::size_t>(n)].size());
        counts += (n > 1 ? "," : "") + std::to_string(got);
        if (got != kExpected[static_cast<std::size_t>(n)])
            p.add("n=" + std::to_string(n) + ": " + std::to_string(got) + " classes, expected " +
                  std::to_string(kExpected[static_cast<std::size_t>(n)]));
    }
    for (int n = 1; n <= std::min(corpus.max_n, 5); ++n) {
        int alt = count_iso_classes_pairwise(n);
        if (alt != static_cast<int>(corpus.by_n[static_cast<std::size_t>(n)].size()))
            p.add("pairwise route at n=" + std::to_string(n) + ": " + std::to_string(alt));
    }
    r.passed = p.clean();
    r.detail = r.passed ? "classes for n=1.." + std::to_string(corpus.max_n) + ": " + counts +
                              "; pairwise route agrees for n<=" +
                              std::to_string(std::min(corpus.max_n, 5))
                        : p.summary();
}

void cograph_canon_body(const Corpus& corpus, std::uint64_t seed, CheckResult& r) {
    Problems p;
    const Graph p4 = realize(GraphExpr::path(4));
    std::mt19937_64 rng(seed ^ 0xC0C00002ull);
    int cographs = 0, witnesses = 0;
    std::array<int, 8> classes{};
    for (int n = 1; n <= corpus.max_n; ++n) {
        std::unordered_set<std::string> codes;
        for (const Graph& g : corpus.by_n[static_cast<std::size_t>(n)]) {
            bool has_p4 = find_induced(g, p4).has_value();
            auto res = build_cotree(g);
            if (has_p4) {
                const P4Witness* w = std::get_if<P4Witness>(&res);
                if (!w) {
                    p.add(encode_graph6(g) + ": expected a P4 witness");
                    continue;
                }
                const P4Witness& v = *w;
                bool path_shape = g.adj(v[0], v[1]) && g.adj(v[1], v[2]) && g.adj(v[2], v[3]) &&
                                  !g.adj(v[0], v[2]) && !g.adj(v[0], v[3]) && !g.adj(v[1], v[3]);
                std::array<int, 4> sorted = v;
                std::sort(sorted.begin(), sorted.end());
                bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
                if (!path_shape || !distinct)
                    p.add(encode_graph6(g) + ": P4 witness fails verification");
                else
                    ++witnesses;
                continue;
            }
            const Cotree* t = std::get_if<Cotree>(&res);
            if (!t) {
                p.add(encode_graph6(g) + ": P4 witness on a P4-free graph");
                continue;
            }
            std::string why;
            if (!validate_cotree(*t, &why)) {
                p.add(encode_graph6(g) + ": invalid cotree (" + why + ")");
                continue;
            }
            if (cotree_to_graph(*t) != g) {
                p.add(encode_graph6(g) + ": reconstruction differs from the input");
                continue;
            }
            std::string code = canonical_code(*t);
            if (!codes.insert(code).second)
                p.add(encode_graph6(g) + ": canonical code collides with a non-isomorphic graph");
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            auto res2 = build_cotree(apply_permutation(g, perm));
            const Cotree* t2 = std::get_if<Cotree>(&res2);
            if (!t2 || canonical_code(*t2) != code)
                p.add(encode_graph6(g) + ": canonical code changed under relabeling");
            ++cographs;
        }
        classes[static_cast<std::size_t>(n)] = static_cast<int>(codes.size());
    }
    if (corpus.max_n >= 5 && classes[5] != 24)
        p.add("expected 24 cograph classes at n=5, got " + std::to_string(classes[5]));
    r.passed = p.clean();
    r.detail = r.passed ? std::to_string(cographs) + " cographs (n<=" + std::to_string(corpus.max_n) +
                              ") rebuilt, reconstructed, and relabeling-stable (" +
                              std::to_string(classes[5]) + " classes at n=5); " +
                              std::to_string(witnesses) + " verified P4 witnesses"
                        : p.summary();
}

void classification_body(const Corpus& corpus, SelftestLevel level, std::uint64_t seed,
                         CheckResult& r) {
    Problems p;
    const ClassificationTable& table = ClassificationTable::embedded();

    std::vector<GraphExpr> exc = exception_set();
    std::vector<GraphExpr> catalog = enumerate_path_union_complements(7, 3);
    if (exc.size() != 3) p.add("exception set has " + std::to_string(exc.size()) + " entries");
    if (catalog.size() != 30) p.add("catalog has " + std::to_string(catalog.size()) + " entries");

    ClassificationStatus rao =
        classify(ForbiddenPair(parse_expr("P4+K1"), parse_expr("co(P4+K1)")), table);
    if (rao.kind != StatusKind::Polynomial || rao.method != "rao")
        p.add("(P4+K1, co(P4+K1)) classified " + to_string(rao));
    for (const GraphExpr& e : exc)
        for (const char* other : {"co(P6)", "co(P7)"}) {
            ClassificationStatus s = classify(ForbiddenPair(e, parse_expr(other)), table);
            if (s.kind != StatusKind::GIComplete)
                p.add("(" + print_expr(e) + ", " + other + ") classified " + to_string(s));
        }

    // Swap and both-sides-complement invariance: exhaustive on the small
    // universe, seeded samples above it.
    std::vector<const Graph*> uni5;
    for (int n = 1; n <= std::min(corpus.max_n, 5); ++n)
        for (const Graph& g : corpus.by_n[static_cast<std::size_t>(n)])
            if (!is_basic(g)) uni5.push_back(&g);
    long long invariance_pairs = 0;
    auto check_invariance = [&](const Graph& x, const Graph& y) {
        ClassificationStatus s = classify_graphs(x, y, table);
        if (!(s == classify_graphs(y, x, table)))
            p.add(encode_graph6(x) + "," + encode_graph6(y) + ": swap changes the status");
        if (!(s == classify_graphs(complement(x), complement(y), table)))
            p.add(encode_graph6(x) + "," + encode_graph6(y) + ": complementing changes the status");
        ++invariance_pairs;
    };
    for (std::size_t i = 0; i < uni5.size(); ++i)
        for (std::size_t j = i; j < uni5.size(); ++j) check_invariance(*uni5[i], *uni5[j]);
    if (level == SelftestLevel::Full) {
        std::mt19937_64 rng(seed ^ 0xC1A50003ull);
        std::vector<const Graph*> uni67;
        for (int n = 6; n <= corpus.max_n; ++n)
            for (const Graph& g : corpus.by_n[static_cast<std::size_t>(n)])
                if (!is_basic(g)) uni67.push_back(&g);
        for (int k = 0; k < 300 && !uni67.empty(); ++k)
            check_invariance(*uni67[rng() % uni67.size()], *uni67[rng() % uni67.size()]);
    }

    // Open-set shape over the whole non-basic universe: open exactly on the
    // exception region minus the long-complemented-path rows minus the
    // subclasses of the known polynomial case.
    std::unordered_set<std::string> exc_canon, cat_canon, co67_canon;
    for (const GraphExpr& e : exc) exc_canon.insert(canonical_form_small(realize(e)));
    for (const GraphExpr& e : catalog) cat_canon.insert(canonical_form_small(realize(e)));
    co67_canon.insert(canonical_form_small(realize(parse_expr("co(P6)"))));
    co67_canon.insert(canonical_form_small(realize(parse_expr("co(P7)"))));
    const Graph p4k1 = realize(parse_expr("P4+K1"));
    const Graph gem = realize(parse_expr("co(P4+K1)"));

    struct Entry {
        const Graph* g;
        std::string canon, cocanon;
    };
    std::vector<Entry> uni;
    for (int n = 1; n <= corpus.max_n; ++n)
        for (const Graph& g : corpus.by_n[static_cast<std::size_t>(n)])
            if (!is_basic(g))
                uni.push_back({&g, canonical_form_small(g), canonical_form_small(complement(g))});

    long long region_pairs = 0, open_pairs = 0;
    auto contains = [](const Graph& host, const Graph& pattern) {
        return find_induced(host, pattern).has_value();
    };
    for (std::size_t i = 0; i < uni.size(); ++i) {
        for (std::size_t j = i; j < uni.size(); ++j) {
            const Entry& A = uni[i];
            const Entry& B = uni[j];
            auto orient = [&](const std::unordered_set<std::string>& one,
                              const std::unordered_set<std::string>& two) {
                return (one.count(A.canon) && two.count(B.canon)) ||
                       (one.count(B.canon) && two.count(A.canon)) ||
                       (one.count(A.cocanon) && two.count(B.cocanon)) ||
                       (one.count(B.cocanon) && two.count(A.cocanon));
            };
            bool expected_open = false;
            if (orient(exc_canon, cat_canon)) {
                ++region_pairs;
                bool involves67 = orient(exc_canon, co67_canon);
                bool raosub = (contains(p4k1, *A.g) || contains(p4k1, *B.g)) &&
                              (contains(gem, *A.g) || contains(gem, *B.g));
                expected_open = !involves67 && !raosub;
            }
            ClassificationStatus s = classify_graphs(*A.g, *B.g, table);
            if (s.kind == StatusKind::Unknown)
                p.add(encode_graph6(*A.g) + "," + encode_graph6(*B.g) + ": non-basic pair Unknown");
            if ((s.kind == StatusKind::Open) != expected_open)
                p.add(encode_graph6(*A.g) + "," + encode_graph6(*B.g) + ": open-set mismatch (" +
                      to_string(s) + ")");
            if (expected_open) ++open_pairs;
        }
    }

    r.passed = p.clean();
    r.detail = r.passed
                   ? "exception set 3, catalog 30, pinned rows hold; swap/complement invariant on " +
                         std::to_string(invariance_pairs) + " pairs; open set = " +
                         std::to_string(open_pairs) + " of " + std::to_string(region_pairs) +
                         " region pairs over the " + std::to_string(uni.size()) +
                         "-graph universe (n<=" + std::to_string(corpus.max_n) + ")"
                   : p.summary();
}

void reduction_body(const Corpus& corpus, std::uint64_t seed, CheckResult& r) {
    Problems p;
    const Reduction* red = find_reduction("split-incidence");
    if (!red) {
        r.passed = false;
        r.detail = "split-incidence reduction is not registered";
        return;
    }

    std::vector<const Graph*> domain;
    for (int n = 2; n <= std::min(corpus.max_n, 4); ++n)
        for (const Graph& g : corpus.by_n[static_cast<std::size_t>(n)])
            if (min_degree(g) >= 1) domain.push_back(&g);
    std::vector<std::pair<Graph, Graph>> pairs;
    for (std::size_t i = 0; i < domain.size(); ++i)
        for (std::size_t j = i; j < domain.size(); ++j) pairs.emplace_back(*domain[i], *domain[j]);
    std::size_t exhaustive = pairs.size();

    std::mt19937_64 rng(seed ^ 0x5EED0004ull);
    auto random_domain5 = [&] {
        for (;;) {
            Graph g = random_graph(5, rng);
            if (min_degree(g) >= 1) return g;
        }
    };
    for (int k = 0; k < 500; ++k) pairs.emplace_back(random_domain5(), random_domain5());

    ReductionReport report = verify_reduction(*red, pairs);
    if (!report.clean()) p.add(std::to_string(report.violations) + " harness violations");
    if (report.pairs_skipped != 0)
        p.add(std::to_string(report.pairs_skipped) + " pairs skipped unexpectedly");

    long long images = 0;
    for (const auto& [a, b] : pairs)
        for (const Graph* g : {&a, &b}) {
            if (!is_split(red->transform(*g)))
                p.add(encode_graph6(*g) + ": image fails the split partition check");
            ++images;
        }

    r.passed = p.clean();
    r.detail = r.passed ? "split-incidence: " + std::to_string(exhaustive) +
                              " exhaustive pairs (min degree >= 1, n<=4) + 500 seeded pairs (n=5): "
                              "no violations; all " +
                              std::to_string(images) + " images pass the split check"
                        : p.summary();
}

void dispatch_body(const Corpus& corpus, CheckResult& r) {
    Problems p;
    const ClassificationTable& table = ClassificationTable::embedded();
    std::string per_row;
    for (const TableRow& row : table.rows()) {
        if (row.status.kind != StatusKind::Polynomial) continue;
        Graph pat1 = realize(row.expr1);
        std::optional<Graph> pat2;
        if (row.expr2) pat2 = realize(*row.expr2);
        std::optional<ForbiddenPair> fp;
        if (row.expr2) fp.emplace(row.expr1, *row.expr2);

        std::vector<const Graph*> members;
        for (int n = 1; n <= corpus.max_n; ++n)
            for (const Graph& g : corpus.by_n[static_cast<std::size_t>(n)]) {
                if (find_induced(g, pat1)) continue;
                if (pat2 && find_induced(g, *pat2)) continue;
                members.push_back(&g);
            }

        long long checked = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i; j < members.size(); ++j) {
                const Graph& a = *members[i];
                const Graph& b = *members[j];
                IsoResult got;
                if (row.status.method == "cograph") {
                    got = cograph_iso(a, b);
                } else if (row.status.method == "bothsplit") {
                    got = bothsplit_iso(a, b, *fp, table);
                } else {
                    DispatchResult d = iso_in_class(*fp, a, b, table);
                    if (!d.result) {
                        p.add(row.pattern1 + "," + row.pattern2 + ": unexpected refusal");
                        continue;
                    }
                    got = *d.result;
                }
                IsoResult want = brute_force_iso(a, b);
                if (got.isomorphic() != want.isomorphic())
                    p.add(row.pattern1 + "," + row.pattern2 + ": " + encode_graph6(a) + " vs " +
                          encode_graph6(b) + " disagrees with the oracle");
                else if (got.isomorphic() &&
                         (!got.mapping || !is_isomorphism(a, b, *got.mapping)))
                    p.add(row.pattern1 + "," + row.pattern2 + ": mapping fails verification");
                ++checked;
            }
        }
        per_row += (per_row.empty() ? "" : "; ") + row.pattern1 + "," + row.pattern2 + ": " +
                   std::to_string(members.size()) + " members / " + std::to_string(checked) +
                   " pairs";
    }
    r.passed = p.clean();
    r.detail = r.passed ? "polynomial rows agree with the oracle (n<=" +
                              std::to_string(corpus.max_n) + "): " + per_row
                        : p.summary();
}

void graph6_body(int max_labeled_n, int samples, std::uint64_t seed, CheckResult& r) {
    Problems p;
    long long labeled = 0;
    for (int n = 0; n <= max_labeled_n; ++n) {
        std::vector<std::pair<int, int>> all_pairs;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) all_pairs.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (1ull << all_pairs.size()); ++mask) {
            GraphBuilder b(n);
            for (std::size_t t = 0; t < all_pairs.size(); ++t)
                if (mask >> t & 1) b.add_edge(all_pairs[t].first, all_pairs[t].second);
            Graph g = b.build();
            if (decode_graph6(encode_graph6(g)) != g) {
                p.add("labeled round-trip failed at n=" + std::to_string(n) + ", mask " +
                      std::to_string(mask));
            }
            ++labeled;
        }
    }
    std::mt19937_64 rng(seed ^ 0x6A600006ull);
    for (int k = 0; k < samples; ++k) {
        Graph g = random_graph(static_cast<int>(rng() % 33), rng);
        if (decode_graph6(encode_graph6(g)) != g)
            p.add("sampled round-trip failed: " + encode_graph6(g));
    }
    if (encode_graph6(realize(GraphExpr::complete(3))) != "Bw")
        p.add("K3 encoded to \"" + encode_graph6(realize(GraphExpr::complete(3))) +
              "\", expected \"Bw\"");
    r.passed = p.clean();
    r.detail = r.passed ? std::to_string(labeled) + " labeled graphs (n<=" +
                              std::to_string(max_labeled_n) + ") and " + std::to_string(samples) +
                              " seeded graphs (n<=32) round-trip; K3 encodes to \"Bw\""
                        : p.summary();
}

void scale_body(std::uint64_t seed, CheckResult& r) {
    Problems p;
    std::mt19937_64 rng(seed ^ 0x5CA10007ull);
    Cotree t = random_cotree(kScaleLeaves, rng);
    std::string want = canonical_code(t);
    Graph g = cotree_to_graph(t);

    auto t0 = std::chrono::steady_clock::now();
    auto built = build_cotree(g);
    const Cotree* bt = std::get_if<Cotree>(&built);
    std::string got = bt ? canonical_code(*bt) : "";
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (!bt)
        p.add("builder returned a P4 witness for a cograph");
    else if (got != want)
        p.add("canonical code differs from the generating cotree's");
    if (secs >= kScaleBudgetSeconds)
        p.add("rebuild + canonical code exceeded the " + std::to_string(kScaleBudgetSeconds) +
              "s budget");
    r.passed = p.clean();
    r.detail = r.passed ? std::to_string(kScaleLeaves) +
                              "-vertex cograph rebuilt and canonized inside the 1s budget; code "
                              "matches the generating cotree"
                        : p.summary();
}

}  // namespace

std::vector<CheckResult> run_selftest(SelftestLevel level, std::uint64_t seed) {
    const int max_n = level == SelftestLevel::Full ? 7 : 5;
    Corpus corpus;
    corpus.max_n = max_n;
    corpus.by_n.resize(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n)
        corpus.by_n[static_cast<std::size_t>(n)] = all_graphs_up_to_iso(n);

    std::vector<CheckResult> out;
    out.push_back(run_check("oracle-counts", [&](CheckResult& r) { oracle_counts_body(corpus, r); }));
    out.push_back(run_check("cograph-canon",
                            [&](CheckResult& r) { cograph_canon_body(corpus, seed, r); }));
    out.push_back(run_check("classification-fidelity",
                            [&](CheckResult& r) { classification_body(corpus, level, seed, r); }));
    if (level == SelftestLevel::Full)
        out.push_back(
            run_check("reduction-harness", [&](CheckResult& r) { reduction_body(corpus, seed, r); }));
    out.push_back(run_check("dispatch-soundness", [&](CheckResult& r) { dispatch_body(corpus, r); }));
    out.push_back(run_check("graph6-roundtrip", [&](CheckResult& r) {
        graph6_body(level == SelftestLevel::Full ? 6 : 5, level == SelftestLevel::Full ? 1000 : 250,
                    seed, r);
    }));
    if (level == SelftestLevel::Full)
        out.push_back(run_check("cograph-scale", [&](CheckResult& r) { scale_body(seed, r); }));
    return out;
}

std::string selftest_report(const std::vector<CheckResult>& results) {
    std::string out;
    int pass = 0;
    for (const CheckResult& c : results) {
        out += std::string(c.passed ? "[PASS] " : "[FAIL] ") + c.name + ": " + c.detail + "\n";
        if (c.passed) ++pass;
    }
    out += std::to_string(pass) + "/" + std::to_string(results.size()) + " checks passed\n";
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& c : results)
        if (!c.passed) return false;
    return true;
}

}  // namespace giclass
