#include "giclass/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "giclass/errors.hpp"
#include "giclass/expr.hpp"

namespace giclass {

std::optional<SplitPartition> split_partition(const Graph& g) {
    const int n = g.n();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });

    // m = number of leading vertices (degrees descending) with d_i >= i-1,
    // 1-indexed; order[m-1] is the last clique candidate.
    int m = 0;
    while (m < n && g.degree(order[static_cast<std::size_t>(m)]) >= m) ++m;
    long long top = 0, rest = 0;
    for (int i = 0; i < n; ++i)
        (i < m ? top : rest) += g.degree(order[static_cast<std::size_t>(i)]);
    if (top != static_cast<long long>(m) * (m - 1) + rest) return std::nullopt;

    SplitPartition p;
    p.clique.assign(order.begin(), order.begin() + m);
    p.independent.assign(order.begin() + m, order.end());
    std::sort(p.clique.begin(), p.clique.end());
    std::sort(p.independent.begin(), p.independent.end());
    for (std::size_t i = 0; i < p.clique.size(); ++i)
        for (std::size_t j = i + 1; j < p.clique.size(); ++j)
            if (!g.adj(p.clique[i], p.clique[j]))
                throw Error("split_partition: degree criterion exhibited an invalid clique (internal error)");
    for (std::size_t i = 0; i < p.independent.size(); ++i)
        for (std::size_t j = i + 1; j < p.independent.size(); ++j)
            if (g.adj(p.independent[i], p.independent[j]))
                throw Error("split_partition: degree criterion exhibited an invalid independent set (internal error)");
    return p;
}

bool is_split(const Graph& g) { return split_partition(g).has_value(); }

Graph split_incidence_reduce(const Graph& g) {
    if (g.n() < 2)
        throw PreconditionError("split_incidence_reduce: needs n >= 2, got n=" +
                                std::to_string(g.n()));
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0)
            throw PreconditionError("split_incidence_reduce: vertex " + std::to_string(v) +
                                        " is isolated; the construction needs minimum degree >= 1",
                                    std::vector<int>{v});

    const std::vector<std::pair<int, int>> es = g.edges();
    GraphBuilder b(g.n() + static_cast<int>(es.size()));
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) b.add_edge(u, v);
    int next = g.n();
    for (auto [u, v] : es) {
        b.add_edge(u, next);
        b.add_edge(v, next);
        ++next;
    }
    return b.build();
}

const std::vector<Reduction>& reductions() {
    static const std::vector<Reduction> all = [] {
        std::vector<Reduction> r;
        r.push_back(Reduction{
            "split-incidence",
            "clique on the original vertices plus one vertex per edge; images are split graphs",
            ClassSpec({parse_expr("K2+K2"), parse_expr("C4"), parse_expr("C5")}),
            &split_incidence_reduce,
        });
        return r;
    }();
    return all;
}

const Reduction* find_reduction(const std::string& name) {
    for (const Reduction& r : reductions())
        if (r.name == name) return &r;
    return nullptr;
}

ReductionReport verify_reduction(const Reduction& r,
                                 const std::vector<std::pair<Graph, Graph>>& corpus,
                                 int oracle_bound) {
    ReductionReport rep;
    rep.reduction = r.name;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& [ga, gb] = corpus[i];
        auto transform_checked = [&](const Graph& g, const char* side) {
            try {
                return r.transform(g);
            } catch (const PreconditionError& e) {
                throw PreconditionError("verify_reduction: " + std::string(side) +
                                            " graph of corpus pair #" + std::to_string(i) +
                                            " is outside the domain of " + r.name + ": " + e.what(),
                                        e.witness);
            }
        };
        Graph ra = transform_checked(ga, "first");
        Graph rb = transform_checked(gb, "second");

        ReductionCheck c;
        c.input1 = encode_graph6(ga);
        c.input2 = encode_graph6(gb);
        c.images_in_target =
            !find_forbidden(ra, r.target_class) && !find_forbidden(rb, r.target_class);
        if (!c.images_in_target) ++rep.violations;

        int image_n = std::max(ra.n(), rb.n());
        if (image_n > oracle_bound) {
            c.skipped = "image size " + std::to_string(image_n) +
                        " exceeds the exhaustive-check bound " + std::to_string(oracle_bound);
            ++rep.pairs_skipped;
        } else {
            c.inputs_isomorphic = brute_force_iso(ga, gb).isomorphic();
            c.outputs_isomorphic = brute_force_iso(ra, rb).isomorphic();
            c.agreed = (*c.inputs_isomorphic == *c.outputs_isomorphic);
            if (!c.agreed) ++rep.violations;
            ++rep.pairs_checked;
        }
        rep.pairs.push_back(std::move(c));
    }
    return rep;
}

std::string to_text(const ReductionReport& report) {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::string out;
    for (std::size_t i = 0; i < report.pairs.size(); ++i) {
        const ReductionCheck& c = report.pairs[i];
        out += "pair " + std::to_string(i) + ": " + c.input1 + " " + c.input2 + ": ";
        if (c.skipped) {
            out += "skipped (" + *c.skipped + ")";
        } else {
            out += c.agreed ? "ok" : "VIOLATION";
            out += std::string(" inputs-iso=") + yn(*c.inputs_isomorphic) +
                   " images-iso=" + yn(*c.outputs_isomorphic);
        }
        if (!c.images_in_target) out += " [images outside target class]";
        out += "\n";
    }
    out += report.reduction + ": checked=" + std::to_string(report.pairs_checked) +
           " skipped=" + std::to_string(report.pairs_skipped) +
           " violations=" + std::to_string(report.violations) + "\n";
    return out;
}

}  // namespace giclass
