#include "giclass/subgraph.hpp"

#include <algorithm>

namespace giclass {

ClassSpec::ClassSpec(std::vector<GraphExpr> forbidden_list) : forbidden(std::move(forbidden_list)) {
    if (forbidden.empty()) throw InvalidArgument("class spec: no forbidden graphs");
    realized.reserve(forbidden.size());
    for (const auto& e : forbidden) {
        Graph g = realize(e);
        if (g.n() < 1)
            throw InvalidArgument("class spec: forbidden graph '" + print_expr(e) + "' has no vertices");
        realized.push_back(std::move(g));
    }
}

namespace {

struct InducedSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;    // pattern vertices, most constrained first
    std::vector<int> image;    // order position -> host vertex (-1 = unset)
    std::vector<char> used;    // host vertex taken

    explicit InducedSearch(const Graph& h, const Graph& p) : host(h), pattern(p) {
        // Place pattern vertices so each new one has as many already-placed
        // neighbors as possible; ties by higher degree, then lower id.
        int k = pattern.n();
        std::vector<char> placed(static_cast<std::size_t>(k), 0);
        for (int step = 0; step < k; ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < k; ++v) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                int links = 0;
                for (int u : order)
                    if (pattern.adj(u, v)) ++links;
                int deg = pattern.degree(v);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            order.push_back(best);
            placed[static_cast<std::size_t>(best)] = 1;
        }
        image.assign(static_cast<std::size_t>(k), -1);
        used.assign(static_cast<std::size_t>(host.n()), 0);
    }

    bool run(std::size_t depth) {
        if (depth == order.size()) return true;
        int pv = order[depth];
        int pdeg = pattern.degree(pv);
        int pco = pattern.n() - 1 - pdeg;
        for (int hv = 0; hv < host.n(); ++hv) {
            if (used[static_cast<std::size_t>(hv)]) continue;
            int hdeg = host.degree(hv);
            if (hdeg < pdeg || host.n() - 1 - hdeg < pco) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth; ++d) {
                if (pattern.adj(order[d], pv) != host.adj(image[d], hv)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[depth] = hv;
            used[static_cast<std::size_t>(hv)] = 1;
            if (run(depth + 1)) return true;
            used[static_cast<std::size_t>(hv)] = 0;
            image[depth] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<VertexMapping> find_induced(const Graph& host, const Graph& pattern) {
    if (pattern.n() == 0) return VertexMapping{};
    if (pattern.n() > host.n()) return std::nullopt;
    InducedSearch search(host, pattern);
    if (!search.run(0)) return std::nullopt;
    VertexMapping m;
    m.image.assign(static_cast<std::size_t>(pattern.n()), -1);
    for (std::size_t d = 0; d < search.order.size(); ++d)
        m.image[static_cast<std::size_t>(search.order[d])] = search.image[d];
    if (!is_induced_embedding(pattern, host, m))
        throw Error("find_induced: internal error, witness failed verification");
    return m;
}

bool is_member(const Graph& g, const ClassSpec& cls) { return !find_forbidden(g, cls).has_value(); }

std::optional<ForbiddenWitness> find_forbidden(const Graph& g, const ClassSpec& cls) {
    for (std::size_t i = 0; i < cls.realized.size(); ++i) {
        if (auto hit = find_induced(g, cls.realized[i]))
            return ForbiddenWitness{i, std::move(*hit)};
    }
    return std::nullopt;
}

}  // namespace giclass
