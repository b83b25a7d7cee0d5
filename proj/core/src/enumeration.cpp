#include "giclass/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>
#include <utility>

#include "giclass/errors.hpp"
#include "giclass/iso.hpp"

namespace giclass {

namespace {

// Vertex pairs in graph6 column order: (0,1),(0,2),(1,2),(0,3),...
std::vector<std::pair<int, int>> column_order_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) out.emplace_back(u, v);
    return out;
}

}  // namespace

std::vector<Graph> all_graphs_up_to_iso(int n) {
    if (n < 0 || n > kExactCanonicalMax)
        throw InvalidArgument("all_graphs_up_to_iso: needs 0 <= n <= " +
                              std::to_string(kExactCanonicalMax) + ", got n=" + std::to_string(n));
    if (n == 0) return {Graph(0, {})};

    const std::vector<std::pair<int, int>> pairs = column_order_pairs(n);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> forms;
    for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
        std::uint16_t rows[detail::kSmallCanonMax] = {};
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (!(mask >> b & 1)) continue;
            auto [u, v] = pairs[b];
            rows[u] |= static_cast<std::uint16_t>(1u << v);
            rows[v] |= static_cast<std::uint16_t>(1u << u);
        }
        std::uint64_t bits = detail::canonical_ordering_small(n, rows, nullptr).bits;
        if (seen.insert(bits).second) forms.push_back(bits);
    }

    // Numeric order of the packed triangle equals lexicographic order of the
    // graph6 body, and its popcount is the edge count.
    std::sort(forms.begin(), forms.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<Graph> out;
    out.reserve(forms.size());
    for (std::uint64_t bits : forms) out.push_back(decode_graph6(detail::graph6_from_bits(n, bits)));
    return out;
}

int count_iso_classes_pairwise(int n) {
    if (n < 0 || n > 5)
        throw InvalidArgument("count_iso_classes_pairwise: needs 0 <= n <= 5, got n=" +
                              std::to_string(n));
    if (n == 0) return 1;

    const std::vector<std::pair<int, int>> pairs = column_order_pairs(n);
    std::vector<Graph> reps;
    for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1) edges.push_back(pairs[b]);
        Graph g(n, edges);
        bool fresh = true;
        for (const Graph& rep : reps) {
            if (brute_force_iso(g, rep).isomorphic()) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(std::move(g));
    }
    return static_cast<int>(reps.size());
}

}  // namespace giclass
