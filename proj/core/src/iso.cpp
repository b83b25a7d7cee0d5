#include "giclass/iso.hpp"

#include <algorithm>

namespace giclass {

namespace {

// Rank-normalize arbitrary color values to 0..k-1 preserving their order.
int rank_normalize(std::vector<int>& color) {
    std::vector<int> values(color);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& c : color)
        c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
    return static_cast<int>(values.size());
}

}  // namespace

Coloring color_refinement(const Graph& g) {
    Coloring uniform;
    uniform.color.assign(static_cast<std::size_t>(g.n()), 0);
    uniform.num_colors = g.n() > 0 ? 1 : 0;
    return color_refinement(g, uniform);
}

Coloring color_refinement(const Graph& g, const Coloring& initial) {
    if (static_cast<int>(initial.color.size()) != g.n())
        throw InvalidArgument("color_refinement: initial coloring size mismatch");
    std::vector<int> color = initial.color;
    int num = rank_normalize(color);
    if (g.n() == 0) return {{}, 0};

    for (;;) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.push_back(color[static_cast<std::size_t>(v)]);
            for (int u : g.neighbors(v)) s.push_back(color[static_cast<std::size_t>(u)]);
            std::sort(s.begin() + 1, s.end());
        }
        std::vector<std::vector<int>> distinct(sig);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> next(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v)
            next[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) -
                distinct.begin());
        // signatures start with the old color, so a stable partition
        // reproduces the exact same assignment
        if (next == color) break;
        color = std::move(next);
        num = static_cast<int>(distinct.size());
    }
    return {std::move(color), num};
}

IsoResult brute_force_iso(const Graph& a, const Graph& b) {
    if (a.n() != b.n()) return IsoResult::no("vertex_count");
    if (a.n() == 0) return IsoResult::yes(VertexMapping{});
    if (degree_sequence(a) != degree_sequence(b)) return IsoResult::no("degree_sequence");

    // Joint refinement makes color ids comparable across the two graphs.
    Coloring joint = color_refinement(disjoint_union(a, b));
    int n = a.n();
    std::vector<int> ca(joint.color.begin(), joint.color.begin() + n);
    std::vector<int> cb(joint.color.begin() + n, joint.color.end());
    {
        std::vector<int> ma(ca), mb(cb);
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (ma != mb) return IsoResult::no("wl_colors");
    }

    // candidates of v = b-vertices in v's joint color class
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (ca[static_cast<std::size_t>(v)] == cb[static_cast<std::size_t>(w)])
                candidates[static_cast<std::size_t>(v)].push_back(w);

    // place a-vertices with the fewest candidates first
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return candidates[static_cast<std::size_t>(x)].size() < candidates[static_cast<std::size_t>(y)].size();
    });

    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto search = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        int v = order[static_cast<std::size_t>(depth)];
        for (int w : candidates[static_cast<std::size_t>(v)]) {
            if (used[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (int d = 0; d < depth; ++d) {
                int pv = order[static_cast<std::size_t>(d)];
                if (a.adj(v, pv) != b.adj(w, image[static_cast<std::size_t>(pv)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (self(self, depth + 1)) return true;
            used[static_cast<std::size_t>(w)] = 0;
            image[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    if (!search(search, 0)) return IsoResult::no("exhausted");

    VertexMapping m{std::move(image)};
    if (!is_isomorphism(a, b, m))
        throw Error("brute_force_iso: internal error, mapping failed verification");
    return IsoResult::yes(std::move(m));
}

namespace detail {

namespace {

// WL refinement on the small mask representation; colors in/out.
void wl_small(int n, const std::uint16_t* masks, std::array<int, kSmallCanonMax>& color) {
    std::vector<int> c(color.begin(), color.begin() + n);
    rank_normalize(c);
    for (;;) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.push_back(c[static_cast<std::size_t>(v)]);
            for (int u = 0; u < n; ++u)
                if ((masks[v] >> u) & 1) s.push_back(c[static_cast<std::size_t>(u)]);
            std::sort(s.begin() + 1, s.end());
        }
        std::vector<std::vector<int>> distinct(sig);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) -
                distinct.begin());
        if (next == c) break;
        c = std::move(next);
    }
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = c[static_cast<std::size_t>(v)];
}

struct OrderingSearch {
    int n;
    const std::uint16_t* masks;
    int total_bits;
    std::array<int, kSmallCanonMax> pos_color{};  // required color at each position
    std::array<int, kSmallCanonMax> color{};
    std::array<int, kSmallCanonMax> perm{};
    std::array<char, kSmallCanonMax> used{};
    std::uint64_t best = 0;
    std::array<int, kSmallCanonMax> best_perm{};
    bool have_best = false;

    void run(int pos, std::uint64_t partial, int nbits) {
        if (pos == n) {
            if (!have_best || partial < best) {
                best = partial;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)] || color[static_cast<std::size_t>(v)] != pos_color[static_cast<std::size_t>(pos)])
                continue;
            std::uint64_t np = partial;
            for (int i = 0; i < pos; ++i)
                np = (np << 1) | ((masks[v] >> perm[static_cast<std::size_t>(i)]) & 1u);
            int nb = nbits + pos;
            if (have_best && nb > 0 && np > (best >> (total_bits - nb))) continue;
            perm[static_cast<std::size_t>(pos)] = v;
            used[static_cast<std::size_t>(v)] = 1;
            run(pos + 1, np, nb);
            used[static_cast<std::size_t>(v)] = 0;
        }
    }
};

}  // namespace

SmallCanon canonical_ordering_small(int n, const std::uint16_t* masks, const int* initial_colors) {
    if (n < 0 || n > kSmallCanonMax)
        throw UnsupportedSize("canonical_ordering_small: needs 0 <= n <= " +
                              std::to_string(kSmallCanonMax) + ", got n=" + std::to_string(n));
    SmallCanon out;
    if (n == 0) return out;

    OrderingSearch s;
    s.n = n;
    s.masks = masks;
    s.total_bits = n * (n - 1) / 2;
    for (int v = 0; v < n; ++v)
        s.color[static_cast<std::size_t>(v)] = initial_colors ? initial_colors[v] : 0;
    wl_small(n, masks, s.color);

    // positions consume color classes in ascending id order
    int p = 0;
    for (int c = 0; c < n; ++c)
        for (int v = 0; v < n; ++v)
            if (s.color[static_cast<std::size_t>(v)] == c) s.pos_color[static_cast<std::size_t>(p++)] = c;

    s.run(0, 0, 0);
    out.bits = s.best;
    out.perm = s.best_perm;
    return out;
}

std::string graph6_from_bits(int n, std::uint64_t bits) {
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int total = n * (n - 1) / 2;
    for (int start = 0; start < total; start += 6) {
        int group = 0;
        for (int k = 0; k < 6; ++k) {
            int idx = start + k;  // stream index; stream bit i lives at integer bit total-1-i
            int bit = idx < total ? static_cast<int>((bits >> (total - 1 - idx)) & 1u) : 0;
            group = (group << 1) | bit;
        }
        out.push_back(static_cast<char>(group + 63));
    }
    return out;
}

}  // namespace detail

std::string canonical_form_small(const Graph& g) {
    if (g.n() > kExactCanonicalMax)
        throw UnsupportedSize("canonical_form_small: needs n <= " +
                              std::to_string(kExactCanonicalMax) + ", got n=" + std::to_string(g.n()));
    std::uint16_t masks[kExactCanonicalMax] = {};
    for (int v = 0; v < g.n(); ++v)
        for (int u = 0; u < g.n(); ++u)
            if (u != v && g.adj(v, u)) masks[v] |= static_cast<std::uint16_t>(1u << u);
    auto r = detail::canonical_ordering_small(g.n(), masks, nullptr);
    return detail::graph6_from_bits(g.n(), r.bits);
}

}  // namespace giclass
