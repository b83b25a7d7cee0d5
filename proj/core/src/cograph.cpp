#include "giclass/cograph.hpp"

#include <algorithm>
#include <bit>

#include "giclass/subgraph.hpp"

namespace giclass {

namespace detail {

// Word-parallel BFS; complement neighborhoods are computed as
// "remaining minus N(v)", so the complement never gets materialized.
std::vector<std::vector<int>> connected_parts(const Graph& g, const std::vector<int>& sub,
                                              bool complement_side) {
    int w = g.words();
    std::vector<std::uint64_t> remaining(static_cast<std::size_t>(w), 0);
    for (int v : sub) remaining[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);

    auto pop_lowest = [&](std::vector<std::uint64_t>& set) -> int {
        for (int i = 0; i < w; ++i) {
            if (set[static_cast<std::size_t>(i)]) {
                int b = std::countr_zero(set[static_cast<std::size_t>(i)]);
                set[static_cast<std::size_t>(i)] &= set[static_cast<std::size_t>(i)] - 1;
                return i * 64 + b;
            }
        }
        return -1;
    };

    std::vector<std::vector<int>> parts;
    std::vector<std::uint64_t> frontier(static_cast<std::size_t>(w));
    while (true) {
        int start = pop_lowest(remaining);
        if (start < 0) break;
        std::vector<int> part{start};
        std::fill(frontier.begin(), frontier.end(), 0);
        frontier[static_cast<std::size_t>(start >> 6)] |= std::uint64_t{1} << (start & 63);
        while (true) {
            std::vector<std::uint64_t> next(static_cast<std::size_t>(w), 0);
            std::vector<std::uint64_t> scan = frontier;
            bool grew = false;
            int v;
            while ((v = pop_lowest(scan)) >= 0) {
                const std::uint64_t* row = g.row(v);
                for (int i = 0; i < w; ++i) {
                    std::uint64_t hit = complement_side
                                            ? (remaining[static_cast<std::size_t>(i)] & ~row[i])
                                            : (remaining[static_cast<std::size_t>(i)] & row[i]);
                    if (hit) {
                        next[static_cast<std::size_t>(i)] |= hit;
                        remaining[static_cast<std::size_t>(i)] &= ~hit;
                        grew = true;
                    }
                }
            }
            if (!grew) break;
            frontier = next;
            std::vector<std::uint64_t> collect = next;
            while ((v = pop_lowest(collect)) >= 0) part.push_back(v);
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

}  // namespace detail

namespace {

std::string code_of(const Cotree& t, int node, std::vector<std::string>& memo) {
    if (!memo[static_cast<std::size_t>(node)].empty()) return memo[static_cast<std::size_t>(node)];
    const CotreeNode& nd = t.nodes[static_cast<std::size_t>(node)];
    std::string code;
    if (nd.tag == CotreeNode::Tag::Leaf) {
        code = "L";
    } else {
        std::vector<std::string> kids;
        kids.reserve(nd.children.size());
        for (int c : nd.children) kids.push_back(code_of(t, c, memo));
        std::sort(kids.begin(), kids.end());
        code.push_back(nd.tag == CotreeNode::Tag::Union ? 'U' : 'J');
        code.push_back('(');
        for (const auto& k : kids) code += k;
        code.push_back(')');
    }
    memo[static_cast<std::size_t>(node)] = code;
    return memo[static_cast<std::size_t>(node)];
}

struct CotreeBuilder {
    const Graph& g;
    Cotree tree;
    std::vector<std::string> codes;  // per node, filled bottom-up for child ordering

    // Returns the node index, or -1 after recording a P4 witness.
    int build(const std::vector<int>& sub, std::optional<P4Witness>& witness) {
        if (sub.size() == 1) {
            tree.nodes.push_back({CotreeNode::Tag::Leaf, sub[0], {}});
            codes.emplace_back("L");
            return static_cast<int>(tree.nodes.size()) - 1;
        }
        auto parts = detail::connected_parts(g, sub, false);
        CotreeNode::Tag tag = CotreeNode::Tag::Union;
        if (parts.size() < 2) {
            parts = detail::connected_parts(g, sub, true);
            tag = CotreeNode::Tag::Join;
        }
        if (parts.size() < 2) {
            // connected and co-connected with >= 2 vertices: a P4 exists
            Graph sg = induced_subgraph(g, sub);
            static const Graph p4 = realize(GraphExpr::path(4));
            auto hit = find_induced(sg, p4);
            if (!hit) throw Error("build_cotree: internal error, expected an induced P4");
            witness = P4Witness{sub[static_cast<std::size_t>(hit->image[0])],
                                sub[static_cast<std::size_t>(hit->image[1])],
                                sub[static_cast<std::size_t>(hit->image[2])],
                                sub[static_cast<std::size_t>(hit->image[3])]};
            return -1;
        }
        std::vector<int> children;
        for (const auto& part : parts) {
            int c = build(part, witness);
            if (c < 0) return -1;
            children.push_back(c);
        }
        std::sort(children.begin(), children.end(), [&](int x, int y) {
            return codes[static_cast<std::size_t>(x)] < codes[static_cast<std::size_t>(y)];
        });
        // assemble this node's code with children already sorted
        std::string code;
        code.push_back(tag == CotreeNode::Tag::Union ? 'U' : 'J');
        code.push_back('(');
        for (int c : children) code += codes[static_cast<std::size_t>(c)];
        code.push_back(')');
        tree.nodes.push_back({tag, -1, std::move(children)});
        codes.push_back(std::move(code));
        return static_cast<int>(tree.nodes.size()) - 1;
    }
};

}  // namespace

std::variant<Cotree, P4Witness> build_cotree(const Graph& g) {
    CotreeBuilder b{g, {}, {}};
    b.tree.n = g.n();
    if (g.n() == 0) return b.tree;
    std::vector<int> all(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) all[static_cast<std::size_t>(v)] = v;
    std::optional<P4Witness> witness;
    int root = b.build(all, witness);
    if (root < 0) return *witness;
    b.tree.root = root;
    return b.tree;
}

std::string canonical_code(const Cotree& t) {
    if (t.root < 0) return "";
    std::vector<std::string> memo(t.nodes.size());
    return code_of(t, t.root, memo);
}

bool validate_cotree(const Cotree& t, std::string* why) {
    auto reject = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    if (t.n == 0) return t.root == -1 && t.nodes.empty() ? true : reject("empty tree must have no nodes");
    if (t.root < 0 || t.root >= static_cast<int>(t.nodes.size())) return reject("bad root index");
    std::vector<char> leaf_seen(static_cast<std::size_t>(t.n), 0);
    std::vector<std::string> memo(t.nodes.size());
    std::vector<char> on_path(t.nodes.size(), 0);

    auto walk = [&](auto&& self, int idx) -> bool {
        if (idx < 0 || idx >= static_cast<int>(t.nodes.size())) return reject("bad child index");
        if (on_path[static_cast<std::size_t>(idx)]) return reject("cycle in tree");
        on_path[static_cast<std::size_t>(idx)] = 1;
        const CotreeNode& nd = t.nodes[static_cast<std::size_t>(idx)];
        if (nd.tag == CotreeNode::Tag::Leaf) {
            if (!nd.children.empty()) return reject("leaf with children");
            if (nd.vertex < 0 || nd.vertex >= t.n) return reject("leaf vertex out of range");
            if (leaf_seen[static_cast<std::size_t>(nd.vertex)]) return reject("repeated leaf vertex");
            leaf_seen[static_cast<std::size_t>(nd.vertex)] = 1;
        } else {
            if (nd.children.size() < 2) return reject("internal node with < 2 children");
            for (int c : nd.children) {
                const CotreeNode& ch = t.nodes[static_cast<std::size_t>(c)];
                if (ch.tag == nd.tag) return reject("UNION/JOIN alternation violated");
                if (!self(self, c)) return false;
            }
            for (std::size_t i = 0; i + 1 < nd.children.size(); ++i)
                if (code_of(t, nd.children[i], memo) > code_of(t, nd.children[i + 1], memo))
                    return reject("children not in canonical order");
        }
        return true;
    };
    if (!walk(walk, t.root)) return false;
    for (int v = 0; v < t.n; ++v)
        if (!leaf_seen[static_cast<std::size_t>(v)]) return reject("vertex missing from leaves");
    return true;
}

namespace {

void collect_leaves(const Cotree& t, int idx, std::vector<int>& out) {
    const CotreeNode& nd = t.nodes[static_cast<std::size_t>(idx)];
    if (nd.tag == CotreeNode::Tag::Leaf) {
        out.push_back(nd.vertex);
        return;
    }
    for (int c : nd.children) collect_leaves(t, c, out);
}

}  // namespace

Graph cotree_to_graph(const Cotree& t) {
    std::string why;
    if (!validate_cotree(t, &why)) throw InvalidArgument("cotree_to_graph: invalid cotree: " + why);
    GraphBuilder b(t.n);
    if (t.root < 0) return b.build();
    auto walk = [&](auto&& self, int idx) -> std::vector<int> {
        const CotreeNode& nd = t.nodes[static_cast<std::size_t>(idx)];
        if (nd.tag == CotreeNode::Tag::Leaf) return {nd.vertex};
        std::vector<std::vector<int>> groups;
        for (int c : nd.children) groups.push_back(self(self, c));
        if (nd.tag == CotreeNode::Tag::Join) {
            for (std::size_t i = 0; i < groups.size(); ++i)
                for (std::size_t j = i + 1; j < groups.size(); ++j)
                    for (int u : groups[i])
                        for (int v : groups[j]) b.add_edge(u, v);
        }
        std::vector<int> flat;
        for (auto& grp : groups) flat.insert(flat.end(), grp.begin(), grp.end());
        return flat;
    };
    walk(walk, t.root);
    return b.build();
}

Cotree random_cotree(int leaves, std::mt19937_64& rng) {
    if (leaves < 1) throw InvalidArgument("random_cotree: needs leaves >= 1");
    Cotree t;
    t.n = leaves;
    int next_vertex = 0;
    auto gen = [&](auto&& self, int count, CotreeNode::Tag tag) -> int {
        if (count == 1) {
            t.nodes.push_back({CotreeNode::Tag::Leaf, next_vertex++, {}});
            return static_cast<int>(t.nodes.size()) - 1;
        }
        int max_parts = std::min(count, 4);
        int k = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_parts - 1));
        std::vector<int> sizes;
        int left = count;
        for (int i = 0; i < k - 1; ++i) {
            int hi = left - (k - i - 1);  // leave >= 1 for each later slot
            int pick = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(hi));
            int even = std::max(1, left / (k - i));
            // average with the even split so depth stays logarithmic
            int sz = std::clamp((pick + even) / 2, 1, hi);
            sizes.push_back(sz);
            left -= sz;
        }
        sizes.push_back(left);
        CotreeNode::Tag child_tag =
            tag == CotreeNode::Tag::Union ? CotreeNode::Tag::Join : CotreeNode::Tag::Union;
        std::vector<int> children;
        for (int sz : sizes) children.push_back(self(self, sz, child_tag));
        t.nodes.push_back({tag, -1, std::move(children)});
        return static_cast<int>(t.nodes.size()) - 1;
    };
    CotreeNode::Tag root_tag = (rng() & 1) ? CotreeNode::Tag::Union : CotreeNode::Tag::Join;
    t.root = gen(gen, leaves, root_tag);
    // restore the canonical child order the type promises
    std::vector<std::string> memo(t.nodes.size());
    for (auto& nd : t.nodes) {
        if (nd.tag == CotreeNode::Tag::Leaf) continue;
        std::sort(nd.children.begin(), nd.children.end(), [&](int x, int y) {
            return code_of(t, x, memo) < code_of(t, y, memo);
        });
    }
    return t;
}

namespace {

void align_cotrees(const Cotree& ta, int na, const Cotree& tb, int nb,
                   std::vector<std::string>& memo_a, std::vector<std::string>& memo_b,
                   std::vector<int>& image) {
    const CotreeNode& a = ta.nodes[static_cast<std::size_t>(na)];
    const CotreeNode& b = tb.nodes[static_cast<std::size_t>(nb)];
    if (a.tag == CotreeNode::Tag::Leaf) {
        image[static_cast<std::size_t>(a.vertex)] = b.vertex;
        return;
    }
    // children sorted by code on both sides; equal parent codes make the
    // i-th codes match pairwise
    auto sorted_children = [](const Cotree& t, const CotreeNode& nd, std::vector<std::string>& memo) {
        std::vector<int> ch = nd.children;
        std::sort(ch.begin(), ch.end(),
                  [&](int x, int y) { return code_of(t, x, memo) < code_of(t, y, memo); });
        return ch;
    };
    std::vector<int> ca = sorted_children(ta, a, memo_a);
    std::vector<int> cb = sorted_children(tb, b, memo_b);
    if (ca.size() != cb.size()) throw Error("cograph_iso: internal error, child count mismatch");
    for (std::size_t i = 0; i < ca.size(); ++i)
        align_cotrees(ta, ca[i], tb, cb[i], memo_a, memo_b, image);
}

}  // namespace

IsoResult cograph_iso(const Graph& a, const Graph& b) {
    auto ra = build_cotree(a);
    if (auto* p4 = std::get_if<P4Witness>(&ra))
        throw PreconditionError("cograph_iso: first input is not a cograph (induced P4)",
                                std::vector<int>(p4->begin(), p4->end()));
    auto rb = build_cotree(b);
    if (auto* p4 = std::get_if<P4Witness>(&rb))
        throw PreconditionError("cograph_iso: second input is not a cograph (induced P4)",
                                std::vector<int>(p4->begin(), p4->end()));
    if (a.n() != b.n()) return IsoResult::no("vertex_count");
    if (a.n() == 0) return IsoResult::yes(VertexMapping{});

    const Cotree& ta = std::get<Cotree>(ra);
    const Cotree& tb = std::get<Cotree>(rb);
    std::vector<std::string> memo_a(ta.nodes.size()), memo_b(tb.nodes.size());
    if (code_of(ta, ta.root, memo_a) != code_of(tb, tb.root, memo_b))
        return IsoResult::no("canonical_code");

    std::vector<int> image(static_cast<std::size_t>(a.n()), -1);
    align_cotrees(ta, ta.root, tb, tb.root, memo_a, memo_b, image);
    VertexMapping m{std::move(image)};
    if (!is_isomorphism(a, b, m))
        throw Error("cograph_iso: internal error, mapping failed verification");
    return IsoResult::yes(std::move(m));
}

}  // namespace giclass
