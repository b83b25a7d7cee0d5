#include "giclass/modular.hpp"

#include <algorithm>

#include "giclass/cograph.hpp"

namespace giclass {

namespace {

// Minimal module of h containing {a, b}: any module containing a set must
// also contain every vertex that distinguishes the set, so adding splitters
// to a fixpoint gives the smallest one.
std::vector<char> module_closure(const Graph& h, int a, int b) {
    std::vector<char> in(static_cast<std::size_t>(h.n()), 0);
    in[static_cast<std::size_t>(a)] = in[static_cast<std::size_t>(b)] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < h.n(); ++x) {
            if (in[static_cast<std::size_t>(x)]) continue;
            int base = -1;
            bool splits = false;
            for (int v = 0; v < h.n() && !splits; ++v) {
                if (!in[static_cast<std::size_t>(v)]) continue;
                int edge = h.adj(x, v) ? 1 : 0;
                if (base < 0)
                    base = edge;
                else if (base != edge)
                    splits = true;
            }
            if (splits) {
                in[static_cast<std::size_t>(x)] = 1;
                changed = true;
            }
        }
    }
    return in;
}

// Maximal proper modules of a connected, co-connected graph (Gallai: they
// partition the vertices). Pair closures are modules; overlapping modules
// union to modules, and in this branch the union stays proper, so merging
// closures to a fixpoint yields exactly the maximal ones.
std::vector<std::vector<int>> maximal_proper_modules(const Graph& h) {
    int n = h.n();
    std::vector<std::vector<char>> sets;

    auto same_set = [&](int a, int b) {
        for (const auto& s : sets)
            if (s[static_cast<std::size_t>(a)] && s[static_cast<std::size_t>(b)]) return true;
        return false;
    };

    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (same_set(a, b)) continue;
            std::vector<char> cl = module_closure(h, a, b);
            int size = static_cast<int>(std::count(cl.begin(), cl.end(), 1));
            if (size == n) continue;  // no proper module holds this pair
            // merge with everything it overlaps
            bool merged = true;
            while (merged) {
                merged = false;
                for (std::size_t i = 0; i < sets.size(); ++i) {
                    bool overlap = false;
                    for (int v = 0; v < n && !overlap; ++v)
                        if (cl[static_cast<std::size_t>(v)] && sets[i][static_cast<std::size_t>(v)])
                            overlap = true;
                    if (!overlap) continue;
                    for (int v = 0; v < n; ++v)
                        if (sets[i][static_cast<std::size_t>(v)]) cl[static_cast<std::size_t>(v)] = 1;
                    sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(i));
                    merged = true;
                    break;
                }
            }
            if (std::count(cl.begin(), cl.end(), 1) == n)
                throw Error("maximal_proper_modules: internal error, overlapping modules cover V "
                            "in a connected co-connected graph");
            sets.push_back(std::move(cl));
        }
    }

    std::vector<std::vector<int>> modules;
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (const auto& s : sets) {
        std::vector<int> m;
        for (int v = 0; v < n; ++v) {
            if (!s[static_cast<std::size_t>(v)]) continue;
            if (covered[static_cast<std::size_t>(v)])
                throw Error("maximal_proper_modules: internal error, modules not disjoint");
            covered[static_cast<std::size_t>(v)] = 1;
            m.push_back(v);
        }
        modules.push_back(std::move(m));
    }
    for (int v = 0; v < n; ++v)
        if (!covered[static_cast<std::size_t>(v)]) modules.push_back({v});
    std::sort(modules.begin(), modules.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) { return x[0] < y[0]; });
    return modules;
}

struct MDBuilder {
    const Graph& g;
    MDTree tree;

    int build(const std::vector<int>& sub) {
        if (sub.size() == 1) {
            tree.nodes.push_back({MDNode::Tag::Leaf, sub[0], {}, Graph()});
            return static_cast<int>(tree.nodes.size()) - 1;
        }
        auto parts = detail::connected_parts(g, sub, false);
        if (parts.size() >= 2) return internal(MDNode::Tag::Union, parts, Graph());
        parts = detail::connected_parts(g, sub, true);
        if (parts.size() >= 2) return internal(MDNode::Tag::Join, parts, Graph());

        // prime: quotient on the maximal proper modules
        Graph h = induced_subgraph(g, sub);
        auto local_modules = maximal_proper_modules(h);
        std::vector<std::vector<int>> module_vertices;
        for (const auto& m : local_modules) {
            std::vector<int> orig;
            for (int v : m) orig.push_back(sub[static_cast<std::size_t>(v)]);
            module_vertices.push_back(std::move(orig));
        }
        int q = static_cast<int>(local_modules.size());
        GraphBuilder qb(q);
        for (int i = 0; i < q; ++i) {
            for (int j = i + 1; j < q; ++j) {
                bool edge = h.adj(local_modules[static_cast<std::size_t>(i)][0],
                                  local_modules[static_cast<std::size_t>(j)][0]);
                // modules see each other uniformly; anything else is a bug
                for (int x : local_modules[static_cast<std::size_t>(i)])
                    for (int y : local_modules[static_cast<std::size_t>(j)])
                        if (h.adj(x, y) != edge)
                            throw Error("modular_decomposition: internal error, non-uniform modules");
                if (edge) qb.add_edge(i, j);
            }
        }
        if (q < 4)
            throw Error("modular_decomposition: internal error, prime quotient on < 4 vertices");
        return internal(MDNode::Tag::Prime, module_vertices, qb.build());
    }

    int internal(MDNode::Tag tag, const std::vector<std::vector<int>>& parts, Graph quotient) {
        std::vector<int> children;
        for (const auto& part : parts) children.push_back(build(part));
        tree.nodes.push_back({tag, -1, std::move(children), std::move(quotient)});
        return static_cast<int>(tree.nodes.size()) - 1;
    }
};

}  // namespace

MDTree modular_decomposition(const Graph& g) {
    MDBuilder b{g, {}};
    b.tree.n = g.n();
    if (g.n() == 0) return b.tree;
    std::vector<int> all(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) all[static_cast<std::size_t>(v)] = v;
    b.tree.root = b.build(all);
    return b.tree;
}

namespace {

struct NodeCanon {
    std::string code;
    std::vector<int> canon_children;  // children re-ordered canonically
};

const NodeCanon& canon_of(const MDTree& t, int idx, std::vector<NodeCanon>& memo,
                          std::vector<char>& done) {
    NodeCanon& out = memo[static_cast<std::size_t>(idx)];
    if (done[static_cast<std::size_t>(idx)]) return out;
    const MDNode& nd = t.nodes[static_cast<std::size_t>(idx)];
    switch (nd.tag) {
        case MDNode::Tag::Leaf:
            out.code = "L";
            break;
        case MDNode::Tag::Union:
        case MDNode::Tag::Join: {
            out.canon_children = nd.children;
            std::sort(out.canon_children.begin(), out.canon_children.end(), [&](int x, int y) {
                return canon_of(t, x, memo, done).code < canon_of(t, y, memo, done).code;
            });
            out.code.push_back(nd.tag == MDNode::Tag::Union ? 'U' : 'J');
            out.code.push_back('(');
            for (int c : out.canon_children) out.code += memo[static_cast<std::size_t>(c)].code;
            out.code.push_back(')');
            break;
        }
        case MDNode::Tag::Prime: {
            int q = nd.quotient.n();
            if (q > detail::kSmallCanonMax)
                throw UnsupportedSize("md_canonical_code: prime quotient with " + std::to_string(q) +
                                      " vertices exceeds the exact canonization bound (" +
                                      std::to_string(detail::kSmallCanonMax) + ")");
            // child codes color the quotient vertices; ranks keep the colors
            // isomorphism-invariant
            std::vector<std::string> child_codes;
            for (int c : nd.children) child_codes.push_back(canon_of(t, c, memo, done).code);
            std::vector<std::string> distinct(child_codes);
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            std::vector<int> colors(child_codes.size());
            for (std::size_t i = 0; i < child_codes.size(); ++i)
                colors[i] = static_cast<int>(
                    std::lower_bound(distinct.begin(), distinct.end(), child_codes[i]) -
                    distinct.begin());
            std::uint16_t masks[detail::kSmallCanonMax] = {};
            for (int i = 0; i < q; ++i)
                for (int j = 0; j < q; ++j)
                    if (i != j && nd.quotient.adj(i, j)) masks[i] |= static_cast<std::uint16_t>(1u << j);
            auto canon = detail::canonical_ordering_small(q, masks, colors.data());
            out.code = "P" + std::to_string(q) + "(";
            out.code += detail::graph6_from_bits(q, canon.bits);
            out.code.push_back(';');
            for (int pos = 0; pos < q; ++pos) {
                int child = nd.children[static_cast<std::size_t>(canon.perm[static_cast<std::size_t>(pos)])];
                out.canon_children.push_back(child);
                out.code += memo[static_cast<std::size_t>(child)].code;
            }
            out.code.push_back(')');
            break;
        }
    }
    done[static_cast<std::size_t>(idx)] = 1;
    return out;
}

void align_md(const MDTree& ta, int na, std::vector<NodeCanon>& ca,
              const MDTree& tb, int nb, std::vector<NodeCanon>& cb,
              std::vector<char>& da, std::vector<char>& db, std::vector<int>& image) {
    const MDNode& a = ta.nodes[static_cast<std::size_t>(na)];
    const MDNode& b = tb.nodes[static_cast<std::size_t>(nb)];
    if (a.tag == MDNode::Tag::Leaf) {
        image[static_cast<std::size_t>(a.vertex)] = b.vertex;
        return;
    }
    const auto& kids_a = canon_of(ta, na, ca, da).canon_children;
    const auto& kids_b = canon_of(tb, nb, cb, db).canon_children;
    if (kids_a.size() != kids_b.size())
        throw Error("md_iso: internal error, child count mismatch");
    for (std::size_t i = 0; i < kids_a.size(); ++i)
        align_md(ta, kids_a[i], ca, tb, kids_b[i], cb, da, db, image);
}

}  // namespace

std::string md_canonical_code(const Graph& g) {
    MDTree t = modular_decomposition(g);
    if (t.root < 0) return "";
    std::vector<NodeCanon> memo(t.nodes.size());
    std::vector<char> done(t.nodes.size(), 0);
    return canon_of(t, t.root, memo, done).code;
}

IsoResult md_iso(const Graph& a, const Graph& b) {
    if (a.n() != b.n()) return IsoResult::no("vertex_count");
    if (degree_sequence(a) != degree_sequence(b)) return IsoResult::no("degree_sequence");
    if (a.n() == 0) return IsoResult::yes(VertexMapping{});

    MDTree ta = modular_decomposition(a);
    MDTree tb = modular_decomposition(b);
    std::vector<NodeCanon> ca(ta.nodes.size()), cb(tb.nodes.size());
    std::vector<char> da(ta.nodes.size(), 0), db(tb.nodes.size(), 0);
    if (canon_of(ta, ta.root, ca, da).code != canon_of(tb, tb.root, cb, db).code)
        return IsoResult::no("md_canonical_code");

    std::vector<int> image(static_cast<std::size_t>(a.n()), -1);
    align_md(ta, ta.root, ca, tb, tb.root, cb, da, db, image);
    VertexMapping m{std::move(image)};
    if (!is_isomorphism(a, b, m))
        throw Error("md_iso: internal error, mapping failed verification");
    return IsoResult::yes(std::move(m));
}

}  // namespace giclass
