#pragma once

#include <array>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "giclass/graph.hpp"
#include "giclass/iso.hpp"

namespace giclass {

// Cotree: the decomposition tree of a P4-free graph. Leaves biject with the
// graph's vertices; internal nodes have >= 2 children and alternate
// UNION/JOIN along every root-to-leaf path. Two vertices are adjacent
// exactly when their lowest common ancestor is a JOIN node.
struct CotreeNode {
    enum class Tag { Leaf, Union, Join };
    Tag tag = Tag::Leaf;
    int vertex = -1;            // leaves only
    std::vector<int> children;  // indices into Cotree::nodes, sorted by canonical code
};

struct Cotree {
    int n = 0;
    std::vector<CotreeNode> nodes;
    int root = -1;  // -1 only for n == 0
};

// The four vertices of an induced P4, in path order.
using P4Witness = std::array<int, 4>;

// Decomposes by the standard recursion: disconnected -> UNION over
// components, co-disconnected -> JOIN over co-components, single vertex ->
// leaf. When neither applies the graph is not a cograph and the result is a
// verified induced P4 instead. Complement connectivity is tested by
// traversal over the implicit complement; the complement is never built.
std::variant<Cotree, P4Witness> build_cotree(const Graph& g);

// Serialized canonical form: leaves are "L", internal nodes are the tag
// byte plus their children's codes in sorted order inside parentheses.
// Equal codes <=> isomorphic graphs.
std::string canonical_code(const Cotree& t);

// Structural invariants (arity, alternation, leaf bijection, child order).
bool validate_cotree(const Cotree& t, std::string* why = nullptr);

// Cotree -> concrete graph via the LCA rule.
Graph cotree_to_graph(const Cotree& t);

// Random cotree with the given number of leaves (children counts 2..4,
// random near-even splits). Deterministic for a fixed generator state.
Cotree random_cotree(int leaves, std::mt19937_64& rng);

// Isomorphism for cographs via cotree codes; the mapping is read off the
// aligned cotrees and verified edge by edge. Non-cograph input throws
// PreconditionError carrying the induced P4.
IsoResult cograph_iso(const Graph& a, const Graph& b);

namespace detail {

// Vertex sets of the connected parts of the subgraph induced by `sub`, on g
// itself or on its implicit complement (complement neighborhoods are derived
// by bit operations; no complement graph is built). Each part is sorted;
// parts appear by smallest member. Shared by the cotree and modular
// decompositions.
std::vector<std::vector<int>> connected_parts(const Graph& g, const std::vector<int>& sub,
                                              bool complement_side);

}  // namespace detail

}  // namespace giclass
