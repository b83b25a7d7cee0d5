#pragma once

#include <string>
#include <vector>

#include "giclass/graph.hpp"
#include "giclass/iso.hpp"

namespace giclass {

// Modular decomposition tree. UNION/JOIN nodes are the cotree cases; PRIME
// nodes carry the quotient on their children's modules (quotient vertex i
// stands for children[i]). Leaves biject with the graph's vertices.
struct MDNode {
    enum class Tag { Leaf, Union, Join, Prime };
    Tag tag = Tag::Leaf;
    int vertex = -1;            // leaves only
    std::vector<int> children;  // indices into MDTree::nodes
    Graph quotient;             // prime only
};

struct MDTree {
    int n = 0;
    std::vector<MDNode> nodes;
    int root = -1;
};

// Recursive decomposition: disconnected -> UNION, co-disconnected -> JOIN,
// otherwise the maximal proper modules (computed by pairwise closure) form
// the prime quotient. Quadratic-and-change per level; meant for graphs up
// to the low thousands, not a linear-time implementation.
MDTree modular_decomposition(const Graph& g);

// Exact canonical form built on the tree: UNION/JOIN nodes sort child codes,
// prime quotients get canonized exactly with child codes as vertex colors.
// Equal codes <=> isomorphic graphs. Prime quotients beyond the small-canon
// engine bound (11) raise UnsupportedSize; the classes dispatched here keep
// their quotients far below it.
std::string md_canonical_code(const Graph& g);

// Isomorphism decided through md_canonical_code, with the mapping read off
// the two trees' canonical alignments and verified edge by edge. This is an
// independent route from brute_force_iso: different algorithm, shared
// verdict on every input.
IsoResult md_iso(const Graph& a, const Graph& b);

}  // namespace giclass
