#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "giclass/errors.hpp"

namespace giclass {

// Immutable simple undirected graph on vertex ids 0..n-1.
// Adjacency is one bitset per vertex (packed 64-bit words), symmetric and
// irreflexive by construction. n = 0 is a legal graph.
class Graph {
public:
    Graph() = default;

    // Validating constructor: ids must be in range, no loops, no repeated
    // edges (in either orientation). Throws InvalidArgument.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int n() const { return n_; }
    int words() const { return words_; }

    bool adj(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    // Packed neighborhood bitset of v; words() words.
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    int degree(int v) const;
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
    std::vector<int> neighbors(int v) const;         // ascending

    // Labeled equality (same n, same adjacency matrix).
    bool operator==(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    friend class GraphBuilder;
    explicit Graph(int n);  // edgeless, for builders and internal ops

    void set_edge(int u, int v);

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Assembles a graph edge by edge without the validating constructor's
// duplicate-edge bookkeeping. add_edge is idempotent; loops and bad ids
// still throw.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    void add_edge(int u, int v);
    Graph build() { return std::move(g_); }

private:
    Graph g_;
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);  // b's ids shifted by a.n()

// Subgraph induced by `vs`; vertex i of the result is vs[i]. Repeated or
// out-of-range ids throw InvalidArgument.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);

// Relabeled copy: vertex v of g becomes perm[v]. perm must be a permutation
// of 0..n-1 (InvalidArgument otherwise).
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

std::vector<int> degree_sequence(const Graph& g);  // ascending multiset

// graph6: length prefix N(n) (all three forms), then the upper triangle in
// column order (0,1),(0,2),(1,2),(0,3),... packed 6 bits per byte, MSB
// first, zero padded, each byte offset by 63.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& bytes);  // ParseError with byte offset

// Edge list text: first line "n m", then m lines "u v".
std::string encode_edge_list(const Graph& g);
Graph decode_edge_list(const std::string& text);

enum class GraphFormat { Auto, Graph6, EdgeList };

// Parses either format. Auto sniffs: a first line of two integers is an
// edge list, anything else is treated as graph6 (the alphabets are disjoint,
// graph6 bytes are all in '?'..'~').
Graph parse_graph(const std::string& text, GraphFormat format = GraphFormat::Auto);

// Map from vertices 0..size()-1 of a source graph into some target graph.
struct VertexMapping {
    std::vector<int> image;  // image[v] = target vertex for source vertex v

    int size() const { return static_cast<int>(image.size()); }
    bool injective() const;
    bool within(int target_n) const;  // all image values in [0, target_n)
};

// Full edge-by-edge check that m is an isomorphism a -> b.
bool is_isomorphism(const Graph& a, const Graph& b, const VertexMapping& m);

// Full check that m embeds `pattern` into `host` as an *induced* subgraph.
bool is_induced_embedding(const Graph& pattern, const Graph& host, const VertexMapping& m);

}  // namespace giclass
