#include "giclass/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace giclass {

namespace {

int words_for(int n) { return n == 0 ? 0 : (n + 63) / 64; }

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw InvalidArgument(std::string(what) + ": vertex " + std::to_string(v) +
                              " out of range for n=" + std::to_string(n));
}

}  // namespace

Graph::Graph(int n) : n_(n), words_(words_for(n)), bits_(static_cast<std::size_t>(n) * words_for(n), 0) {
    if (n < 0) throw InvalidArgument("graph: negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : Graph(n) {
    for (const auto& [u, v] : edge_list) {
        check_vertex(u, n, "graph edge");
        check_vertex(v, n, "graph edge");
        if (u == v) throw InvalidArgument("graph edge: loop at vertex " + std::to_string(u));
        if (adj(u, v))
            throw InvalidArgument("graph edge: duplicate edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
        set_edge(u, v);
    }
}

void Graph::set_edge(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

int Graph::degree(int v) const {
    check_vertex(v, n_, "degree");
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (int v = 0; v < n_; ++v) {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) total += static_cast<std::size_t>(std::popcount(r[w]));
    }
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adj(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v, n_, "neighbors");
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && adj(v, u)) out.push_back(u);
    return out;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::add_edge(int u, int v) {
    check_vertex(u, g_.n(), "builder edge");
    check_vertex(v, g_.n(), "builder edge");
    if (u == v) throw InvalidArgument("builder edge: loop at vertex " + std::to_string(u));
    g_.set_edge(u, v);
}

Graph complement(const Graph& g) {
    GraphBuilder b(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adj(u, v)) b.add_edge(u, v);
    return b.build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    GraphBuilder out(a.n() + b.n());
    for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
    for (const auto& [u, v] : b.edges()) out.add_edge(a.n() + u, a.n() + v);
    return out.build();
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (int v : vs) {
        check_vertex(v, g.n(), "induced_subgraph");
        if (seen[static_cast<std::size_t>(v)])
            throw InvalidArgument("induced_subgraph: repeated vertex " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = 1;
    }
    GraphBuilder b(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adj(vs[i], vs[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return b.build();
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n())
        throw InvalidArgument("apply_permutation: size mismatch");
    std::vector<char> seen(perm.size(), 0);
    for (int p : perm) {
        check_vertex(p, g.n(), "apply_permutation");
        if (seen[static_cast<std::size_t>(p)])
            throw InvalidArgument("apply_permutation: not a permutation");
        seen[static_cast<std::size_t>(p)] = 1;
    }
    GraphBuilder b(g.n());
    for (const auto& [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
    return b.build();
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> ds(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) ds[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(ds.begin(), ds.end());
    return ds;
}

// ---- graph6 ----

std::string encode_graph6(const Graph& g) {
    std::string out;
    long long n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < g.n(); ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adj(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

namespace {

int g6_byte(const std::string& s, std::size_t at) {
    if (at >= s.size()) throw ParseError("graph6: truncated input", at);
    unsigned char c = static_cast<unsigned char>(s[at]);
    if (c < 63 || c > 126)
        throw ParseError("graph6: byte out of range 63..126", at);
    return c - 63;
}

}  // namespace

Graph decode_graph6(const std::string& bytes) {
    if (bytes.empty()) throw ParseError("graph6: empty input", 0);
    std::size_t at = 0;
    long long n;
    if (g6_byte(bytes, 0) != 63) {
        n = g6_byte(bytes, 0);
        at = 1;
    } else if (bytes.size() > 1 && g6_byte(bytes, 1) != 63) {
        n = 0;
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | g6_byte(bytes, k);
        at = 4;
    } else {
        n = 0;
        for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | g6_byte(bytes, k);
        at = 8;
    }
    if (n > 2000000)
        throw ParseError("graph6: vertex count " + std::to_string(n) + " beyond supported size", 0);
    long long bits_needed = n * (n - 1) / 2;
    std::size_t data_bytes = static_cast<std::size_t>((bits_needed + 5) / 6);
    if (bytes.size() < at + data_bytes) throw ParseError("graph6: truncated input", bytes.size());
    if (bytes.size() > at + data_bytes) throw ParseError("graph6: trailing data", at + data_bytes);

    GraphBuilder b(static_cast<int>(n));
    int u = 0, v = 1;  // walks the triangle in encode order
    for (std::size_t k = 0; k < data_bytes; ++k) {
        int val = g6_byte(bytes, at + k);
        for (int shift = 5; shift >= 0; --shift) {
            int on = (val >> shift) & 1;
            if (v >= n) {
                if (on) throw ParseError("graph6: nonzero padding bit", at + k);
                continue;
            }
            if (on) b.add_edge(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return b.build();
}

// ---- edge list ----

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.n() << ' ' << es.size() << '\n';
    for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

Graph decode_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edge_list;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        long long a, b;
        if (!(ls >> a)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;  // blank line
            throw ParseError("edge list: expected two integers", lineno, ParseError::Unit::Line);
        }
        if (!(ls >> b)) throw ParseError("edge list: expected two integers", lineno, ParseError::Unit::Line);
        std::string rest;
        if (ls >> rest) throw ParseError("edge list: trailing tokens", lineno, ParseError::Unit::Line);
        if (n < 0) {
            n = a;
            m = b;
            if (n < 0 || m < 0) throw ParseError("edge list: negative header value", lineno, ParseError::Unit::Line);
            if (n > 2000000) throw ParseError("edge list: vertex count beyond supported size", lineno, ParseError::Unit::Line);
        } else {
            if (static_cast<long long>(edge_list.size()) >= m)
                throw ParseError("edge list: more edges than the header declares", lineno, ParseError::Unit::Line);
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw ParseError("edge list: endpoint out of range", lineno, ParseError::Unit::Line);
            edge_list.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    if (n < 0) throw ParseError("edge list: empty input", 0, ParseError::Unit::Line);
    if (static_cast<long long>(edge_list.size()) != m)
        throw ParseError("edge list: fewer edges than the header declares", lineno, ParseError::Unit::Line);
    try {
        return Graph(static_cast<int>(n), edge_list);
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("edge list: ") + e.what(), lineno, ParseError::Unit::Line);
    }
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    if (format == GraphFormat::EdgeList) return decode_edge_list(text);

    // take the first non-blank line for graph6; edge lists keep the full text
    std::size_t begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) throw ParseError("graph input: empty", 0);
    if (format == GraphFormat::Auto) {
        std::size_t eol = text.find('\n', begin);
        std::string first = text.substr(begin, eol == std::string::npos ? std::string::npos : eol - begin);
        std::istringstream probe(first);
        long long a, b;
        std::string rest;
        if (probe >> a >> b && !(probe >> rest)) return decode_edge_list(text);
    }
    std::size_t end = text.find_first_of(" \t\r\n", begin);
    std::string token = text.substr(begin, end == std::string::npos ? std::string::npos : end - begin);
    if (end != std::string::npos && text.find_first_not_of(" \t\r\n", end) != std::string::npos)
        throw ParseError("graph6: trailing data", end);
    return decode_graph6(token);
}

bool VertexMapping::injective() const {
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool VertexMapping::within(int target_n) const {
    for (int v : image)
        if (v < 0 || v >= target_n) return false;
    return true;
}

bool is_isomorphism(const Graph& a, const Graph& b, const VertexMapping& m) {
    if (a.n() != b.n() || m.size() != a.n()) return false;
    if (!m.within(b.n()) || !m.injective()) return false;
    for (int u = 0; u < a.n(); ++u)
        for (int v = u + 1; v < a.n(); ++v)
            if (a.adj(u, v) != b.adj(m.image[u], m.image[v])) return false;
    return true;
}

bool is_induced_embedding(const Graph& pattern, const Graph& host, const VertexMapping& m) {
    if (m.size() != pattern.n()) return false;
    if (!m.within(host.n()) || !m.injective()) return false;
    for (int u = 0; u < pattern.n(); ++u)
        for (int v = u + 1; v < pattern.n(); ++v)
            if (pattern.adj(u, v) != host.adj(m.image[u], m.image[v])) return false;
    return true;
}

}  // namespace giclass
