#include "giclass/expr.hpp"

#include <algorithm>
#include <cctype>

namespace giclass {

GraphExpr GraphExpr::path(int k) {
    if (k < 1) throw InvalidArgument("path: needs k >= 1");
    return GraphExpr{Kind::Path, k, {}};
}

GraphExpr GraphExpr::complete(int k) {
    if (k < 0) throw InvalidArgument("complete: needs k >= 0");
    return GraphExpr{Kind::Complete, k, {}};
}

GraphExpr GraphExpr::independent(int k) {
    if (k < 0) throw InvalidArgument("independent: needs k >= 0");
    return GraphExpr{Kind::Independent, k, {}};
}

GraphExpr GraphExpr::cycle(int k) {
    if (k < 3) throw InvalidArgument("cycle: needs k >= 3");
    return GraphExpr{Kind::Cycle, k, {}};
}

GraphExpr GraphExpr::union_of(std::vector<GraphExpr> parts) {
    std::vector<GraphExpr> flat;
    for (auto& p : parts) {
        if (p.kind == Kind::Union)
            for (auto& c : p.children) flat.push_back(std::move(c));
        else
            flat.push_back(std::move(p));
    }
    if (flat.empty()) throw InvalidArgument("union_of: no parts");
    if (flat.size() == 1) return std::move(flat.front());
    GraphExpr e;
    e.kind = Kind::Union;
    e.size = 0;
    e.children = std::move(flat);
    return e;
}

GraphExpr GraphExpr::complement_of(GraphExpr inner) {
    GraphExpr e;
    e.kind = Kind::Complement;
    e.size = 0;
    e.children.push_back(std::move(inner));
    return e;
}

int GraphExpr::vertex_count() const {
    switch (kind) {
        case Kind::Path:
        case Kind::Complete:
        case Kind::Independent:
        case Kind::Cycle:
            return size;
        case Kind::Complement:
            return children[0].vertex_count();
        case Kind::Union: {
            int total = 0;
            for (const auto& c : children) total += c.vertex_count();
            return total;
        }
    }
    return 0;
}

std::string print_expr(const GraphExpr& e) {
    switch (e.kind) {
        case GraphExpr::Kind::Path:
            return "P" + std::to_string(e.size);
        case GraphExpr::Kind::Complete:
            return "K" + std::to_string(e.size);
        case GraphExpr::Kind::Independent:
            return "I" + std::to_string(e.size);
        case GraphExpr::Kind::Cycle:
            return "C" + std::to_string(e.size);
        case GraphExpr::Kind::Complement:
            return "co(" + print_expr(e.children[0]) + ")";
        case GraphExpr::Kind::Union: {
            std::string out;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += '+';
                out += print_expr(e.children[i]);
            }
            return out;
        }
    }
    return "";
}

namespace {

struct ExprParser {
    const std::string& s;
    std::size_t at = 0;

    void skip_ws() {
        while (at < s.size() && std::isspace(static_cast<unsigned char>(s[at]))) ++at;
    }

    [[noreturn]] void fail(const std::string& why) { throw ParseError("expression: " + why, at); }

    int number() {
        std::size_t start = at;
        while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) ++at;
        if (at == start) fail("expected a number");
        if (at - start > 7) fail("number too large");
        return std::stoi(s.substr(start, at - start));
    }

    void expect(char c) {
        skip_ws();
        if (at >= s.size() || s[at] != c) fail(std::string("expected '") + c + "'");
        ++at;
    }

    GraphExpr term() {
        skip_ws();
        if (at >= s.size()) fail("expected a term");
        std::size_t start = at;
        char c = s[at];
        if (c == 'c') {
            if (s.compare(at, 2, "co") != 0) fail("expected 'co('");
            at += 2;
            expect('(');
            GraphExpr inner = expr();
            expect(')');
            return GraphExpr::complement_of(std::move(inner));
        }
        if (c != 'P' && c != 'K' && c != 'I' && c != 'C')
            fail("expected 'P', 'K', 'I', 'C' or 'co('");
        ++at;
        int k = number();
        try {
            switch (c) {
                case 'P': return GraphExpr::path(k);
                case 'K': return GraphExpr::complete(k);
                case 'I': return GraphExpr::independent(k);
                default: return GraphExpr::cycle(k);
            }
        } catch (const InvalidArgument& e) {
            at = start;
            fail(e.what());
        }
    }

    GraphExpr expr() {
        std::vector<GraphExpr> parts;
        parts.push_back(term());
        for (;;) {
            skip_ws();
            if (at < s.size() && s[at] == '+') {
                ++at;
                parts.push_back(term());
            } else {
                break;
            }
        }
        return GraphExpr::union_of(std::move(parts));
    }
};

}  // namespace

GraphExpr parse_expr(const std::string& text) {
    ExprParser p{text};
    GraphExpr e = p.expr();
    p.skip_ws();
    if (p.at != text.size()) throw ParseError("expression: trailing input", p.at);
    return e;
}

Graph realize(const GraphExpr& e) {
    switch (e.kind) {
        case GraphExpr::Kind::Path: {
            GraphBuilder b(e.size);
            for (int i = 0; i + 1 < e.size; ++i) b.add_edge(i, i + 1);
            return b.build();
        }
        case GraphExpr::Kind::Complete: {
            GraphBuilder b(e.size);
            for (int i = 0; i < e.size; ++i)
                for (int j = i + 1; j < e.size; ++j) b.add_edge(i, j);
            return b.build();
        }
        case GraphExpr::Kind::Independent:
            return Graph(e.size, {});
        case GraphExpr::Kind::Cycle: {
            GraphBuilder b(e.size);
            for (int i = 0; i + 1 < e.size; ++i) b.add_edge(i, i + 1);
            b.add_edge(e.size - 1, 0);
            return b.build();
        }
        case GraphExpr::Kind::Complement:
            return complement(realize(e.children[0]));
        case GraphExpr::Kind::Union: {
            Graph acc(0, {});
            for (const auto& c : e.children) acc = disjoint_union(acc, realize(c));
            return acc;
        }
    }
    return Graph(0, {});
}

GraphExpr normalized(const GraphExpr& e) {
    switch (e.kind) {
        case GraphExpr::Kind::Complement:
            return GraphExpr::complement_of(normalized(e.children[0]));
        case GraphExpr::Kind::Union: {
            std::vector<GraphExpr> kids;
            for (const auto& c : e.children) kids.push_back(normalized(c));
            GraphExpr flat = GraphExpr::union_of(std::move(kids));
            if (flat.kind == GraphExpr::Kind::Union)
                std::sort(flat.children.begin(), flat.children.end(),
                          [](const GraphExpr& a, const GraphExpr& b) {
                              return print_expr(a) < print_expr(b);
                          });
            return flat;
        }
        default:
            return e;
    }
}

namespace {

// partitions of `total` into at most max_parts parts, largest first,
// in descending lexicographic order ({7} before {6,1} before {5,2} ...)
void partitions_into(int total, int max_parts, int max_first, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    if (max_parts == 0) return;
    for (int first = std::min(total, max_first); first >= 1; --first) {
        cur.push_back(first);
        partitions_into(total - first, max_parts - 1, first, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<GraphExpr> enumerate_path_union_complements(int max_vertices, int max_paths) {
    if (max_vertices < 1 || max_paths < 1)
        throw InvalidArgument("enumerate_path_union_complements: bounds must be >= 1");
    std::vector<GraphExpr> out;
    for (int total = 1; total <= max_vertices; ++total) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions_into(total, max_paths, total, cur, parts);
        for (const auto& p : parts) {
            std::vector<GraphExpr> paths;
            for (int len : p) paths.push_back(GraphExpr::path(len));
            out.push_back(GraphExpr::complement_of(GraphExpr::union_of(std::move(paths))));
        }
    }
    return out;
}

std::vector<GraphExpr> exception_set() {
    return {
        GraphExpr::union_of({GraphExpr::path(4), GraphExpr::complete(1)}),
        GraphExpr::union_of({GraphExpr::complete(2), GraphExpr::independent(2)}),
        GraphExpr::union_of({GraphExpr::path(3), GraphExpr::independent(2)}),
    };
}

bool is_basic(const Graph& g) {
    std::size_t m = g.edge_count();
    return m == 0 || m == static_cast<std::size_t>(g.n()) * (g.n() - 1) / 2;
}

}  // namespace giclass
