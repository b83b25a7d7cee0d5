#pragma once

#include <string>
#include <vector>

#include "giclass/graph.hpp"

namespace giclass {

// Symbolic description of a small named graph, the working currency for
// forbidden subgraphs. Grammar (parse_expr / print_expr):
//
//   expr := term ('+' term)*            disjoint union
//   term := 'co' '(' expr ')'           complement
//         | 'P' k | 'K' k | 'I' k | 'C' k
//
// Leaves: Path(k >= 1), Complete(k >= 0), Independent(k >= 0),
// Cycle(k >= 3). Union always has >= 2 children.
struct GraphExpr {
    enum class Kind { Path, Complete, Independent, Cycle, Union, Complement };

    Kind kind = Kind::Path;
    int size = 1;                      // leaves only
    std::vector<GraphExpr> children;   // Union (>= 2) or Complement (exactly 1)

    static GraphExpr path(int k);
    static GraphExpr complete(int k);
    static GraphExpr independent(int k);
    static GraphExpr cycle(int k);
    static GraphExpr union_of(std::vector<GraphExpr> parts);  // flattens nested unions
    static GraphExpr complement_of(GraphExpr inner);

    bool operator==(const GraphExpr&) const = default;

    int vertex_count() const;
};

std::string print_expr(const GraphExpr& e);
GraphExpr parse_expr(const std::string& text);  // ParseError with character position

// Concrete graph for an expression. Vertex numbering is fixed: leaves use
// 0..k-1 in path/cycle order, Union concatenates children left to right,
// Complement keeps numbering — so realize(co(e)) == complement(realize(e))
// exactly, not just up to isomorphism.
Graph realize(const GraphExpr& e);

// Flatten unions and sort union children by printed form; the normal form
// used for structural equality of expressions.
GraphExpr normalized(const GraphExpr& e);

// All complements of disjoint unions of at most max_paths paths with at most
// max_vertices vertices in total, ordered by total vertex count and then by
// the part lists (largest first part first within a count).
std::vector<GraphExpr> enumerate_path_union_complements(int max_vertices, int max_paths);

// The three forbidden graphs whose pairings with the catalog above make up
// the unresolved region of the classification: P4+K1, K2+I2, P3+I2.
std::vector<GraphExpr> exception_set();

// Complete or edgeless graphs. Pairs containing one of these fall outside
// the classification's scope and classify as Unknown.
bool is_basic(const Graph& g);

}  // namespace giclass
