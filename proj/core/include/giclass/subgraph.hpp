#pragma once

#include <optional>
#include <vector>

#include "giclass/expr.hpp"
#include "giclass/graph.hpp"

namespace giclass {

// A hereditary graph class given by its forbidden induced subgraphs.
struct ClassSpec {
    std::vector<GraphExpr> forbidden;
    std::vector<Graph> realized;  // cached realizations, same order

    // Throws InvalidArgument when the list is empty or any forbidden graph
    // has no vertices.
    explicit ClassSpec(std::vector<GraphExpr> forbidden_list);
};

// First induced copy of `pattern` in `host` (deterministic: the search
// places the most constrained pattern vertex first and tries host vertices
// in ascending id order). The returned mapping is re-verified before it is
// handed out. nullopt when no copy exists.
std::optional<VertexMapping> find_induced(const Graph& host, const Graph& pattern);

bool is_member(const Graph& g, const ClassSpec& cls);

// Membership check that reports which forbidden graph occurs and where.
struct ForbiddenWitness {
    std::size_t which;     // index into cls.forbidden
    VertexMapping where;   // induced embedding into g
};
std::optional<ForbiddenWitness> find_forbidden(const Graph& g, const ClassSpec& cls);

}  // namespace giclass
