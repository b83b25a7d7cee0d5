#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "giclass/graph.hpp"
#include "giclass/iso.hpp"
#include "giclass/subgraph.hpp"

namespace giclass {

// Split partition of a graph: clique vertices pairwise adjacent, independent
// vertices pairwise non-adjacent, together covering every vertex.
struct SplitPartition {
    std::vector<int> clique;       // ascending
    std::vector<int> independent;  // ascending
};

// Degree-criterion split test: with degrees sorted descending, the graph is
// split iff the top-m degrees (m the largest index with d_i >= i-1) sum to
// m(m-1) plus the rest. The exhibited partition is verified before return.
std::optional<SplitPartition> split_partition(const Graph& g);
bool is_split(const Graph& g);

// Incidence construction into split graphs: the original vertices (ids kept)
// become a clique; each edge {u,v} gains one new vertex adjacent exactly to
// u and v, the new vertices numbered n, n+1, ... in lexicographic edge
// order. Isomorphism-preserving in both directions on the domain n >= 2 with
// minimum degree >= 1 (PreconditionError outside it; isolated vertices break
// the backward direction).
Graph split_incidence_reduce(const Graph& g);

// A named graph transformation whose images land in a fixed target class.
// transform throws PreconditionError outside its input domain.
struct Reduction {
    std::string name;
    std::string summary;
    ClassSpec target_class;
    Graph (*transform)(const Graph&);
};

const std::vector<Reduction>& reductions();
const Reduction* find_reduction(const std::string& name);  // nullptr when absent

// One corpus pair's worth of evidence from verify_reduction.
struct ReductionCheck {
    std::string input1, input2;  // graph6 of the pair
    bool images_in_target = false;
    std::optional<bool> inputs_isomorphic;   // unset when the pair was skipped
    std::optional<bool> outputs_isomorphic;  // unset when the pair was skipped
    bool agreed = false;                     // the two verdicts coincided
    std::optional<std::string> skipped;      // reason the comparison was not run
};

struct ReductionReport {
    std::string reduction;
    int pairs_checked = 0;
    int pairs_skipped = 0;
    int violations = 0;  // membership failures + disagreements among checked pairs
    std::vector<ReductionCheck> pairs;

    bool clean() const { return violations == 0; }
};

// Empirical correctness harness: transforms every corpus pair, checks both
// images against the reduction's target class, and compares the exhaustive
// isomorphism verdict before and after. Pairs whose images exceed
// oracle_bound are recorded as skipped, not failed. A corpus graph outside
// the reduction's domain is an error (PreconditionError naming the pair).
ReductionReport verify_reduction(const Reduction& r,
                                 const std::vector<std::pair<Graph, Graph>>& corpus,
                                 int oracle_bound = kOracleSoftBound);

// One line per pair plus a summary line; matches the report structure the
// CLI emits as JSON.
std::string to_text(const ReductionReport& report);

}  // namespace giclass
