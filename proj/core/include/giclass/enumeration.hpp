#pragma once

#include <vector>

#include "giclass/graph.hpp"

namespace giclass {

// Every graph on exactly n vertices up to isomorphism, one representative
// per class: the decoded canonical form, so the list is independent of
// enumeration order. Sorted by edge count, then by canonical encoding.
// Exhausts all 2^C(n,2) labelings; n is capped at 8 (and 7 is the practical
// limit — 2^21 labelings).
std::vector<Graph> all_graphs_up_to_iso(int n);

// The same class count via pairwise exhaustive isomorphism tests against a
// growing representative list — no canonical forms involved, so the two
// routes cross-check each other. Quadratic in the class count; capped at
// n <= 5.
int count_iso_classes_pairwise(int n);

}  // namespace giclass
