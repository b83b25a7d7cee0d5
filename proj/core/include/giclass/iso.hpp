#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "giclass/graph.hpp"

namespace giclass {

// Vertex partition produced by refinement. Color ids are ranks of the sorted
// distinct signatures, so they are isomorphism-invariant, not an artifact of
// vertex numbering.
struct Coloring {
    std::vector<int> color;  // per vertex
    int num_colors = 0;
};

// 1-dimensional Weisfeiler-Leman color refinement run to its stable
// partition. The overload with `initial` refines a caller-supplied coloring
// (ids get rank-normalized first).
Coloring color_refinement(const Graph& g);
Coloring color_refinement(const Graph& g, const Coloring& initial);

enum class IsoVerdict { Isomorphic, NonIsomorphic };

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::NonIsomorphic;
    std::optional<VertexMapping> mapping;  // Isomorphic only; verified edge by edge
    std::string witness;                   // NonIsomorphic only: separating invariant's name

    bool isomorphic() const { return verdict == IsoVerdict::Isomorphic; }
    static IsoResult yes(VertexMapping m) { return {IsoVerdict::Isomorphic, std::move(m), ""}; }
    static IsoResult no(std::string invariant) {
        return {IsoVerdict::NonIsomorphic, std::nullopt, std::move(invariant)};
    }
};

// Soft size bound for brute_force_iso: the size up to which callers that
// must stay responsive (dispatch, the reduction harness) still consult it.
// The function itself never enforces it.
inline constexpr int kOracleSoftBound = 20;

// Exhaustive backtracking isomorphism test. Always correct; intended for
// small graphs (see kOracleSoftBound — not enforced here). Prunes via degree
// sequences, joint color refinement, and per-color candidate lists.
// Deterministic: first mapping in search order.
IsoResult brute_force_iso(const Graph& a, const Graph& b);

// Size bound for canonical_form_small.
inline constexpr int kExactCanonicalMax = 8;

// Exact canonical form for n <= kExactCanonicalMax (UnsupportedSize beyond):
// the lexicographically smallest graph6 encoding of g over vertex orderings.
// Orderings are restricted to those listing the stable refinement cells in
// invariant order, which is sound (isomorphic graphs have matching cells)
// and collapses to all orderings when refinement finds nothing.
std::string canonical_form_small(const Graph& g);

namespace detail {

// The ordering-search engine behind canonical_form_small, size-bounded so
// the upper-triangle encoding fits one 64-bit word. Also reused for prime
// quotient canonization in the modular decomposition, where vertices carry
// meaningful initial colors.
constexpr int kSmallCanonMax = 11;

struct SmallCanon {
    std::uint64_t bits = 0;                    // minimal triangle encoding, MSB-first stream in the low bits
    std::array<int, kSmallCanonMax> perm{};    // perm[position] = vertex placed there
};

// initial_colors may be null (uniform). Values only matter up to order and
// must themselves be isomorphism-invariant for the result to be canonical.
SmallCanon canonical_ordering_small(int n, const std::uint16_t* masks, const int* initial_colors);

std::string graph6_from_bits(int n, std::uint64_t bits);

}  // namespace detail

}  // namespace giclass
