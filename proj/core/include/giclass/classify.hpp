#pragma once

#include <optional>
#include <string>
#include <vector>

#include "giclass/expr.hpp"
#include "giclass/graph.hpp"
#include "giclass/iso.hpp"

namespace giclass {

enum class StatusKind { GIComplete, Polynomial, Open, Unknown };

struct ClassificationStatus {
    StatusKind kind = StatusKind::Unknown;
    std::string method;  // Polynomial only: "cograph", "bothsplit", "rao", ...
    std::string source;  // provenance tag; for Unknown, the reason instead

    bool operator==(const ClassificationStatus&) const = default;
};

std::string to_string(StatusKind k);
std::string to_string(const ClassificationStatus& s);  // e.g. "Polynomial(cograph)"

// Unordered pair of forbidden graphs; normalized so the two orders compare
// equal and print identically.
struct ForbiddenPair {
    GraphExpr h1, h2;
    ForbiddenPair(GraphExpr a, GraphExpr b);
    bool operator==(const ForbiddenPair&) const = default;
};

// One line of the classification table. Patterns are expression strings,
// matched up to isomorphism of the realized graphs; "*" (always stored as
// pattern2) matches any graph and is only accepted on polynomial rows.
struct TableRow {
    std::string pattern1;
    std::string pattern2;  // "*" for wildcard rows
    GraphExpr expr1;
    std::optional<GraphExpr> expr2;
    ClassificationStatus status;  // kind Polynomial or GIComplete
    int line = 0;
};

// The pair classification data, shipped embedded and overridable by file.
// Format: one row per line, tab-separated:
//   pattern1 <TAB> pattern2 <TAB> status <TAB> provenance
// status is "polynomial:<method>" or "gi-complete"; '#' starts a comment.
// Immutable after construction.
class ClassificationTable {
public:
    static const ClassificationTable& embedded();
    static ClassificationTable parse(const std::string& text);     // ParseError with line number
    static ClassificationTable load_file(const std::string& path);

    const std::vector<TableRow>& rows() const { return rows_; }

private:
    // Realized patterns with their exact canonical forms (when small enough),
    // precomputed so repeated classification calls match by string compare.
    struct PatternMatcher {
        Graph g;
        std::optional<std::string> canon;
    };
    struct RowMatcher {
        PatternMatcher first;
        std::optional<PatternMatcher> second;  // empty on wildcard rows
    };

    std::vector<TableRow> rows_;
    std::vector<RowMatcher> matchers_;

    friend ClassificationStatus classify_graphs(const Graph&, const Graph&,
                                                const ClassificationTable&);
};

// Raw text of the embedded table (also what `embedded()` parses).
const char* embedded_classification_table_text();

// Decides the isomorphism-complexity status of the hereditary class given by
// forbidding {h1, h2}. Order of play: basic inputs are out of scope; then
// table rows (polynomial first, then gi-complete), matched for the pair as
// given and with both sides complemented; then the exception region (one
// side an exception-set member, the other in the path-union-complement
// catalog), where subclasses of the known polynomial case stay polynomial
// and everything else is open; everything outside the region is gi-complete.
// Symmetric under swapping the pair and under complementing both sides.
ClassificationStatus classify_graphs(const Graph& h1, const Graph& h2,
                                     const ClassificationTable& table = ClassificationTable::embedded());
ClassificationStatus classify(const ForbiddenPair& p,
                              const ClassificationTable& table = ClassificationTable::embedded());

// Isomorphism dispatch honoring the classification: cograph rows go to
// cograph_iso, bothsplit rows to bothsplit_iso, everything else to the
// brute-force oracle (flagged, and refused beyond the soft size bound).
// Inputs must be members of the class; violations throw PreconditionError
// carrying the forbidden subgraph's vertices.
struct DispatchResult {
    ClassificationStatus status;
    std::optional<IsoResult> result;      // empty only when refused
    bool oracle_answered = false;
    std::optional<std::string> refusal;
};

DispatchResult iso_in_class(const ForbiddenPair& p, const Graph& a, const Graph& b,
                            const ClassificationTable& table = ClassificationTable::embedded());

// Specialized decision procedure for the table's bothsplit rows, built on
// exact modular-decomposition canonization. DispatchError when the pair is
// not covered by a bothsplit row; PreconditionError for non-members.
IsoResult bothsplit_iso(const Graph& a, const Graph& b, const ForbiddenPair& p,
                        const ClassificationTable& table = ClassificationTable::embedded());

}  // namespace giclass
