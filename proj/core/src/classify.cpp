#include "giclass/classify.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "giclass/cograph.hpp"
#include "giclass/errors.hpp"
#include "giclass/modular.hpp"
#include "giclass/subgraph.hpp"

namespace giclass {

namespace {

constexpr const char* kSourceGiCompleteDefault = "dichotomy:gi-complete-default";
constexpr const char* kSourceRegionOpen = "region:unresolved";
constexpr const char* kSourceRaoSubclass =
    "rao:modular-decomposition-preprint; interpretation:subclass-inclusion";
constexpr const char* kReasonBasic = "basic case; out of scope";

std::optional<std::string> maybe_canon(const Graph& g) {
    if (g.n() > kExactCanonicalMax) return std::nullopt;
    return canonical_form_small(g);
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Fields are separated by runs of tabs; surrounding spaces are ignored.
std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        std::size_t tab = line.find('\t', pos);
        if (tab == std::string::npos) tab = line.size();
        std::string field = strip(line.substr(pos, tab - pos));
        if (!field.empty()) out.push_back(std::move(field));
        pos = tab + 1;
    }
    return out;
}

GraphExpr parse_pattern(const std::string& text, int line_no) {
    try {
        return parse_expr(text);
    } catch (const ParseError& e) {
        throw ParseError("classification table: bad pattern \"" + text + "\": " + e.what(),
                         static_cast<std::size_t>(line_no), ParseError::Unit::Line);
    }
}

ClassificationStatus parse_status(const std::string& token, const std::string& provenance,
                                  int line_no) {
    if (token == "gi-complete") return {StatusKind::GIComplete, "", provenance};
    constexpr const char* kPolyPrefix = "polynomial:";
    if (token.starts_with(kPolyPrefix) && token.size() > std::string(kPolyPrefix).size())
        return {StatusKind::Polynomial, token.substr(std::string(kPolyPrefix).size()), provenance};
    throw ParseError("classification table: unknown status \"" + token +
                         "\" (expected \"polynomial:<method>\" or \"gi-complete\")",
                     static_cast<std::size_t>(line_no), ParseError::Unit::Line);
}

// Realizations and exact canonical forms of the region's building blocks,
// built once: the exception set and the path-union-complement catalog.
struct RegionData {
    std::vector<std::string> exception_canon;
    std::unordered_set<std::string> catalog_canon;
    Graph p4_plus_k1;  // one half of the known polynomial pair
    Graph gem;         // its complement, the other half
};

const RegionData& region_data() {
    static const RegionData data = [] {
        RegionData d;
        for (const GraphExpr& e : exception_set())
            d.exception_canon.push_back(canonical_form_small(realize(e)));
        for (const GraphExpr& e : enumerate_path_union_complements(7, 3))
            d.catalog_canon.insert(canonical_form_small(realize(e)));
        d.p4_plus_k1 = realize(parse_expr("P4+K1"));
        d.gem = realize(parse_expr("co(P4+K1)"));
        return d;
    }();
    return data;
}

bool induced_in(const Graph& small, const Graph& big) {
    return find_induced(big, small).has_value();
}

// Every class member avoids h1 and h2; when each of P4+K1 and its complement
// contains one of them, the class sits inside the known polynomial class.
bool rao_subclass(const Graph& h1, const Graph& h2) {
    const RegionData& d = region_data();
    return (induced_in(h1, d.p4_plus_k1) || induced_in(h2, d.p4_plus_k1)) &&
           (induced_in(h1, d.gem) || induced_in(h2, d.gem));
}

void require_member(const Graph& g, const ClassSpec& cls, const char* fn, const char* which) {
    if (auto w = find_forbidden(g, cls)) {
        throw PreconditionError(std::string(fn) + ": " + which +
                                    " graph is not in the class (contains induced " +
                                    print_expr(cls.forbidden[w->which]) + ")",
                                w->where.image);
    }
}

}  // namespace

std::string to_string(StatusKind k) {
    switch (k) {
        case StatusKind::GIComplete: return "GIComplete";
        case StatusKind::Polynomial: return "Polynomial";
        case StatusKind::Open: return "Open";
        case StatusKind::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::string to_string(const ClassificationStatus& s) {
    if (s.kind == StatusKind::Polynomial && !s.method.empty())
        return "Polynomial(" + s.method + ")";
    return to_string(s.kind);
}

ForbiddenPair::ForbiddenPair(GraphExpr a, GraphExpr b) : h1(std::move(a)), h2(std::move(b)) {
    h1 = normalized(h1);
    h2 = normalized(h2);
    if (print_expr(h2) < print_expr(h1)) std::swap(h1, h2);
}

const ClassificationTable& ClassificationTable::embedded() {
    static const ClassificationTable table = parse(embedded_classification_table_text());
    return table;
}

ClassificationTable ClassificationTable::parse(const std::string& text) {
    ClassificationTable table;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (std::size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;

        std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 4)
            throw ParseError("classification table: expected 4 tab-separated fields "
                                 "(pattern1, pattern2, status, provenance), got " +
                                 std::to_string(fields.size()),
                             static_cast<std::size_t>(line_no), ParseError::Unit::Line);

        std::string p1 = fields[0];
        std::string p2 = fields[1];
        if (p1 == "*") std::swap(p1, p2);
        if (p1 == "*")
            throw ParseError("classification table: at most one pattern may be the wildcard "
                                 "\"*\"",
                             static_cast<std::size_t>(line_no), ParseError::Unit::Line);

        ClassificationStatus status = parse_status(fields[2], fields[3], line_no);
        if (p2 == "*" && status.kind != StatusKind::Polynomial)
            throw ParseError("classification table: wildcard rows must be polynomial",
                             static_cast<std::size_t>(line_no), ParseError::Unit::Line);

        GraphExpr e1 = parse_pattern(p1, line_no);
        std::optional<GraphExpr> e2;
        if (p2 != "*") e2 = parse_pattern(p2, line_no);

        auto make_matcher = [](const GraphExpr& e) {
            Graph g = realize(e);
            std::optional<std::string> canon = maybe_canon(g);
            return PatternMatcher{std::move(g), std::move(canon)};
        };
        RowMatcher matcher{make_matcher(e1),
                           e2 ? std::optional<PatternMatcher>(make_matcher(*e2)) : std::nullopt};

        table.rows_.push_back(TableRow{p1, p2, std::move(e1), std::move(e2), std::move(status), line_no});
        table.matchers_.push_back(std::move(matcher));
    }
    return table;
}

ClassificationTable ClassificationTable::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open classification table: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

ClassificationStatus classify_graphs(const Graph& h1, const Graph& h2,
                                     const ClassificationTable& table) {
    if (is_basic(h1) || is_basic(h2)) return {StatusKind::Unknown, "", kReasonBasic};

    // The status of a class is unchanged by swapping the pair or by
    // complementing both sides, so rows and the region are matched against
    // all four orientations.
    const Graph c1 = complement(h1);
    const Graph c2 = complement(h2);
    const std::array<const Graph*, 4> graphs = {&h1, &h2, &c1, &c2};
    constexpr std::array<std::pair<int, int>, 4> orientations = {{{0, 1}, {1, 0}, {2, 3}, {3, 2}}};

    std::array<std::optional<std::string>, 4> canon_memo;
    std::array<bool, 4> canon_done{};
    auto canon_for = [&](int i) -> const std::optional<std::string>& {
        if (!canon_done[i]) {
            canon_memo[i] = maybe_canon(*graphs[i]);
            canon_done[i] = true;
        }
        return canon_memo[i];
    };
    auto side_matches = [&](const ClassificationTable::PatternMatcher& pm, int i) {
        const Graph& g = *graphs[i];
        if (g.n() != pm.g.n()) return false;
        const std::optional<std::string>& gc = canon_for(i);
        if (gc && pm.canon) return *gc == *pm.canon;
        return brute_force_iso(g, pm.g).isomorphic();
    };

    // Polynomial rows take precedence over gi-complete rows; within a kind,
    // file order decides.
    for (StatusKind want : {StatusKind::Polynomial, StatusKind::GIComplete}) {
        for (std::size_t r = 0; r < table.rows_.size(); ++r) {
            if (table.rows_[r].status.kind != want) continue;
            const ClassificationTable::RowMatcher& m = table.matchers_[r];
            for (auto [x, y] : orientations) {
                if (!side_matches(m.first, x)) continue;
                if (!m.second || side_matches(*m.second, y)) return table.rows_[r].status;
            }
        }
    }

    const RegionData& rd = region_data();
    auto is_exception = [&](int i) {
        const std::optional<std::string>& c = canon_for(i);
        return c && std::find(rd.exception_canon.begin(), rd.exception_canon.end(), *c) !=
                        rd.exception_canon.end();
    };
    auto in_catalog = [&](int i) {
        const std::optional<std::string>& c = canon_for(i);
        return c && rd.catalog_canon.count(*c) > 0;
    };
    for (auto [x, y] : orientations) {
        if (is_exception(x) && in_catalog(y)) {
            if (rao_subclass(h1, h2)) return {StatusKind::Polynomial, "rao", kSourceRaoSubclass};
            return {StatusKind::Open, "", kSourceRegionOpen};
        }
    }

    return {StatusKind::GIComplete, "", kSourceGiCompleteDefault};
}

ClassificationStatus classify(const ForbiddenPair& p, const ClassificationTable& table) {
    return classify_graphs(realize(p.h1), realize(p.h2), table);
}

DispatchResult iso_in_class(const ForbiddenPair& p, const Graph& a, const Graph& b,
                            const ClassificationTable& table) {
    ClassSpec cls({p.h1, p.h2});
    require_member(a, cls, "iso_in_class", "first");
    require_member(b, cls, "iso_in_class", "second");

    DispatchResult out;
    out.status = classify(p, table);
    if (out.status.kind == StatusKind::Polynomial) {
        if (out.status.method == "cograph") {
            out.result = cograph_iso(a, b);
            return out;
        }
        if (out.status.method == "bothsplit") {
            out.result = bothsplit_iso(a, b, p, table);
            return out;
        }
    }

    int n = std::max(a.n(), b.n());
    if (n > kOracleSoftBound) {
        out.refusal = "no specialized decision procedure for this pair; the exhaustive check "
                      "stops at " +
                      std::to_string(kOracleSoftBound) + " vertices, got " + std::to_string(n);
        return out;
    }
    out.result = brute_force_iso(a, b);
    out.oracle_answered = true;
    return out;
}

IsoResult bothsplit_iso(const Graph& a, const Graph& b, const ForbiddenPair& p,
                        const ClassificationTable& table) {
    ClassificationStatus status = classify(p, table);
    if (status.kind != StatusKind::Polynomial || status.method != "bothsplit")
        throw DispatchError("bothsplit_iso: pair {" + print_expr(p.h1) + ", " + print_expr(p.h2) +
                            "} is not covered by a bothsplit row (classified " + to_string(status) +
                            ")");
    ClassSpec cls({p.h1, p.h2});
    require_member(a, cls, "bothsplit_iso", "first");
    require_member(b, cls, "bothsplit_iso", "second");
    return md_iso(a, b);
}

}  // namespace giclass
