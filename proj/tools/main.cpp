// giclass: command-line front end for the library — classify forbidden
// pairs, test class membership, decide isomorphism with dispatch, canonize,
// run reductions, and execute the built-in verification suite.
//
// Exit codes follow the diff convention on every path: 0 = yes/success,
// 1 = no (non-isomorphic, non-member, failed checks), 2 = error or refusal.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "giclass/classify.hpp"
#include "giclass/cograph.hpp"
#include "giclass/enumeration.hpp"
#include "giclass/errors.hpp"
#include "giclass/expr.hpp"
#include "giclass/graph.hpp"
#include "giclass/iso.hpp"
#include "giclass/modular.hpp"
#include "giclass/reduction.hpp"
#include "giclass/selftest.hpp"
#include "giclass/subgraph.hpp"

using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    bool json = false;
    std::string format = "auto";
    std::string table_path;
    std::uint64_t seed = 12345;
};

giclass::GraphFormat graph_format(const GlobalOpts& g) {
    if (g.format == "graph6") return giclass::GraphFormat::Graph6;
    if (g.format == "edges") return giclass::GraphFormat::EdgeList;
    return giclass::GraphFormat::Auto;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw giclass::Error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

giclass::Graph read_graph(const GlobalOpts& g, const std::string& path) {
    return giclass::parse_graph(read_input(path), graph_format(g));
}

std::string write_graph(const GlobalOpts& g, const giclass::Graph& gr) {
    return g.format == "edges" ? giclass::encode_edge_list(gr) : giclass::encode_graph6(gr) + "\n";
}

// --table beats the HEREDITY_ISO_TABLE environment variable beats the
// embedded table. `storage` keeps a loaded table alive for the command.
const giclass::ClassificationTable& resolve_table(
    const GlobalOpts& g, std::optional<giclass::ClassificationTable>& storage) {
    std::string path = g.table_path;
    if (path.empty()) {
        if (const char* env = std::getenv("HEREDITY_ISO_TABLE")) path = env;
    }
    if (path.empty()) return giclass::ClassificationTable::embedded();
    storage = giclass::ClassificationTable::load_file(path);
    return *storage;
}

ordered_json status_json(const giclass::ClassificationStatus& s) {
    ordered_json j;
    j["kind"] = giclass::to_string(s.kind);
    if (!s.method.empty()) j["method"] = s.method;
    j["source"] = s.source;
    return j;
}

void emit(const GlobalOpts& g, const ordered_json& record, const std::string& text) {
    if (g.json)
        std::cout << record.dump(2) << "\n";
    else
        std::cout << text;
}

std::string join_ids(const std::vector<int>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::to_string(ids[i]);
    return out;
}

int cmd_classify(const GlobalOpts& g, const std::string& e1, const std::string& e2) {
    std::optional<giclass::ClassificationTable> storage;
    const auto& table = resolve_table(g, storage);
    giclass::ForbiddenPair pair(giclass::parse_expr(e1), giclass::parse_expr(e2));
    giclass::ClassificationStatus s = giclass::classify(pair, table);

    ordered_json rec;
    rec["command"] = "classify";
    rec["inputs"] = ordered_json::array({e1, e2});
    rec["verdict"] = giclass::to_string(s);
    rec["status"] = status_json(s);
    std::string label = s.kind == giclass::StatusKind::Unknown ? "reason: " : "source: ";
    emit(g, rec, giclass::to_string(s) + "\n" + label + s.source + "\n");
    return 0;
}

int cmd_member(const GlobalOpts& g, const std::string& e1, const std::string& e2,
               const std::string& file) {
    giclass::ClassSpec cls({giclass::parse_expr(e1), giclass::parse_expr(e2)});
    giclass::Graph gr = read_graph(g, file);
    std::optional<giclass::ForbiddenWitness> w = giclass::find_forbidden(gr, cls);

    ordered_json rec;
    rec["command"] = "member";
    rec["inputs"] = ordered_json::array({e1, e2, file});
    rec["verdict"] = w ? "non-member" : "member";
    if (w) {
        rec["witness"] = {{"forbidden", giclass::print_expr(cls.forbidden[w->which])},
                          {"vertices", w->where.image}};
        emit(g, rec,
             "non-member: contains induced " + giclass::print_expr(cls.forbidden[w->which]) +
                 " at " + join_ids(w->where.image) + "\n");
        return 1;
    }
    rec["witness"] = nullptr;
    emit(g, rec, "member\n");
    return 0;
}

int cmd_iso(const GlobalOpts& g, const std::string& e1, const std::string& e2,
            const std::string& file_a, const std::string& file_b) {
    std::optional<giclass::ClassificationTable> storage;
    const auto& table = resolve_table(g, storage);
    giclass::ForbiddenPair pair(giclass::parse_expr(e1), giclass::parse_expr(e2));
    giclass::Graph a = read_graph(g, file_a);
    giclass::Graph b = read_graph(g, file_b);
    giclass::DispatchResult d = giclass::iso_in_class(pair, a, b, table);

    ordered_json rec;
    rec["command"] = "iso";
    rec["inputs"] = ordered_json::array({e1, e2, file_a, file_b});
    rec["status"] = status_json(d.status);
    rec["flags"] = {{"oracle_answered", d.oracle_answered}};

    if (!d.result) {
        rec["verdict"] = "refused";
        rec["refusal"] = *d.refusal;
        emit(g, rec,
             "refused: " + *d.refusal + "\nclass status: " + giclass::to_string(d.status) + "\n");
        return 2;
    }
    std::string note =
        d.oracle_answered ? "note: answered by the exhaustive oracle (no specialized algorithm)\n"
                          : "";
    if (d.result->isomorphic()) {
        rec["verdict"] = "isomorphic";
        rec["witness"] = {{"mapping", d.result->mapping->image}};
        std::string map_text = "mapping:";
        for (std::size_t v = 0; v < d.result->mapping->image.size(); ++v)
            map_text += " " + std::to_string(v) + "->" + std::to_string(d.result->mapping->image[v]);
        emit(g, rec, "isomorphic\n" + map_text + "\n" + note);
        return 0;
    }
    rec["verdict"] = "non-isomorphic";
    rec["witness"] = {{"invariant", d.result->witness}};
    emit(g, rec, "non-isomorphic (separated by: " + d.result->witness + ")\n" + note);
    return 1;
}

int cmd_canon(const GlobalOpts& g, const std::string& file) {
    giclass::Graph gr = read_graph(g, file);
    std::string code, method;
    auto res = giclass::build_cotree(gr);
    if (const giclass::Cotree* t = std::get_if<giclass::Cotree>(&res)) {
        code = giclass::canonical_code(*t);
        method = "cotree";
    } else if (gr.n() <= giclass::kExactCanonicalMax) {
        code = giclass::canonical_form_small(gr);
        method = "exact";
    } else {
        code = giclass::md_canonical_code(gr);
        method = "modular";
    }
    ordered_json rec;
    rec["command"] = "canon";
    rec["inputs"] = ordered_json::array({file});
    rec["verdict"] = code;
    rec["method"] = method;
    emit(g, rec, code + "\n");
    return 0;
}

int cmd_reduce_list(const GlobalOpts& g) {
    ordered_json rec;
    rec["command"] = "reduce";
    rec["verdict"] = "list";
    ordered_json arr = ordered_json::array();
    std::string text;
    for (const giclass::Reduction& r : giclass::reductions()) {
        std::string targets;
        for (std::size_t i = 0; i < r.target_class.forbidden.size(); ++i)
            targets += (i ? "," : "") + giclass::print_expr(r.target_class.forbidden[i]);
        arr.push_back({{"name", r.name}, {"summary", r.summary}, {"target_forbids", targets}});
        text += r.name + ": " + r.summary + " (target forbids " + targets + ")\n";
    }
    rec["reductions"] = arr;
    emit(g, rec, text);
    return 0;
}

int cmd_reduce_verify(const GlobalOpts& g, const giclass::Reduction& r, int max_n) {
    std::vector<std::pair<giclass::Graph, giclass::Graph>> corpus;
    std::vector<giclass::Graph> domain;
    for (int n = 2; n <= max_n; ++n)
        for (giclass::Graph& gr : giclass::all_graphs_up_to_iso(n)) {
            bool ok = gr.n() >= 2;
            for (int v = 0; v < gr.n() && ok; ++v) ok = gr.degree(v) >= 1;
            if (ok) domain.push_back(std::move(gr));
        }
    for (std::size_t i = 0; i < domain.size(); ++i)
        for (std::size_t j = i; j < domain.size(); ++j) corpus.emplace_back(domain[i], domain[j]);
    giclass::ReductionReport report = giclass::verify_reduction(r, corpus);

    ordered_json rec;
    rec["command"] = "reduce";
    rec["inputs"] = ordered_json::array({r.name});
    rec["verdict"] = report.clean() ? "clean" : "violations";
    rec["checked"] = report.pairs_checked;
    rec["skipped"] = report.pairs_skipped;
    rec["violations"] = report.violations;
    ordered_json arr = ordered_json::array();
    for (const giclass::ReductionCheck& c : report.pairs) {
        ordered_json e;
        e["inputs"] = ordered_json::array({c.input1, c.input2});
        e["images_in_target"] = c.images_in_target;
        if (c.skipped) {
            e["skipped"] = *c.skipped;
        } else {
            e["inputs_isomorphic"] = *c.inputs_isomorphic;
            e["outputs_isomorphic"] = *c.outputs_isomorphic;
            e["agreed"] = c.agreed;
        }
        arr.push_back(std::move(e));
    }
    rec["pairs"] = arr;
    emit(g, rec, giclass::to_text(report));
    return report.clean() ? 0 : 1;
}

int cmd_reduce(const GlobalOpts& g, const std::string& name, const std::string& file,
               bool list, int verify_n) {
    if (list) return cmd_reduce_list(g);
    if (name.empty())
        throw giclass::InvalidArgument("reduce: a reduction name is required (see --list)");
    const giclass::Reduction* r = giclass::find_reduction(name);
    if (!r) throw giclass::InvalidArgument("reduce: unknown reduction \"" + name + "\" (see --list)");
    if (verify_n > 0) return cmd_reduce_verify(g, *r, verify_n);

    giclass::Graph gr = read_graph(g, file);
    giclass::Graph image = r->transform(gr);
    ordered_json rec;
    rec["command"] = "reduce";
    rec["inputs"] = ordered_json::array({name, file});
    rec["verdict"] = giclass::encode_graph6(image);
    rec["vertices"] = image.n();
    emit(g, rec, write_graph(g, image));
    return 0;
}

int cmd_catalog(const GlobalOpts& g, int max_vertices, int max_paths) {
    std::vector<giclass::GraphExpr> entries =
        giclass::enumerate_path_union_complements(max_vertices, max_paths);
    ordered_json rec;
    rec["command"] = "catalog";
    rec["inputs"] = ordered_json::array({max_vertices, max_paths});
    rec["verdict"] = std::to_string(entries.size()) + " entries";
    ordered_json arr = ordered_json::array();
    std::string text;
    for (const giclass::GraphExpr& e : entries) {
        arr.push_back({{"expr", giclass::print_expr(e)},
                       {"graph6", giclass::encode_graph6(giclass::realize(e))}});
        text += giclass::print_expr(e) + "\n";
    }
    rec["entries"] = arr;
    emit(g, rec, text);
    return 0;
}

int cmd_selftest(const GlobalOpts& g, const std::string& level) {
    giclass::SelftestLevel lv =
        level == "full" ? giclass::SelftestLevel::Full : giclass::SelftestLevel::Quick;
    std::vector<giclass::CheckResult> results = giclass::run_selftest(lv, g.seed);

    ordered_json rec;
    rec["command"] = "selftest";
    rec["inputs"] = ordered_json::array({level});
    rec["verdict"] = giclass::all_passed(results) ? "pass" : "fail";
    ordered_json arr = ordered_json::array();
    for (const giclass::CheckResult& c : results)
        arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    rec["checks"] = arr;
    emit(g, rec, giclass::selftest_report(results));
    return giclass::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph isomorphism toolkit for hereditary classes given by two forbidden "
                 "induced subgraphs"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "emit a JSON record instead of text");
    app.add_option("--format", g.format, "graph input/output format")
        ->check(CLI::IsMember({"auto", "graph6", "edges"}))
        ->capture_default_str();
    app.add_option("--table", g.table_path,
                   "classification table file overriding the embedded one "
                   "(HEREDITY_ISO_TABLE is the environment fallback)");
    app.add_option("--seed", g.seed, "seed for randomized corpora")->capture_default_str();

    std::string h1, h2, file_a, file_b;
    std::string graph_file = "-";
    std::string reduction_name;
    bool reduce_list = false;
    int verify_n = 0;
    int max_vertices = 7, max_paths = 3;
    std::string level;

    CLI::App* c_classify =
        app.add_subcommand("classify", "classification status of the (H1,H2)-free class");
    c_classify->add_option("h1", h1, "first forbidden graph expression")->required();
    c_classify->add_option("h2", h2, "second forbidden graph expression")->required();

    CLI::App* c_member = app.add_subcommand("member", "test membership in the (H1,H2)-free class");
    c_member->add_option("h1", h1, "first forbidden graph expression")->required();
    c_member->add_option("h2", h2, "second forbidden graph expression")->required();
    c_member->add_option("graph", graph_file, "graph file (graph6 or edge list; \"-\" = stdin)");

    CLI::App* c_iso = app.add_subcommand("iso", "decide isomorphism of two class members");
    c_iso->add_option("h1", h1, "first forbidden graph expression")->required();
    c_iso->add_option("h2", h2, "second forbidden graph expression")->required();
    c_iso->add_option("a", file_a, "first graph file")->required();
    c_iso->add_option("b", file_b, "second graph file")->required();

    CLI::App* c_canon = app.add_subcommand(
        "canon", "canonical form (cotree code for cographs, exact small form, or modular code)");
    c_canon->add_option("graph", graph_file, "graph file (\"-\" = stdin)");

    CLI::App* c_reduce = app.add_subcommand("reduce", "apply or verify a registered reduction");
    c_reduce->add_option("name", reduction_name, "reduction name");
    c_reduce->add_option("graph", graph_file, "graph file (\"-\" = stdin)");
    c_reduce->add_flag("--list", reduce_list, "list registered reductions");
    c_reduce->add_option("--verify", verify_n,
                         "run the harness over all min-degree >= 1 graphs with 2..N vertices")
        ->check(CLI::Range(2, 7));

    CLI::App* c_catalog =
        app.add_subcommand("catalog", "the path-union-complement catalog of forbidden graphs");
    c_catalog->add_option("--max-vertices", max_vertices, "total vertex bound")
        ->capture_default_str()
        ->check(CLI::Range(1, 12));
    c_catalog->add_option("--max-paths", max_paths, "bound on the number of paths")
        ->capture_default_str()
        ->check(CLI::Range(1, 12));

    CLI::App* c_selftest = app.add_subcommand("selftest", "run the built-in verification suite");
    c_selftest->add_option("level", level, "quick or full")
        ->required()
        ->check(CLI::IsMember({"quick", "full"}));

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_classify->parsed()) return cmd_classify(g, h1, h2);
        if (c_member->parsed()) return cmd_member(g, h1, h2, graph_file);
        if (c_iso->parsed()) return cmd_iso(g, h1, h2, file_a, file_b);
        if (c_canon->parsed()) return cmd_canon(g, graph_file);
        if (c_reduce->parsed()) return cmd_reduce(g, reduction_name, graph_file, reduce_list, verify_n);
        if (c_catalog->parsed()) return cmd_catalog(g, max_vertices, max_paths);
        if (c_selftest->parsed()) return cmd_selftest(g, level);
    } catch (const giclass::PreconditionError& e) {
        std::cerr << "error: " << e.what();
        if (e.witness) std::cerr << " [vertices " << join_ids(*e.witness) << "]";
        std::cerr << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
