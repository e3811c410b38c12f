#include "qsp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "qsp/hecke.hpp"
#include "qsp/jcrystal.hpp"
#include "qsp/lr.hpp"
#include "qsp/ujmod.hpp"

namespace qsp {

namespace {

using nlohmann::json;

struct Guards {
    std::size_t words = 20000;
    std::size_t kl_group = 384;
    std::size_t cell_group = 48;

    void apply(long long n) {
        if (n <= 0) return;
        words = kl_group = cell_group = static_cast<std::size_t>(n);
    }
};

std::string shape_str(const Bipartition& b) { return b.str(); }

json tableau_json(const Tableau& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r = json::array();
        for (int x : row) r.push_back(x);
        rows.push_back(r);
    }
    return rows;
}

json word_json(const Word& w) {
    json a = json::array();
    for (int x : w) a.push_back(x);
    return a;
}

json partition_json(const Partition& p) {
    json a = json::array();
    for (int x : p.parts) a.push_back(x);
    return a;
}

json bipartition_json(const Bipartition& b) {
    return json{{"minus", partition_json(b.minus)}, {"plus", partition_json(b.plus)}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---- decompose -----------------------------------------------------------

int cmd_decompose(int r, int d, const std::string& format, const Guards& g,
                  std::ostream& out) {
    JDecomposition dec = decompose_tensor_power(r, d, g.words);
    if (format == "json") {
        json shapes = json::array();
        long long total = 0;
        for (const auto& [shape, mult] : dec.multiplicity) {
            long long dim = sst_count(shape, r);
            total += mult * dim;
            json sources = json::array();
            for (const auto& c : dec.components)
                if (c.shape == shape) sources.push_back(word_json(c.source));
            shapes.push_back(json{{"shape", shape_str(shape)},
                                  {"bipartition", bipartition_json(shape)},
                                  {"multiplicity", mult},
                                  {"dimension", dim},
                                  {"standard_count", st_count(shape)},
                                  {"sources", sources}});
        }
        emit(out, json{{"r", r},
                       {"d", d},
                       {"shapes", shapes},
                       {"component_count", static_cast<long long>(dec.components.size())},
                       {"total_dimension", total}});
    } else {
        out << "tensor power r=" << r << " d=" << d << "\n";
        for (const auto& [shape, mult] : dec.multiplicity)
            out << "  " << shape_str(shape) << "  multiplicity " << mult
                << "  dimension " << sst_count(shape, r) << "\n";
    }
    return 0;
}

// ---- graphs ---------------------------------------------------------------

struct GraphNode {
    Word word;
    std::string label;
};

int cmd_crystal_graph(int r, int d, const std::string& shape_text,
                      const std::string& format, const std::string& out_file,
                      const Guards& g, std::ostream& out) {
    std::vector<Word> nodes;
    std::map<Word, std::string> labels;
    if (!shape_text.empty()) {
        Partition shape = Partition::parse(shape_text);
        if (shape.length() > 2 * r + 1)
            throw ShapeError("shape has more rows than the alphabet");
        auto tabs = enumerate_sst(shape.padded(2 * r + 1), full_alphabet(r));
        if (tabs.size() > g.words) throw SizeLimit("tableau enumeration exceeds guard");
        for (const auto& t : tabs) {
            nodes.push_back(read_me(t));
            labels[nodes.back()] = t.str();
        }
    } else {
        nodes = all_words(r, d, g.words);
        for (const auto& w : nodes) labels[w] = word_str(w);
    }
    std::set<Word> node_set(nodes.begin(), nodes.end());
    struct Edge {
        Word from, to;
        std::string label;
    };
    std::vector<Edge> edges;
    for (const auto& w : nodes)
        for (HalfInt i : crystal_indices(r)) {
            auto t = crystal_op(w, i, Dir::Lower);
            if (!t) continue;
            if (!node_set.count(*t)) throw InternalError("edge leaves the node set");
            edges.push_back({w, *t, i.str()});
        }
    std::ostringstream buf;
    if (format == "json") {
        json jn = json::array(), je = json::array();
        for (const auto& w : nodes)
            jn.push_back(json{{"word", word_json(w)}, {"label", labels[w]}});
        for (const auto& e : edges)
            je.push_back(json{{"from", labels[e.from]},
                              {"to", labels[e.to]},
                              {"index", e.label}});
        buf << json{{"r", r}, {"nodes", jn}, {"edges", je}}.dump(2) << "\n";
    } else {
        buf << "digraph crystal {\n";
        for (const auto& w : nodes)
            buf << "  \"" << labels[w] << "\";\n";
        for (const auto& e : edges)
            buf << "  \"" << labels[e.from] << "\" -> \"" << labels[e.to]
                << "\" [label=\"" << e.label << "\"];\n";
        buf << "}\n";
    }
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        f << buf.str();
    } else {
        out << buf.str();
    }
    return 0;
}

int cmd_jcrystal_graph(int r, int d, const std::string& shape_text,
                       const std::string& format, const std::string& out_file,
                       const Guards& g, std::ostream& out) {
    std::vector<Word> nodes;
    std::map<Word, std::string> labels;
    if (!shape_text.empty()) {
        Bipartition shape = Bipartition::parse(shape_text, r);
        auto tabs = enumerate_sst(shape, r);
        if (tabs.size() > g.words) throw SizeLimit("tableau enumeration exceeds guard");
        for (const auto& t : tabs) {
            nodes.push_back(read_r(t));
            labels[nodes.back()] = t.str();
        }
    } else {
        nodes = all_words(r, d, g.words);
        for (const auto& w : nodes) labels[w] = word_str(w);
    }
    std::set<Word> node_set(nodes.begin(), nodes.end());
    struct Edge {
        Word from, to;
        int index;
        bool primed;
    };
    std::vector<Edge> edges;
    for (const auto& w : nodes) {
        for (int i = 1; i <= r; ++i)
            if (auto t = jop(w, i, Dir::Lower)) {
                if (!node_set.count(*t)) throw InternalError("edge leaves the node set");
                edges.push_back({w, *t, i, false});
            }
        for (int i = 2; i <= r; ++i)
            if (auto t = jop_primed(w, i, Dir::Lower)) {
                if (!node_set.count(*t)) throw InternalError("edge leaves the node set");
                edges.push_back({w, *t, i, true});
            }
    }
    std::ostringstream buf;
    if (format == "json") {
        json jn = json::array(), je = json::array();
        for (const auto& w : nodes)
            jn.push_back(json{{"word", word_json(w)}, {"label", labels[w]}});
        for (const auto& e : edges)
            je.push_back(json{{"from", labels[e.from]},
                              {"to", labels[e.to]},
                              {"index", e.index},
                              {"primed", e.primed}});
        buf << json{{"r", r}, {"nodes", jn}, {"edges", je}}.dump(2) << "\n";
    } else {
        buf << "digraph jcrystal {\n";
        for (const auto& w : nodes) buf << "  \"" << labels[w] << "\";\n";
        for (const auto& e : edges)
            buf << "  \"" << labels[e.from] << "\" -> \"" << labels[e.to]
                << "\" [label=\"" << e.index << (e.primed ? "'" : "") << "\" style=\""
                << (e.primed ? "dashed" : "solid") << "\"];\n";
        buf << "}\n";
    }
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        f << buf.str();
    } else {
        out << buf.str();
    }
    return 0;
}

// ---- lr --------------------------------------------------------------------

int cmd_lr(int r, const std::string& lambda_text, const std::string& mu_text,
           const std::string& nu_text, const std::string& format, std::ostream& out) {
    Bipartition lambda = Bipartition::parse(lambda_text, r);
    Partition mu = Partition::parse(mu_text);
    json base{{"r", r},
              {"lambda", shape_str(lambda)},
              {"mu", mu.str()}};
    if (!nu_text.empty()) {
        Bipartition nu = Bipartition::parse(nu_text, r);
        long long c = lr_j(LRQuery{lambda, mu, nu, r});
        if (format == "json") {
            base["nu"] = shape_str(nu);
            base["value"] = c;
            emit(out, base);
        } else {
            out << c << "\n";
        }
        return 0;
    }
    auto all = lr_j_all(lambda, mu, r);
    if (format == "json") {
        json cs = json::array();
        for (const auto& [nu, c] : all)
            cs.push_back(json{{"nu", shape_str(nu)}, {"value", c}});
        base["coefficients"] = cs;
        emit(out, base);
    } else {
        for (const auto& [nu, c] : all) out << shape_str(nu) << "  " << c << "\n";
    }
    return 0;
}

// ---- cells ------------------------------------------------------------------

int cmd_cells(int rank, const std::string& format, const Guards& g, std::ostream& out) {
    double order = 1;
    for (int i = 1; i <= rank; ++i) order *= 2 * i;
    if (order > static_cast<double>(g.cell_group))
        throw SizeLimit("cell computation exceeds guard");
    HeckeAlgebra h(rank, g.kl_group);
    const auto& cd = h.left_cells();
    if (format == "dot") {
        out << "digraph cells {\n";
        for (std::size_t id = 0; id < cd.cells.size(); ++id) {
            out << "  subgraph cluster_" << id << " {\n";
            for (int w : cd.cells[id])
                out << "    \"" << h.group().element(w).str() << "\";\n";
            out << "  }\n";
        }
        out << "}\n";
        return 0;
    }
    json cells = json::array();
    for (const auto& cell : cd.cells) {
        json elems = json::array();
        for (int w : cell) elems.push_back(h.group().element(w).str());
        auto [qm, qp] = h.recording_pair(cell[0]);
        cells.push_back(json{{"elements", elems},
                             {"recording", json{{"minus", tableau_json(qm)},
                                                {"plus", tableau_json(qp)}}},
                             {"q_minus", qm.str()},
                             {"q_plus", qp.str()},
                             {"size", static_cast<long long>(cell.size())}});
    }
    emit(out, json{{"rank", rank},
                   {"cell_count", static_cast<long long>(cd.cells.size())},
                   {"cells", cells}});
    return 0;
}

// ---- kl ---------------------------------------------------------------------

int cmd_kl(int rank, const std::string& element, const std::string& format,
           const Guards& g, std::ostream& out) {
    HeckeAlgebra h(rank, g.kl_group);
    const auto& grp = h.group();
    std::vector<int> targets;
    if (!element.empty()) {
        targets.push_back(grp.index(SignedPerm::parse(element)));
    } else {
        for (int w = 0; w < grp.size(); ++w) targets.push_back(w);
    }
    json list = json::array();
    for (int w : targets) {
        const HeckeElt& c = h.kl_basis(w);
        if (format == "json") {
            json coeffs = json::object();
            for (const auto& [y, cy] : c.coeffs)
                coeffs[grp.element(y).str()] = cy.str();
            list.push_back(json{{"element", grp.element(w).str()},
                                {"length", grp.length(w)},
                                {"coefficients", coeffs}});
        } else {
            out << "C_" << grp.element(w).str() << " =";
            for (const auto& [y, cy] : c.coeffs)
                out << "  (" << cy.str() << ") H_" << grp.element(y).str();
            out << "\n";
        }
    }
    if (format == "json")
        emit(out, json{{"rank", rank}, {"elements", list}});
    return 0;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(int r, int d, const std::vector<std::string>& only,
               const std::string& format, const Guards& g, std::ostream& out) {
    VerifyReport rep = verify_suite(r, d, only, g.words);
    if (format == "json") {
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back(json{{"group", c.group},
                                  {"name", c.name},
                                  {"pass", c.pass},
                                  {"detail", c.detail}});
        emit(out, json{{"r", r}, {"d", d}, {"checks", checks}, {"all_pass", rep.all_pass()}});
    } else {
        for (const auto& c : rep.checks)
            out << (c.pass ? "[PASS] " : "[FAIL] ") << c.group << ": " << c.name
                << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
        out << (rep.all_pass() ? "all checks passed" : "FAILURES PRESENT") << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tools for the two-parameter quantum symmetric pair: "
                 "crystal graphs, tensor decompositions, Kazhdan-Lusztig cells, "
                 "Littlewood-Richardson coefficients and symbolic verification"};
    app.require_subcommand(1);

    Guards guards;
    if (const char* env = std::getenv("JCRYSTAL_GUARD")) guards.apply(std::atoll(env));
    long long guard_flag = 0;

    int r = 1, d = 1, rank = 1;
    std::string format = "json", shape, lambda_text, mu_text, nu_text, element, out_file;
    std::vector<std::string> only;

    auto add_guard = [&](CLI::App* sub) {
        sub->add_option("--guard", guard_flag, "cap enumeration sizes (overrides defaults)");
    };

    auto* c_crystal = app.add_subcommand("crystal-graph", "ordinary crystal graph");
    add_guard(c_crystal);
    c_crystal->add_option("--r", r, "rank")->required();
    c_crystal->add_option("--power", d, "tensor power of the vector representation");
    c_crystal->add_option("--shape", shape, "partition shape, e.g. '(2,1,0)'");
    c_crystal->add_option("--format", format, "dot|json");
    c_crystal->add_option("--out", out_file, "write to file instead of stdout");

    auto* c_jcrystal = app.add_subcommand("jcrystal-graph", "two-parameter crystal graph");
    add_guard(c_jcrystal);
    c_jcrystal->add_option("--r", r, "rank")->required();
    c_jcrystal->add_option("--power", d, "tensor power");
    c_jcrystal->add_option("--shape", shape, "bipartition, e.g. '(2,0;1)'");
    c_jcrystal->add_option("--format", format, "dot|json");
    c_jcrystal->add_option("--dot", out_file, "write DOT to this file");
    c_jcrystal->add_option("--out", out_file, "write to file instead of stdout");

    auto* c_dec = app.add_subcommand("decompose", "decompose the tensor power");
    add_guard(c_dec);
    c_dec->add_option("--r", r, "rank")->required();
    c_dec->add_option("--d", d, "tensor power")->required();
    c_dec->add_option("--format", format, "json|text");

    auto* c_lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
    add_guard(c_lr);
    c_lr->add_option("--r", r, "rank")->required();
    c_lr->add_option("--lambda", lambda_text, "bipartition '(..;..)'")->required();
    c_lr->add_option("--mu", mu_text, "partition '(..)'")->required();
    c_lr->add_option("--nu", nu_text, "bipartition; omit to list all");
    c_lr->add_option("--format", format, "json|text");

    auto* c_cells = app.add_subcommand("cells", "left cells of the type-B Weyl group");
    add_guard(c_cells);
    c_cells->add_option("--rank", rank, "Weyl group rank")->required();
    c_cells->add_option("--format", format, "json|dot");

    auto* c_kl = app.add_subcommand("kl", "Kazhdan-Lusztig basis elements");
    add_guard(c_kl);
    c_kl->add_option("--rank", rank, "Weyl group rank")->required();
    c_kl->add_option("--element", element, "window, e.g. '[-2,1]'");
    c_kl->add_option("--format", format, "json|text");

    auto* c_verify = app.add_subcommand("verify", "symbolic operator identities");
    add_guard(c_verify);
    c_verify->add_option("--r", r, "rank")->required();
    c_verify->add_option("--d", d, "tensor power")->required();
    c_verify->add_option("--only", only, "restrict to check groups");
    c_verify->add_option("--format", format, "json|text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends.
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    guards.apply(guard_flag);

    try {
        if (c_crystal->parsed()) {
            if (format != "json" && format != "dot") format = "dot";
            return cmd_crystal_graph(r, shape.empty() ? d : 0, shape, format, out_file,
                                     guards, out);
        }
        if (c_jcrystal->parsed()) {
            if (format != "json" && format != "dot") format = "dot";
            return cmd_jcrystal_graph(r, shape.empty() ? d : 0, shape, format, out_file,
                                      guards, out);
        }
        if (c_dec->parsed()) return cmd_decompose(r, d, format, guards, out);
        if (c_lr->parsed()) return cmd_lr(r, lambda_text, mu_text, nu_text, format, out);
        if (c_cells->parsed()) return cmd_cells(rank, format, guards, out);
        if (c_kl->parsed()) return cmd_kl(rank, element, format, guards, out);
        if (c_verify->parsed()) return cmd_verify(r, d, only, format, guards, out);
    } catch (const SizeLimit& e) {
        err << "size guard: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace qsp
