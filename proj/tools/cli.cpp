#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "gspmixdom/oracle.hpp"
#include "gspmixdom/parser.hpp"
#include "gspmixdom/realizer.hpp"
#include "gspmixdom/solver.hpp"

namespace gspmixdom::cli {

namespace {

using json = nlohmann::json;

/// Thrown by command bodies; carries the process exit code.
struct Failure {
    int code;
    std::string message;
};

std::string read_source(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kInputError, "cannot read '" + path + "'"};
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool looks_like_expression(const std::string& path, const std::string& text) {
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".gsp") == 0) return true;
    return text.find('(') != std::string::npos;
}

ParseTree load_tree(const std::string& path) {
    const std::string text = read_source(path);
    try {
        return parse_expr(text);
    } catch (const ParseError& e) {
        throw Failure{kInputError, path + ":" + e.diagnostic().to_string()};
    }
}

/// Either kind of input, reduced to the graph it denotes.
struct Instance {
    Multigraph graph;
    std::optional<std::pair<VertexIndex, VertexIndex>> terminals;
};

Instance load_instance(const std::string& path) {
    const std::string text = read_source(path);
    if (looks_like_expression(path, text)) {
        try {
            RealizedGraph r = realize(parse_expr(text));
            return {std::move(r.graph), std::make_pair(r.source, r.sink)};
        } catch (const ParseError& e) {
            throw Failure{kInputError, path + ":" + e.diagnostic().to_string()};
        }
    }
    try {
        return {read_edge_list(text), std::nullopt};
    } catch (const std::exception& e) {
        throw Failure{kInputError, path + ": " + e.what()};
    }
}

std::vector<Element> vertices_by_name(const Multigraph& g, std::vector<Element> set) {
    std::sort(set.begin(), set.end(), [&](const Element& a, const Element& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.is_vertex() ? g.name(a.index) < g.name(b.index) : a.index < b.index;
    });
    return set;
}

json witness_json(const Multigraph& g, const std::vector<Element>& witness) {
    json vertices = json::array();
    json edges = json::array();
    for (const Element& el : vertices_by_name(g, witness)) {
        if (el.is_vertex()) {
            vertices.push_back(g.name(el.index));
        } else {
            const Edge& e = g.edge(el.index);
            edges.push_back({{"index", el.index}, {"u", g.name(e.u)}, {"v", g.name(e.v)}});
        }
    }
    return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

std::string witness_text(const Multigraph& g, const std::vector<Element>& witness) {
    std::string out;
    for (const Element& el : vertices_by_name(g, witness)) {
        if (!out.empty()) out += ' ';
        out += g.describe(el);
    }
    return out;
}

void report(std::ostream& out, const Multigraph& g, std::uint64_t gamma_m, const Count& count,
            const std::vector<Element>& witness, bool as_json, bool show_count, bool show_witness) {
    if (as_json) {
        json doc{{"gamma_m", gamma_m}, {"count", count.str()}, {"witness", witness_json(g, witness)}};
        out << doc.dump() << '\n';
        return;
    }
    out << "gamma_m: " << gamma_m << '\n';
    if (show_count) out << "count: " << count.str() << '\n';
    if (show_witness) out << "witness: " << witness_text(g, witness) << '\n';
}

std::vector<Element> parse_set(const Multigraph& g, const std::string& spec) {
    std::vector<Element> set;
    std::stringstream items(spec);
    std::string item;
    while (std::getline(items, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
        if (item.empty()) continue;
        if (item.size() < 3 || item[1] != ':' || (item[0] != 'v' && item[0] != 'e'))
            throw Failure{kInputError, "bad set item '" + item + "' (want v:<name> or e:<index>)"};
        const std::string body = item.substr(2);
        if (item[0] == 'v') {
            auto v = g.find(body);
            if (!v) throw Failure{kInputError, "unknown vertex '" + body + "'"};
            set.push_back(Element::vertex(*v));
        } else {
            std::size_t used = 0;
            unsigned long idx = 0;
            try {
                idx = std::stoul(body, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != body.size() || idx >= g.edge_count())
                throw Failure{kInputError, "unknown edge '" + body + "'"};
            set.push_back(Element::edge(static_cast<EdgeIndex>(idx)));
        }
    }
    return set;
}

GeneratorWeights parse_weights(const std::vector<double>& w) {
    if (w.size() != 3) throw Failure{kInputError, "--weights takes three numbers: series,parallel,gseries"};
    return {w[0], w[1], w[2]};
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                const GeneratorWeights& weights, unsigned repeat) {
    if (repeat == 0) throw std::invalid_argument("run_bench: repeat must be positive");
    std::vector<BenchRow> rows(sizes.size());
    std::vector<ParseTree> trees;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        rows[k].leaves = sizes[k];
        const auto t0 = std::chrono::steady_clock::now();
        trees.push_back(generate(seed, sizes[k], weights));
        rows[k].generate_ms = elapsed_ms(t0);
    }
    // Round-robin over sizes so that a slow stretch of machine time hits
    // every size rather than skewing one ratio.
    for (unsigned r = 0; r < repeat; ++r) {
        for (std::size_t k = 0; k < sizes.size(); ++k) {
            const auto t0 = std::chrono::steady_clock::now();
            const Solution sol = solve(trees[k]);
            const double ms = elapsed_ms(t0);
            BenchRow& row = rows[k];
            row.solve_ms = r == 0 ? ms : std::min(row.solve_ms, ms);
            row.slowest_solve_ms = std::max(row.slowest_solve_ms, ms);
            row.gamma_m = sol.gamma_m;
        }
    }
    return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum mixed dominating sets of generalized series-parallel graphs", "gspmixdom"};
    app.require_subcommand(1);

    std::string path;
    bool as_json = false, show_witness = false, show_count = false, force = false;
    std::string set_spec, terminals, format = "edges";
    std::uint64_t seed = 0;
    std::size_t leaves = 1;
    std::vector<double> weights{1.0, 1.0, 1.0};
    std::vector<std::size_t> sizes{100000, 200000, 400000};
    unsigned repeat = 5;

    auto* solve_cmd = app.add_subcommand("solve", "Solve a .gsp expression with the parse-tree DP");
    solve_cmd->add_option("path", path, ".gsp file, or - for stdin")->required();
    solve_cmd->add_flag("--json", as_json, "Emit JSON");
    solve_cmd->add_flag("--witness", show_witness, "Print a minimum set");
    solve_cmd->add_flag("--count", show_count, "Print the number of minimum sets");

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force a .gsp expression or edge list");
    oracle_cmd->add_option("path", path, "input file, or - for stdin")->required();
    oracle_cmd->add_flag("--force", force, "Allow more than 24 elements");
    oracle_cmd->add_flag("--json", as_json, "Emit JSON");

    auto* check_cmd = app.add_subcommand("check", "Test whether a set is mixed dominating");
    check_cmd->add_option("path", path, "input file, or - for stdin")->required();
    check_cmd->add_option("--set", set_spec, "e.g. v:a,e:0")->required();

    auto* gen_cmd = app.add_subcommand("gen", "Print a random parse expression");
    gen_cmd->add_option("--seed", seed, "RNG seed")->envname("GSPMIXDOM_SEED");
    gen_cmd->add_option("--leaves", leaves, "number of edges")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--weights", weights, "series,parallel,gseries")->delimiter(',')->expected(3);

    auto* decompose_cmd = app.add_subcommand("decompose", "Find a parse expression for an edge list");
    decompose_cmd->add_option("path", path, "edge-list file, or - for stdin")->required();
    decompose_cmd->add_option("--terminals", terminals, "s,t (default: first pair that works)");

    auto* bench_cmd = app.add_subcommand("bench", "Time the solver on generated instances");
    bench_cmd->add_option("--sizes", sizes, "leaf counts")->delimiter(',');
    bench_cmd->add_option("--seed", seed, "RNG seed")->envname("GSPMIXDOM_SEED");
    bench_cmd->add_option("--weights", weights, "series,parallel,gseries")->delimiter(',')->expected(3);
    bench_cmd->add_option("--repeat", repeat, "solves per size; the fastest is reported")->check(CLI::PositiveNumber);

    auto* realize_cmd = app.add_subcommand("realize", "Print the graph of a .gsp expression");
    realize_cmd->add_option("path", path, ".gsp file, or - for stdin")->required();
    realize_cmd->add_option("--format", format, "edges or dot")->check(CLI::IsMember({"edges", "dot"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0; every usage error is an input error.
        return app.exit(e, out, err) == 0 ? kOk : kInputError;
    }

    try {
        if (solve_cmd->parsed()) {
            const ParseTree tree = load_tree(path);
            const Solution sol = solve(tree);
            const RealizedGraph g = realize(tree);
            report(out, g.graph, sol.gamma_m, sol.count, sol.witness, as_json, show_count, show_witness);
        } else if (oracle_cmd->parsed()) {
            const Instance inst = load_instance(path);
            try {
                const OracleResult r = brute_force(inst.graph, force);
                report(out, inst.graph, r.gamma_m, r.count, r.witness, as_json, true, true);
            } catch (const SizeLimitExceeded& e) {
                throw Failure{kSizeLimit, std::string(e.what()) + (force ? "" : "; pass --force to try anyway")};
            }
        } else if (check_cmd->parsed()) {
            const Instance inst = load_instance(path);
            const auto set = parse_set(inst.graph, set_spec);
            if (auto miss = first_undominated(inst.graph, set)) {
                out << "false\nundominated: " << inst.graph.describe(*miss) << '\n';
            } else {
                out << "true\n";
            }
        } else if (gen_cmd->parsed()) {
            try {
                out << format_expr(generate(seed, leaves, parse_weights(weights))) << '\n';
            } catch (const std::invalid_argument& e) {
                throw Failure{kInputError, e.what()};
            }
        } else if (decompose_cmd->parsed()) {
            Multigraph g;
            try {
                g = read_edge_list(read_source(path));
            } catch (const std::runtime_error& e) {
                throw Failure{kInputError, path + ": " + e.what()};
            }
            try {
                if (terminals.empty()) {
                    out << format_expr(decompose_any(g)) << '\n';
                } else {
                    const auto comma = terminals.find(',');
                    if (comma == std::string::npos) throw Failure{kInputError, "--terminals wants s,t"};
                    const auto s = g.find(terminals.substr(0, comma));
                    const auto t = g.find(terminals.substr(comma + 1));
                    if (!s || !t) throw Failure{kInputError, "terminal is not a vertex of the graph"};
                    out << format_expr(decompose(g, *s, *t)) << '\n';
                }
            } catch (const DecomposeError& e) {
                throw Failure{e.kind() == DecomposeError::Kind::NotReducible ? kNotReducible : kInputError, e.what()};
            }
        } else if (bench_cmd->parsed()) {
            const auto rows = run_bench(sizes, seed, parse_weights(weights), repeat);
            out << std::left << std::setw(10) << "leaves" << std::setw(12) << "gen_ms" << std::setw(12) << "solve_ms"
                << std::setw(14) << "ns_per_leaf" << std::setw(8) << "ratio" << "gamma_m\n";
            for (std::size_t k = 0; k < rows.size(); ++k) {
                const BenchRow& r = rows[k];
                std::ostringstream ratio;
                if (k == 0)
                    ratio << '-';
                else
                    ratio << std::fixed << std::setprecision(2) << r.solve_ms / rows[k - 1].solve_ms;
                out << std::left << std::fixed << std::setprecision(1) << std::setw(10) << r.leaves << std::setw(12)
                    << r.generate_ms << std::setw(12) << r.solve_ms << std::setw(14) << r.solve_ms * 1e6 / r.leaves
                    << std::setw(8) << ratio.str() << r.gamma_m << '\n';
            }
        } else if (realize_cmd->parsed()) {
            const ParseTree tree = load_tree(path);
            const RealizedGraph g = realize(tree);
            if (format == "dot")
                write_dot(out, g.graph, std::make_pair(g.source, g.sink));
            else
                write_edge_list(out, g.graph, std::make_pair(g.source, g.sink));
        }
    } catch (const Failure& f) {
        err << "gspmixdom: " << f.message << '\n';
        return f.code;
    }
    return kOk;
}

}  // namespace gspmixdom::cli
