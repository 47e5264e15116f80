#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "partlog/dot.hpp"
#include "partlog/errors.hpp"
#include "partlog/json_out.hpp"
#include "partlog/text.hpp"

using nlohmann::json;
using namespace partlog;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitError = 2;

struct RunConfig {
    std::string format = "text";
    std::string method = "graph";
    int max_n = kDefaultMaxN;
    std::size_t enum_cap = kDefaultEnumerationCap;
    std::size_t var_cap = kDefaultVariableCap;
    std::size_t depth_cap = kDefaultDepthCap;
    std::size_t size_cap = kDefaultSizeCap;
    unsigned workers = 1;
    bool debug_checks = false;

    // eval
    std::string formula_text;
    std::vector<std::string> universe_names;
    std::size_t universe_size = 0;
    std::vector<std::string> bindings;
    std::string emit_graph;
    std::string graph_out;

    // taut
    std::string taut_target;

    // structures
    std::string base_partition;

    // explore
    std::string csv_out;
};

UniversePtr universe_from_config(const RunConfig& cfg) {
    if (!cfg.universe_names.empty() && cfg.universe_size != 0)
        throw Error("give either -u names or -n size, not both");
    if (!cfg.universe_names.empty())
        return make_universe(cfg.universe_names);
    if (cfg.universe_size != 0)
        return make_letter_universe(cfg.universe_size);
    throw Error("a universe is required: -u a,b,c or -n 3");
}

Assignment parse_bindings(const RunConfig& cfg, const UniversePtr& u) {
    Assignment a(u);
    for (const std::string& binding : cfg.bindings) {
        std::size_t eq = binding.find('=');
        if (eq == std::string::npos)
            throw Error("bindings look like name={a,b|c}; got '" + binding + "'");
        std::string name = binding.substr(0, eq);
        if (!is_valid_variable_name(name))
            throw Error("invalid variable name '" + name + "' in binding");
        a.bind(name, parse_partition(binding.substr(eq + 1), u));
    }
    return a;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write file '" + path + "'");
    out << content;
}

std::string witness_summary(const TautologyVerdict& v) {
    if (v.kind == VerdictKind::NotSubsetTautology && v.truth_witness) {
        std::string out;
        for (const auto& [name, value] : v.truth_witness->valuation) {
            if (!out.empty())
                out += ", ";
            out += name + "=" + (value ? "T" : "F");
        }
        return out.empty() ? "(no variables)" : out;
    }
    if (v.kind == VerdictKind::PartitionRefuted && v.partition_witness) {
        std::string out;
        for (const auto& [name, p] : v.partition_witness->assignment.bindings()) {
            if (!out.empty())
                out += ", ";
            out += name + "=" + format_partition(p);
        }
        out += " -> " + format_partition(v.partition_witness->value);
        return out;
    }
    return "-";
}

std::string verdict_summary(const TautologyVerdict& v) {
    std::string out = verdict_kind_name(v.kind);
    if (v.kind == VerdictKind::NotRefutedUpTo || v.kind == VerdictKind::PartitionRefuted)
        out += "(" + std::to_string(v.bound) + ")";
    return out;
}

int cmd_eval(const RunConfig& cfg) {
    UniversePtr u = universe_from_config(cfg);
    Assignment a = parse_bindings(cfg, u);
    FormulaPtr f = parse_formula(cfg.formula_text);
    EvalMethod method = eval_method_from_name(cfg.method);
    Partition result = eval_partition(f, a, method);

    std::string dot;
    if (cfg.emit_graph == "dot")
        dot = render_eval_dot(f, a, method);
    else if (!cfg.emit_graph.empty())
        throw Error("unknown graph format '" + cfg.emit_graph + "' (known: dot)");

    if (cfg.format == "json") {
        json out{{"formula", print_formula(f)},
                 {"method", eval_method_name(method)},
                 {"universe", u->names()},
                 {"result", partition_to_json(result)}};
        if (!dot.empty() && cfg.graph_out.empty())
            out["dot"] = dot;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << format_partition(result) << "\n";
        if (!dot.empty() && cfg.graph_out.empty())
            std::cout << dot;
    }
    if (!dot.empty() && !cfg.graph_out.empty())
        write_file(cfg.graph_out, dot);
    return kExitOk;
}

int cmd_taut(const RunConfig& cfg) {
    std::vector<CorpusEntry> corpus;
    std::ifstream probe(cfg.taut_target);
    if (probe.good()) {
        corpus = parse_corpus(read_file(cfg.taut_target));
    } else if (cfg.taut_target.find('/') != std::string::npos ||
               cfg.taut_target.find(".taut") != std::string::npos) {
        throw Error("cannot open corpus file '" + cfg.taut_target + "'");
    } else {
        corpus.push_back({"inline", cfg.taut_target});
    }

    TautologyOptions opts;
    opts.variable_cap = cfg.var_cap;
    opts.enumeration_cap = cfg.enum_cap;
    opts.workers = cfg.workers;
    CorpusReport report = check_corpus(corpus, cfg.max_n, opts);

    if (cfg.format == "json") {
        std::cout << corpus_report_to_json(report).dump(2) << "\n";
    } else {
        std::size_t name_w = 4, sub_w = 6, part_w = 9;
        for (const CorpusRow& row : report.rows) {
            name_w = std::max(name_w, row.name.size());
            if (row.subset)
                sub_w = std::max(sub_w, verdict_summary(*row.subset).size());
            if (row.partition)
                part_w = std::max(part_w, verdict_summary(*row.partition).size());
        }
        auto pad = [](const std::string& s, std::size_t w) {
            return s + std::string(w > s.size() ? w - s.size() : 1, ' ');
        };
        std::cout << pad("name", name_w + 2) << pad("subset", sub_w + 2)
                  << pad("partition", part_w + 2) << "witness\n";
        for (const CorpusRow& row : report.rows) {
            if (!row.error.empty()) {
                std::cout << pad(row.name, name_w + 2) << "error: " << row.error << "\n";
                continue;
            }
            std::string witness = witness_summary(*row.partition);
            if (witness == "-" && row.subset->kind == VerdictKind::NotSubsetTautology)
                witness = witness_summary(*row.subset);
            std::cout << pad(row.name, name_w + 2) << pad(verdict_summary(*row.subset), sub_w + 2)
                      << pad(verdict_summary(*row.partition), part_w + 2) << witness << "\n";
        }
    }
    if (report.any_error())
        return kExitError;
    return report.any_refuted() ? kExitRefuted : kExitOk;
}

int cmd_structures_core(const RunConfig& cfg) {
    UniversePtr u = universe_from_config(cfg);
    Partition base = parse_partition(cfg.base_partition, u);
    BooleanCore core = boolean_core(base, cfg.enum_cap);
    if (cfg.format == "json") {
        std::cout << core_to_json(core).dump(2) << "\n";
    } else {
        std::cout << "base:    " << format_partition(core.base) << "\n";
        std::cout << "top:     " << format_partition(core.top) << "\n";
        std::cout << "bottom:  " << format_partition(core.bottom) << "\n";
        std::cout << "members (" << core.members.size() << "):\n";
        for (const Partition& m : core.members)
            std::cout << "  " << format_partition(m) << "\n";
    }
    return kExitOk;
}

int cmd_structures_embed(const RunConfig& cfg) {
    UniversePtr u = universe_from_config(cfg);
    EmbeddingReport report = check_powerset_embedding(u, kDefaultEmbeddingCap);
    if (cfg.format == "json") {
        std::cout << embedding_report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << "universe: ";
        for (std::size_t i = 0; i < u->size(); ++i)
            std::cout << (i ? "," : "") << u->name(i);
        std::cout << "  (" << (std::size_t{1} << u->size()) << " subsets)\n";
        for (const LawCheck& law : report.laws) {
            std::cout << (law.pass ? "pass  " : "FAIL  ") << law.law;
            if (!law.counterexample.empty())
                std::cout << "  [" << law.counterexample << "]";
            std::cout << "\n";
        }
        std::cout << "core members: " << report.core_member_count << " (expected "
                  << report.expected_member_count << ")\n";
        std::cout << (report.all_pass ? "all laws pass\n" : "some laws FAILED\n");
    }
    return kExitOk;
}

int cmd_explore(const RunConfig& cfg) {
    std::size_t n = cfg.universe_size ? cfg.universe_size : 3;
    UniversePtr u = make_letter_universe(n);
    // The universe cap follows the requested size so -n is authoritative;
    // the depth/size caps keep the run bounded.
    ExploreReport report = run_exploration(u, cfg.depth_cap, cfg.size_cap, n);
    if (!cfg.csv_out.empty())
        write_file(cfg.csv_out, explore_counts_csv(report));
    if (cfg.format == "json") {
        std::cout << explore_report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << "universe size: " << report.universe_size << "\n";
        std::cout << "counts by depth:";
        for (std::size_t c : report.closure.counts_by_depth)
            std::cout << " " << c;
        std::cout << "\n";
        std::cout << "total distinct tables: " << report.closure.tables.size() << "\n";
        std::cout << "beyond seeds: " << report.beyond_seed_count << "\n";
        std::cout << "beyond the 16 basics: " << report.beyond_basic_count << "\n";
        std::cout << "saturated: " << (report.closure.saturated ? "yes" : "no") << "\n";
        std::cout << "peirce equals constant 1: "
                  << (report.peirce_equals_constant_one ? "yes" : "no");
        if (!report.peirce_difference.empty())
            std::cout << "  (" << report.peirce_difference << ")";
        std::cout << "\n";
        for (const auto& [depth, formula] : report.samples)
            std::cout << "depth " << depth << " sample: " << formula << "\n";
    }
    return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg) {
    UniversePtr u = universe_from_config(cfg);
    if (cfg.format == "json") {
        json parts = json::array();
        for_each_partition(
            u, [&](const Partition& p) { parts.push_back(partition_to_json(p)); }, cfg.enum_cap);
        json out{{"universe", u->names()}, {"count", parts.size()}, {"partitions", parts}};
        std::cout << out.dump(2) << "\n";
    } else {
        for_each_partition(
            u, [&](const Partition& p) { std::cout << format_partition(p) << "\n"; },
            cfg.enum_cap);
    }
    return kExitOk;
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--debug-checks", cfg.debug_checks,
                  "Cross-check refinement via both the block and the ditset route");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boolean operations on set partitions: evaluation, tautology search, "
                 "algebraic structure reports and compound-operation exploration"};
    app.require_subcommand(1);
    app.set_config("--config");
    app.fallthrough();

    RunConfig cfg;

    CLI::App* eval = app.add_subcommand("eval", "Evaluate a formula on bound partitions");
    eval->add_option("formula", cfg.formula_text, "Formula, e.g. \"s -> p\"")->required();
    eval->add_option("-u,--universe", cfg.universe_names, "Universe element names")
        ->delimiter(',');
    eval->add_option("-n,--size", cfg.universe_size, "Universe size (letter names)");
    eval->add_option("-b,--bind", cfg.bindings, "Variable binding name={a,b|c}");
    eval->add_option("--method", cfg.method, "graph, closure or blocks")
        ->check(CLI::IsMember({"graph", "closure", "blocks"}));
    eval->add_option("--emit-graph", cfg.emit_graph, "Emit the labelled K(U); format: dot");
    eval->add_option("--graph-out", cfg.graph_out, "Write the graph to a file instead of stdout");
    add_common_flags(eval, cfg);

    CLI::App* taut = app.add_subcommand("taut", "Check a corpus file or an inline formula");
    taut->add_option("target", cfg.taut_target, "Corpus path or formula")->required();
    taut->add_option("--max-n", cfg.max_n, "Largest universe size searched");
    taut->add_option("--workers", cfg.workers, "Worker threads for the sweep");
    taut->add_option("--var-cap", cfg.var_cap, "Most variables allowed per formula");
    taut->add_option("--enum-cap", cfg.enum_cap, "Enumeration cap on universe size");
    add_common_flags(taut, cfg);

    CLI::App* structures = app.add_subcommand("structures", "Algebraic structure reports");
    structures->require_subcommand(1);
    CLI::App* core = structures->add_subcommand("core", "Boolean core of [pi, 1]");
    core->add_option("-p,--partition", cfg.base_partition, "Base partition literal")->required();
    core->add_option("-u,--universe", cfg.universe_names, "Universe element names")
        ->delimiter(',');
    core->add_option("-n,--size", cfg.universe_size, "Universe size (letter names)");
    core->add_option("--enum-cap", cfg.enum_cap, "Enumeration cap on universe size");
    add_common_flags(core, cfg);
    CLI::App* embed = structures->add_subcommand("embed", "Powerset embedding report");
    embed->add_option("-n,--size", cfg.universe_size, "Base universe size")->required();
    embed->add_option("-u,--universe", cfg.universe_names, "Base universe element names")
        ->delimiter(',');
    add_common_flags(embed, cfg);

    CLI::App* explore = app.add_subcommand("explore", "Compound the 16 binary operations");
    explore->add_option("-n,--size", cfg.universe_size, "Universe size (default 3)");
    explore->add_option("--depth", cfg.depth_cap, "Compounding depth cap");
    explore->add_option("--size-cap", cfg.size_cap, "Most distinct tables kept");
    explore->add_option("--csv", cfg.csv_out, "Also write counts as CSV");
    add_common_flags(explore, cfg);

    CLI::App* enumerate = app.add_subcommand("enumerate", "List the partitions of a universe");
    enumerate->add_option("-n,--size", cfg.universe_size, "Universe size (letter names)");
    enumerate->add_option("-u,--universe", cfg.universe_names, "Universe element names")
        ->delimiter(',');
    enumerate->add_option("--enum-cap", cfg.enum_cap, "Enumeration cap on universe size");
    add_common_flags(enumerate, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    set_debug_order_checks(cfg.debug_checks);

    try {
        if (eval->parsed())
            return cmd_eval(cfg);
        if (taut->parsed())
            return cmd_taut(cfg);
        if (structures->parsed())
            return core->parsed() ? cmd_structures_core(cfg) : cmd_structures_embed(cfg);
        if (explore->parsed())
            return cmd_explore(cfg);
        if (enumerate->parsed())
            return cmd_enumerate(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
