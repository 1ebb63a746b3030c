#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coalition/constructor.hpp"
#include "coalition/error.hpp"
#include "coalition/scan.hpp"
#include "coalition/solver.hpp"

using namespace coalition;
using Json = nlohmann::ordered_json;

namespace {

enum Exit : int { kOk = 0, kInvalid = 1, kNegative = 2, kBudget = 3 };

struct GraphInput {
    std::string graph6;
    std::string file;
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
    auto* g = cmd->add_option("-g,--graph", in.graph6, "graph6 string");
    auto* f = cmd->add_option("-f,--file", in.file, "file with one graph6 string per line")->check(CLI::ExistingFile);
    g->excludes(f);
    f->excludes(g);
}

std::vector<std::string> graph_lines(const GraphInput& in) {
    if (!in.graph6.empty()) return {in.graph6};
    if (in.file.empty()) throw CLI::ValidationError("one of -g or -f is required");
    std::ifstream file(in.file);
    std::vector<std::string> lines;
    for (auto& l : read_catalog(file))
        if (!l.empty()) lines.push_back(std::move(l));
    return lines;
}

Budget make_budget(std::optional<std::uint64_t> nodes) {
    Budget b;
    b.max_nodes = nodes;
    return b;
}

// "u1,v1;u2,v2" with 1-based labels
std::vector<Edge> parse_edges(const std::string& text) {
    std::vector<Edge> edges;
    std::stringstream all(text);
    std::string item;
    while (std::getline(all, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t u = 0, v = 0;
        char comma = 0;
        std::istringstream pair(item);
        if (!(pair >> u >> comma >> v) || comma != ',' || u == 0 || v == 0 || !(pair >> std::ws).eof()) {
            throw ParseError("edge list: cannot read '" + item + "'");
        }
        edges.emplace_back(u - 1, v - 1);
    }
    return edges;
}

int run_bound(const GraphInput& in) {
    for (const auto& line : graph_lines(in)) std::cout << upper_bound(parse_graph6(line)) << '\n';
    return kOk;
}

int run_number(const GraphInput& in, std::optional<std::uint64_t> nodes, bool json) {
    int code = kOk;
    for (const auto& line : graph_lines(in)) {
        const Graph g = parse_graph6(line);
        const SolveResult r = coalition_number(g, make_budget(nodes));
        if (json) {
            Json j;
            j["graph6"] = line;
            j["status"] = to_string(r.status);
            j["value"] = r.value ? Json(*r.value) : Json(nullptr);
            j["lower_bound"] = r.lower_bound;
            j["smallest_refuted"] = r.smallest_refuted ? Json(*r.smallest_refuted) : Json(nullptr);
            j["upper_bound"] = upper_bound(g);
            j["witness"] = r.witness ? Json(format_partition(*r.witness)) : Json(nullptr);
            j["nodes"] = r.stats.nodes;
            j["ms"] = r.stats.elapsed_ms;
            std::cout << j.dump() << '\n';
        } else if (r.status == SolveStatus::Exact) {
            std::cout << *r.value << '\t' << format_partition(*r.witness) << '\n';
        } else if (r.status == SolveStatus::BudgetExhausted) {
            std::cout << "budget\tlower=" << r.lower_bound;
            if (r.witness) std::cout << '\t' << format_partition(*r.witness);
            std::cout << '\n';
        } else {
            std::cout << "none\n";
        }
        if (r.status == SolveStatus::BudgetExhausted) code = std::max<int>(code, kBudget);
        if (r.status == SolveStatus::NoPartition && code == kOk) code = kNegative;
    }
    return code;
}

int run_decide(const GraphInput& in, std::size_t k, std::optional<std::uint64_t> nodes) {
    int code = kOk;
    for (const auto& line : graph_lines(in)) {
        const Graph g = parse_graph6(line);
        if (k > g.order()) {
            std::cout << "false\n";
            if (code == kOk) code = kNegative;
            continue;
        }
        const SearchResult r = exists_partition_of_order(g, k, make_budget(nodes));
        switch (r.outcome) {
            case SearchOutcome::Found:
                std::cout << "true\t" << format_partition(*r.witness) << '\n';
                break;
            case SearchOutcome::None:
                std::cout << "false\n";
                if (code == kOk) code = kNegative;
                break;
            case SearchOutcome::BudgetExhausted:
                std::cout << "budget\n";
                code = kBudget;
                break;
        }
    }
    return code;
}

int run_verify(const std::string& graph6, const std::string& partition) {
    const Graph g = parse_graph6(graph6);
    const Partition p = parse_partition(partition, g.order());
    const Verification v = verify_partition(g, p);
    if (v.ok()) {
        std::cout << "valid coalition partition of order " << p.order() << '\n' << describe(p, *v.certificate);
        return kOk;
    }
    std::cout << "rejected: " << to_string(v.rejection->reason);
    if (v.rejection->block) std::cout << " at block " << *v.rejection->block + 1;
    std::cout << " (" << v.rejection->detail << ")\n";
    return kNegative;
}

struct ScanArgs {
    std::string file;
    bool exact = false;
    std::optional<std::size_t> decide;
    std::optional<std::size_t> jobs;
    std::string out;
    std::string summary;
    std::optional<std::uint64_t> nodes;
    std::optional<std::size_t> expect_count;
    bool no_timings = false;
};

int run_scan(const ScanArgs& a) {
    std::ifstream file(a.file);
    const auto lines = read_catalog(file);
    if (a.expect_count && lines.size() != *a.expect_count) {
        std::cerr << "catalog has " << lines.size() << " lines, expected " << *a.expect_count << '\n';
        return kInvalid;
    }
    ScanOptions options;
    options.mode = a.decide ? ScanMode::Decide : ScanMode::Exact;
    if (a.decide) options.k = *a.decide;
    options.jobs = a.jobs.value_or(0);
    options.budget = make_budget(a.nodes);
    options.timings = !a.no_timings;

    std::ofstream out_file;
    if (!a.out.empty()) {
        out_file.open(a.out);
        if (!out_file) throw Error("cannot write " + a.out);
    }
    std::ostream& out = a.out.empty() ? std::cout : out_file;
    const CensusSummary s = scan_catalog(lines, options, [&](const ScanRecord& r) {
        out << to_jsonl(r) << '\n';
        if (!out) throw Error("write failed");
        if (r.status == "error") std::cerr << "line " << r.index + 1 << ": " << r.error << '\n';
    });
    out.flush();

    if (!a.summary.empty()) {
        std::ofstream sf(a.summary);
        sf << summary_csv(s);
        if (!sf) throw Error("cannot write " + a.summary);
    }
    std::cerr << "graphs " << s.total << ", ok " << s.ok << ", budget " << s.budget << ", errors " << s.errors
              << ", hits " << s.hits.size() << '\n';
    if (s.errors > 0) return kInvalid;
    if (s.budget > 0) return kBudget;
    return kOk;
}

struct FamilyArgs {
    std::string base;
    std::string partition;
    std::size_t steps = 0;
    std::string edges;
    std::string out;
};

int run_family(const FamilyArgs& a) {
    const Graph base = parse_graph6(a.base);
    const Partition p = parse_partition(a.partition, base.order());
    std::vector<FamilyMember> family;
    try {
        family = build_family(base, p, parse_edges(a.edges), a.steps);
    } catch (const FamilyError& e) {
        std::cerr << "family: " << e.what() << '\n';
        return kNegative;
    }
    std::ofstream out_file;
    if (!a.out.empty()) {
        out_file.open(a.out);
        if (!out_file) throw Error("cannot write " + a.out);
    }
    std::ostream& out = a.out.empty() ? std::cout : out_file;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& m = family[i];
        Json j;
        j["step"] = i;
        j["n"] = m.graph.order();
        j["graph6"] = encode_graph6(m.graph);
        j["partition"] = format_partition(m.partition);
        j["edge"] = m.edge ? Json(std::to_string(m.edge->first + 1) + "," + std::to_string(m.edge->second + 1))
                           : Json(nullptr);
        j["verified"] = verify_partition(m.graph, m.partition).ok();
        out << j.dump() << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coalition partitions of graphs"};
    app.require_subcommand(1);

    GraphInput bound_in, number_in, decide_in;
    auto* bound = app.add_subcommand("bound", "print the degree bound on the coalition number");
    add_graph_input(bound, bound_in);

    std::optional<std::uint64_t> number_nodes, decide_nodes;
    bool number_json = false;
    auto* number = app.add_subcommand("number", "compute the coalition number");
    add_graph_input(number, number_in);
    number->add_option("--budget-nodes", number_nodes, "search node limit per order");
    number->add_flag("--json", number_json, "print one JSON object per graph");

    std::size_t decide_k = 0;
    auto* decide = app.add_subcommand("decide", "decide whether a partition of order K exists");
    decide->add_option("-k", decide_k, "target order")->required()->check(CLI::PositiveNumber);
    add_graph_input(decide, decide_in);
    decide->add_option("--budget-nodes", decide_nodes, "search node limit");

    std::string verify_graph, verify_partition_text;
    auto* verify = app.add_subcommand("verify", "check a partition and print its certificate");
    verify->add_option("-g,--graph", verify_graph, "graph6 string")->required();
    verify->add_option("-p,--partition", verify_partition_text, "blocks separated by '|', 1-based vertices")->required();

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "scan a graph6 catalog");
    scan->add_option("-f,--file", scan_args.file, "catalog file")->required()->check(CLI::ExistingFile);
    auto* exact_flag = scan->add_flag("--exact", scan_args.exact, "compute the coalition number of each graph");
    auto* decide_opt = scan->add_option("--decide", scan_args.decide, "decide order K for each graph")
                           ->check(CLI::PositiveNumber);
    exact_flag->excludes(decide_opt);
    scan->add_option("--jobs", scan_args.jobs, "worker threads (default: COALITION_JOBS or all cores)")
        ->check(CLI::PositiveNumber);
    scan->add_option("--out", scan_args.out, "JSON Lines output (default: stdout)");
    scan->add_option("--summary", scan_args.summary, "CSV summary output");
    scan->add_option("--budget-nodes", scan_args.nodes, "search node limit per graph and order");
    scan->add_option("--expect-count", scan_args.expect_count, "fail unless the catalog has this many lines");
    scan->add_flag("--no-timings", scan_args.no_timings, "write ms = 0 for byte-reproducible output");

    FamilyArgs family_args;
    auto* family = app.add_subcommand("family", "grow a family by repeated diamond insertion");
    family->add_option("--base", family_args.base, "base graph6")->required();
    family->add_option("--partition", family_args.partition, "base partition")->required();
    family->add_option("--steps", family_args.steps, "number of insertions")->required();
    family->add_option("--edges", family_args.edges, "edges per step, \"u1,v1;u2,v2\" (1-based)");
    family->add_option("--out", family_args.out, "JSON Lines output (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*bound) return run_bound(bound_in);
        if (*number) return run_number(number_in, number_nodes, number_json);
        if (*decide) return run_decide(decide_in, decide_k, decide_nodes);
        if (*verify) return run_verify(verify_graph, verify_partition_text);
        if (*scan) {
            if (!scan_args.exact && !scan_args.decide) throw CLI::ValidationError("scan needs --exact or --decide K");
            return run_scan(scan_args);
        }
        if (*family) return run_family(family_args);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kInvalid;
}
