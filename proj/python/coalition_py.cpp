#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coalition/constructor.hpp"
#include "coalition/error.hpp"
#include "coalition/scan.hpp"
#include "coalition/solver.hpp"

namespace py = pybind11;
using namespace coalition;

namespace {

using Blocks = std::vector<std::vector<Vertex>>;

Partition to_partition(const Graph& g, const Blocks& blocks) { return Partition(g.order(), blocks); }

Budget make_budget(std::optional<std::uint64_t> max_nodes, std::optional<double> max_seconds) {
    Budget b;
    b.max_nodes = max_nodes;
    if (max_seconds) b.max_time = std::chrono::milliseconds(static_cast<long long>(*max_seconds * 1000.0));
    return b;
}

py::dict verification_dict(const Verification& v) {
    py::dict d;
    d["ok"] = v.ok();
    if (v.ok()) {
        py::list proofs;
        for (const auto& proof : v.certificate->proofs) {
            if (const auto* s = std::get_if<DominatingSingleton>(&proof)) {
                proofs.append(py::make_tuple("singleton", s->vertex));
            } else {
                proofs.append(py::make_tuple("partner", std::get<Partner>(proof).block));
            }
        }
        d["certificate"] = proofs;
    } else {
        d["reason"] = to_string(v.rejection->reason);
        d["block"] = v.rejection->block ? py::cast(*v.rejection->block) : py::none();
        d["detail"] = v.rejection->detail;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coalition partitions of graphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", &parse_graph6, py::arg("text"))
        .def("graph6", &encode_graph6)
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, Vertex v) { return g.adjacency(v).members(); })
        .def("max_degree", &Graph::max_degree)
        .def("is_regular", &Graph::is_regular)
        .def("is_connected", &Graph::is_connected)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph('" + encode_graph6(g) + "')"; });

    m.def("upper_bound", &upper_bound, py::arg("graph"));

    m.def("is_dominating", [](const Graph& g, const std::vector<Vertex>& s) {
        return NeighborhoodTable(g).is_dominating(VertexSet(g.order(), s));
    }, py::arg("graph"), py::arg("vertices"));

    m.def("parse_partition", [](const std::string& text, std::size_t n) { return parse_partition(text, n).to_lists(); },
          py::arg("text"), py::arg("n"));
    m.def("format_partition", [](const Blocks& blocks, std::size_t n) { return format_partition(Partition(n, blocks)); },
          py::arg("blocks"), py::arg("n"));

    m.def("verify_partition", [](const Graph& g, const Blocks& blocks) {
        return verification_dict(verify_partition(g, to_partition(g, blocks)));
    }, py::arg("graph"), py::arg("blocks"));

    m.def("exists_partition_of_order", [](const Graph& g, std::size_t k, std::optional<std::uint64_t> max_nodes,
                                          std::optional<double> max_seconds) -> py::object {
        SearchResult r;
        {
            py::gil_scoped_release release;
            r = exists_partition_of_order(g, k, make_budget(max_nodes, max_seconds));
        }
        if (r.outcome == SearchOutcome::BudgetExhausted) return py::str("budget");
        if (r.outcome == SearchOutcome::None) return py::none();
        return py::cast(r.witness->to_lists());
    }, py::arg("graph"), py::arg("k"), py::arg("max_nodes") = py::none(), py::arg("max_seconds") = py::none(),
       "Blocks of an order-k partition, None when none exists, or 'budget'.");

    m.def("coalition_number", [](const Graph& g, std::optional<std::uint64_t> max_nodes, std::optional<double> max_seconds) {
        SolveResult r;
        {
            py::gil_scoped_release release;
            r = coalition_number(g, make_budget(max_nodes, max_seconds));
        }
        py::dict d;
        d["status"] = to_string(r.status);
        d["value"] = r.value ? py::cast(*r.value) : py::none();
        d["lower_bound"] = r.lower_bound;
        d["smallest_refuted"] = r.smallest_refuted ? py::cast(*r.smallest_refuted) : py::none();
        d["witness"] = r.witness ? py::cast(r.witness->to_lists()) : py::none();
        d["nodes"] = r.stats.nodes;
        d["ms"] = r.stats.elapsed_ms;
        return d;
    }, py::arg("graph"), py::arg("max_nodes") = py::none(), py::arg("max_seconds") = py::none());

    m.def("brute_force_coalition_number", &brute_force_coalition_number, py::arg("graph"));

    m.def("subdivide_and_bridge", &subdivide_and_bridge, py::arg("graph"), py::arg("e1"), py::arg("e2"));
    m.def("insert_diamond", &insert_diamond, py::arg("graph"), py::arg("edge"));

    m.def("extend_partition", [](const Graph& g, const Blocks& blocks, const std::vector<Vertex>& fresh) -> py::object {
        if (fresh.size() > g.order()) throw PreconditionError("more new vertices than graph vertices");
        const auto r = extend_partition(g, Partition(g.order() - fresh.size(), blocks), fresh);
        if (!r) return py::none();
        return py::cast(r->to_lists());
    }, py::arg("graph"), py::arg("blocks"), py::arg("new_vertices"));

    m.def("build_family", [](const Graph& base, const Blocks& blocks, const std::vector<Edge>& edges, std::size_t steps) {
        py::list out;
        for (const auto& member : build_family(base, to_partition(base, blocks), edges, steps)) {
            out.append(py::make_tuple(member.graph, member.partition.to_lists(),
                                      member.edge ? py::cast(*member.edge) : py::none()));
        }
        return out;
    }, py::arg("base"), py::arg("blocks"), py::arg("edges") = std::vector<Edge>{}, py::arg("steps") = 0);

    m.def("scan", [](const std::vector<std::string>& lines, std::optional<std::size_t> decide, std::size_t jobs,
                     std::optional<std::uint64_t> max_nodes, bool timings) {
        ScanOptions options;
        options.mode = decide ? ScanMode::Decide : ScanMode::Exact;
        if (decide) options.k = *decide;
        options.jobs = jobs;
        options.budget = make_budget(max_nodes, std::nullopt);
        options.timings = timings;
        std::vector<std::string> rows;
        CensusSummary summary;
        {
            py::gil_scoped_release release;
            summary = scan_catalog(lines, options, [&](const ScanRecord& r) { rows.push_back(to_jsonl(r)); });
        }
        return py::make_tuple(rows, summary_csv(summary));
    }, py::arg("lines"), py::arg("decide") = py::none(), py::arg("jobs") = 0, py::arg("max_nodes") = py::none(),
       py::arg("timings") = true, "JSON Lines records and the CSV summary for a list of graph6 strings.");
}
