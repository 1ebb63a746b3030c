#include "coalition/constructor.hpp"

#include <algorithm>
#include <string>

#include "coalition/coalition.hpp"
#include "coalition/domination.hpp"

namespace coalition {

namespace {

Edge normalized(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

std::string edge_text(Edge e) { return "(" + std::to_string(e.first + 1) + "," + std::to_string(e.second + 1) + ")"; }

void require_edge(const Graph& g, Edge e) {
    if (e.first >= g.order() || e.second >= g.order() || !g.has_edge(e.first, e.second)) {
        throw PreconditionError("edge " + edge_text(e) + " is not an edge of the graph");
    }
}

std::vector<Edge> edges_without(const Graph& g, Edge removed) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        if (e != removed) out.push_back(e);
    }
    return out;
}

struct Extension {
    const Graph& g;
    const NeighborhoodTable& table;
    const std::vector<Vertex>& fresh;
    std::vector<VertexSet> blocks;
    std::vector<VertexSet> covered;

    bool assign(std::size_t idx) {
        if (idx == fresh.size()) return verify_partition(g, table, Partition(g.order(), blocks)).ok();
        const Vertex v = fresh[idx];
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const VertexSet saved = covered[b];
            blocks[b].insert(v);
            covered[b] |= table.closed(v);
            // A multi-vertex dominating block is invalid and stays dominating.
            if (!covered[b].is_full() && assign(idx + 1)) return true;
            blocks[b].erase(v);
            covered[b] = saved;
        }
        return false;
    }
};

}  // namespace

Graph subdivide_and_bridge(const Graph& g, Edge e1, Edge e2) {
    e1 = normalized(e1);
    e2 = normalized(e2);
    require_edge(g, e1);
    require_edge(g, e2);
    if (e1 == e2) throw PreconditionError("subdivided edges must be distinct");
    const Vertex x = g.order();
    const Vertex y = g.order() + 1;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (e != e1 && e != e2) edges.push_back(e);
    }
    edges.insert(edges.end(), {{e1.first, x}, {x, e1.second}, {e2.first, y}, {y, e2.second}, {x, y}});
    return Graph::from_edges(g.order() + 2, edges);
}

Graph insert_diamond(const Graph& g, Edge e) {
    e = normalized(e);
    require_edge(g, e);
    const Vertex n = g.order();
    const Vertex a = n, b = n + 1, c = n + 2, d = n + 3;
    std::vector<Edge> edges = edges_without(g, e);
    edges.insert(edges.end(), {{a, b}, {a, c}, {b, c}, {b, d}, {c, d}, {e.first, a}, {d, e.second}});
    return Graph::from_edges(n + 4, edges);
}

std::optional<Partition> extend_partition(const Graph& g, const Partition& p, const std::vector<Vertex>& new_vertices) {
    const std::size_t n = g.order();
    VertexSet fresh(n);
    for (Vertex v : new_vertices) {
        if (v >= n) throw PreconditionError("new vertex " + std::to_string(v + 1) + " is not a vertex of the graph");
        if (fresh.contains(v)) throw PreconditionError("new vertex " + std::to_string(v + 1) + " listed twice");
        fresh.insert(v);
    }
    if (p.universe() != n && p.universe() + new_vertices.size() != n) {
        throw PreconditionError("partition universe " + std::to_string(p.universe()) + " does not fit graph order " +
                                std::to_string(n));
    }

    std::vector<VertexSet> blocks;
    VertexSet seen(n);
    for (const auto& block : p.blocks()) {
        VertexSet lifted = VertexSet::from_mask(n, block.mask());
        if (lifted.empty() || lifted.intersects(seen) || lifted.intersects(fresh)) {
            throw PreconditionError("partition blocks must be nonempty, disjoint and avoid the new vertices");
        }
        seen |= lifted;
        blocks.push_back(lifted);
    }
    if ((seen | fresh) != VertexSet::full(n)) {
        throw PreconditionError("partition does not cover every old vertex of the graph");
    }

    std::vector<Vertex> order = fresh.members();
    const NeighborhoodTable table(g);
    Extension ext{g, table, order, blocks, {}};
    for (const auto& b : ext.blocks) ext.covered.push_back(table.dominated_by(b));
    if (!ext.assign(0)) return std::nullopt;
    return Partition(n, std::move(ext.blocks));
}

std::vector<FamilyMember> build_family(const Graph& base, const Partition& base_partition, const std::vector<Edge>& edges,
                                       std::size_t steps) {
    const auto check = verify_partition(base, base_partition);
    if (!check.ok()) {
        throw PreconditionError("base partition is not a coalition partition: " + to_string(check.rejection->reason));
    }
    if (base_partition.order() != upper_bound(base)) {
        throw PreconditionError("base partition has order " + std::to_string(base_partition.order()) +
                                ", expected the upper bound " + std::to_string(upper_bound(base)));
    }
    if (!edges.empty() && edges.size() < steps) {
        throw PreconditionError("edge list supplies " + std::to_string(edges.size()) + " edges for " +
                                std::to_string(steps) + " steps");
    }

    std::vector<FamilyMember> family{{base, base_partition, std::nullopt}};
    for (std::size_t step = 0; step < steps; ++step) {
        const FamilyMember& current = family.back();
        const Vertex n = current.graph.order();
        const std::vector<Vertex> fresh{n, n + 1, n + 2, n + 3};

        std::vector<Edge> candidates;
        if (edges.empty()) {
            candidates = current.graph.edges();
        } else {
            const Edge e = normalized(edges[step]);
            if (e.first >= n || e.second >= n || !current.graph.has_edge(e.first, e.second)) {
                throw FamilyError(step, "step " + std::to_string(step + 1) + ": " + edge_text(e) + " is not an edge");
            }
            candidates.push_back(e);
        }

        bool extended = false;
        for (const Edge& e : candidates) {
            Graph next = insert_diamond(current.graph, e);
            auto partition = extend_partition(next, current.partition, fresh);
            if (!partition) continue;
            family.push_back({std::move(next), std::move(*partition), e});
            extended = true;
            break;
        }
        if (!extended) {
            throw FamilyError(step, "step " + std::to_string(step + 1) + ": no diamond insertion admits an extension");
        }
    }
    return family;
}

}  // namespace coalition
