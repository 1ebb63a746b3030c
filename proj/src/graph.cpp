#include "coalition/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "coalition/error.hpp"

namespace coalition {

Graph::Graph(std::vector<VertexSet> adj) : adj_(std::move(adj)) {
    std::size_t degree_sum = 0;
    for (const auto& a : adj_) degree_sum += a.size();
    m_ = degree_sum / 2;
    check_invariants();
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
    if (n == 0 || n > kMaxVertices) {
        throw PreconditionError("graph order must be in [1, " + std::to_string(kMaxVertices) + "], got " +
                                std::to_string(n));
    }
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") has an endpoint outside 0.." + std::to_string(n - 1));
        }
        if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return Graph(std::move(adj));
}

void Graph::check_invariants() const {
    const std::size_t n = adj_.size();
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
        const auto& a = adj_[v];
        if (a.universe() != n || a.contains(v)) throw Error("graph invariant violated at vertex " + std::to_string(v));
        a.for_each([&](Vertex u) {
            if (!adj_[u].contains(v)) throw Error("asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v));
        });
        degree_sum += a.size();
    }
    if (degree_sum != 2 * m_) throw Error("handshake invariant violated");
}

const VertexSet& Graph::adjacency(Vertex v) const {
    if (v >= adj_.size()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    return adj_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const { return u < order() && adj_[u].contains(v); }

std::size_t Graph::degree(Vertex v) const { return adjacency(v).size(); }

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& a : adj_) best = std::max(best, a.size());
    return best;
}

bool Graph::is_regular(std::size_t r) const {
    return std::all_of(adj_.begin(), adj_.end(), [r](const VertexSet& a) { return a.size() == r; });
}

bool Graph::is_connected() const {
    VertexSet seen(order());
    std::deque<Vertex> queue{0};
    seen.insert(0);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        adj_[v].for_each([&](Vertex u) {
            if (!seen.contains(u)) {
                seen.insert(u);
                queue.push_back(u);
            }
        });
    }
    return seen.size() == order();
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u) {
        adj_[u].for_each([&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    }
    return out;
}

}  // namespace coalition
