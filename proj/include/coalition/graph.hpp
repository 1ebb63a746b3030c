#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coalition/vertex_set.hpp"

namespace coalition {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1, 1 <= n <= 256.
// adjacency(v) is the open neighborhood of v.
class Graph {
public:
    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

    std::size_t order() const { return adj_.size(); }
    std::size_t edge_count() const { return m_; }

    const VertexSet& adjacency(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;

    std::size_t degree(Vertex v) const;
    std::size_t max_degree() const;
    bool is_regular(std::size_t r) const;
    bool is_connected() const;

    // Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    explicit Graph(std::vector<VertexSet> adj);
    void check_invariants() const;

    std::vector<VertexSet> adj_;
    std::size_t m_ = 0;
};

// graph6 codec. Accepts an optional ">>graph6<<" header and a trailing newline.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

}  // namespace coalition
