#pragma once

#include <cstddef>
#include <vector>

#include "coalition/graph.hpp"
#include "coalition/vertex_set.hpp"

namespace coalition {

// Closed neighborhoods N[v] = adj(v) + {v}, precomputed once per graph and
// shared read-only by every domination query on that graph.
class NeighborhoodTable {
public:
    explicit NeighborhoodTable(const Graph& g);

    std::size_t order() const { return closed_.size(); }
    const VertexSet& closed(Vertex v) const { return closed_[v]; }
    const VertexSet& all() const { return all_; }

    // Union of N[v] over v in s.
    VertexSet dominated_by(const VertexSet& s) const;
    bool is_dominating(const VertexSet& s) const;

private:
    std::vector<VertexSet> closed_;
    VertexSet all_;
};

inline NeighborhoodTable build_table(const Graph& g) { return NeighborhoodTable(g); }

}  // namespace coalition
