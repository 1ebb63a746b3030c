#include "coalition/domination.hpp"

#include <string>

#include "coalition/error.hpp"

namespace coalition {

NeighborhoodTable::NeighborhoodTable(const Graph& g) : all_(VertexSet::full(g.order())) {
    closed_.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet c = g.adjacency(v);
        c.insert(v);
        closed_.push_back(c);
    }
}

VertexSet NeighborhoodTable::dominated_by(const VertexSet& s) const {
    if (s.universe() != order()) {
        throw PreconditionError("vertex set universe " + std::to_string(s.universe()) + " does not match graph order " +
                                std::to_string(order()));
    }
    Mask covered{};
    s.for_each([&](Vertex v) { covered |= closed_[v].mask(); });
    return VertexSet::from_mask(order(), covered);
}

bool NeighborhoodTable::is_dominating(const VertexSet& s) const { return dominated_by(s).is_full(); }

}  // namespace coalition
