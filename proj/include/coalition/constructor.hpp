#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coalition/error.hpp"
#include "coalition/graph.hpp"
#include "coalition/partition.hpp"

namespace coalition {

// Replaces e1 = (a,b) by a-x-b and e2 = (c,d) by c-y-d, then joins x-y.
// x = n, y = n+1. Old degrees are unchanged and x, y get degree 3, so cubic
// input stays cubic.
Graph subdivide_and_bridge(const Graph& g, Edge e1, Edge e2);

// Replaces edge (u,v), u < v, by u-a, d-v and the diamond on a,b,c,d
// (edges ab, ac, bc, bd, cd). a..d = n..n+3; degree sequence is preserved.
Graph insert_diamond(const Graph& g, Edge e);

// Assigns every vertex of new_vertices to one of p's existing blocks so that
// the result is a coalition partition of g with the same order. Assignments
// are tried in lexicographic order (new vertices ascending, the first being
// most significant; block index ascending) and the first that verifies is
// returned. p may be given over the old universe or over g's universe; it must
// cover exactly the vertices of g that are not new.
std::optional<Partition> extend_partition(const Graph& g, const Partition& p, const std::vector<Vertex>& new_vertices);

struct FamilyMember {
    Graph graph;
    Partition partition;
    std::optional<Edge> edge;  // edge replaced by a diamond to obtain this member
};

class FamilyError : public Error {
public:
    FamilyError(std::size_t step, const std::string& what) : Error(what), step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

// Applies `steps` diamond insertions starting from (base, base_partition) and
// carries the partition along with extend_partition. When `edges` is empty each
// step uses the first edge, in lexicographic order, whose insertion admits an
// extension; otherwise edges[i] is used at step i. The base partition must
// verify and have order upper_bound(base).
std::vector<FamilyMember> build_family(const Graph& base, const Partition& base_partition, const std::vector<Edge>& edges,
                                       std::size_t steps);

}  // namespace coalition
