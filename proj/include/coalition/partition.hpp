#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coalition/vertex_set.hpp"

namespace coalition {

struct PartitionDefect {
    std::optional<std::size_t> block;  // absent when the defect is global (uncovered vertices)
    std::string reason;
};

// Ordered list of vertex blocks over a common universe. Construction does not
// enforce the partition invariants; defect() reports the first violation so
// that verification can reject malformed input as a result rather than a fault.
class Partition {
public:
    Partition() = default;
    Partition(std::size_t universe, std::vector<VertexSet> blocks);
    Partition(std::size_t universe, const std::vector<std::vector<Vertex>>& blocks);

    std::size_t universe() const { return universe_; }
    std::size_t order() const { return blocks_.size(); }
    const std::vector<VertexSet>& blocks() const { return blocks_; }
    const VertexSet& block(std::size_t i) const { return blocks_.at(i); }

    std::optional<PartitionDefect> defect() const;
    bool is_valid() const { return !defect().has_value(); }

    // Index of the block containing v; order() when v is unassigned.
    std::size_t block_of(Vertex v) const;

    std::vector<std::vector<Vertex>> to_lists() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<VertexSet> blocks_;
};

// Text form: blocks separated by '|', 1-based vertices separated by spaces,
// e.g. "2|11|12|13|14|1 7|3 6 16|4 5 15|8 9 10".
Partition parse_partition(std::string_view text, std::size_t universe);
std::string format_partition(const Partition& p);

}  // namespace coalition
