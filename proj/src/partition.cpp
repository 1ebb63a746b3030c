#include "coalition/partition.hpp"

#include <cctype>
#include <charconv>

#include "coalition/error.hpp"

namespace coalition {

Partition::Partition(std::size_t universe, std::vector<VertexSet> blocks) : universe_(universe), blocks_(std::move(blocks)) {
    for (const auto& b : blocks_) {
        if (b.universe() != universe_) throw PreconditionError("partition block universe does not match partition universe");
    }
}

Partition::Partition(std::size_t universe, const std::vector<std::vector<Vertex>>& blocks) : universe_(universe) {
    blocks_.reserve(blocks.size());
    for (const auto& b : blocks) blocks_.emplace_back(universe, b);
}

std::optional<PartitionDefect> Partition::defect() const {
    VertexSet seen(universe_);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].empty()) return PartitionDefect{i, "block is empty"};
        if (blocks_[i].intersects(seen)) return PartitionDefect{i, "block overlaps an earlier block"};
        seen |= blocks_[i];
    }
    if (!seen.is_full()) {
        const auto missing = seen.complement().members();
        return PartitionDefect{std::nullopt, "vertex " + std::to_string(missing.front() + 1) + " is not covered"};
    }
    return std::nullopt;
}

std::size_t Partition::block_of(Vertex v) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].contains(v)) return i;
    }
    return blocks_.size();
}

std::vector<std::vector<Vertex>> Partition::to_lists() const {
    std::vector<std::vector<Vertex>> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) out.push_back(b.members());
    return out;
}

Partition parse_partition(std::string_view text, std::size_t universe) {
    std::vector<VertexSet> blocks;
    VertexSet current(universe);
    bool saw_token = false;
    std::size_t i = 0;
    auto close_block = [&] {
        blocks.push_back(current);
        current = VertexSet(universe);
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '|') {
            close_block();
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc{}) throw ParseError("partition: vertex label out of range");
            i = static_cast<std::size_t>(ptr - text.data());
            if (value == 0 || value > universe) {
                throw ParseError("partition: vertex " + std::to_string(value) + " outside 1.." + std::to_string(universe));
            }
            if (current.contains(value - 1)) {
                throw ParseError("partition: vertex " + std::to_string(value) + " repeated within a block");
            }
            current.insert(value - 1);
            saw_token = true;
        } else {
            throw ParseError(std::string("partition: unexpected character '") + c + "'");
        }
    }
    if (!saw_token) throw ParseError("partition: no vertices given");
    close_block();
    return Partition(universe, std::move(blocks));
}

std::string format_partition(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.order(); ++i) {
        if (i > 0) out.push_back('|');
        bool first = true;
        p.block(i).for_each([&](Vertex v) {
            if (!first) out.push_back(' ');
            out += std::to_string(v + 1);
            first = false;
        });
    }
    return out;
}

}  // namespace coalition
