#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "coalition/detail/bits.hpp"

namespace coalition {

using Vertex = std::size_t;

inline constexpr std::size_t kMaxVertices = 256;

using Mask = detail::Bits<kMaxVertices / 64>;

// Subset of {0, ..., universe-1}. Bits at positions >= universe are always clear.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, const std::vector<Vertex>& members);

    static VertexSet full(std::size_t universe);
    static VertexSet from_mask(std::size_t universe, const Mask& mask);

    std::size_t universe() const { return universe_; }
    const Mask& mask() const { return bits_; }

    bool contains(Vertex v) const { return v < universe_ && bits_.test(v); }
    void insert(Vertex v);
    void erase(Vertex v);

    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool is_full() const { return bits_ == Mask::prefix(universe_); }

    bool intersects(const VertexSet& o) const { return bits_.intersects(o.bits_); }
    bool subset_of(const VertexSet& o) const { return bits_.subset_of(o.bits_); }

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    VertexSet complement() const;

    std::vector<Vertex> members() const;

    template <class Fn>
    void for_each(Fn&& fn) const {
        bits_.for_each(std::forward<Fn>(fn));
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    Mask bits_{};
};

}  // namespace coalition
