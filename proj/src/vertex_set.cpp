#include "coalition/vertex_set.hpp"

#include <string>

#include "coalition/error.hpp"

namespace coalition {

namespace {

void check_universe(std::size_t universe) {
    if (universe > kMaxVertices) {
        throw PreconditionError("vertex set universe " + std::to_string(universe) + " exceeds " +
                                std::to_string(kMaxVertices));
    }
}

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe) { check_universe(universe); }

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, const std::vector<Vertex>& members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    s.bits_ = Mask::prefix(universe);
    return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, const Mask& mask) {
    VertexSet s(universe);
    s.bits_ = mask & Mask::prefix(universe);
    return s;
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_) {
        throw PreconditionError("vertex " + std::to_string(v) + " outside universe of size " +
                                std::to_string(universe_));
    }
    bits_.set(v);
}

void VertexSet::erase(Vertex v) {
    if (v < universe_) bits_.reset(v);
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    bits_ |= o.bits_;
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    bits_ &= o.bits_;
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet s(universe_);
    s.bits_ = minus(Mask::prefix(universe_), bits_);
    return s;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    bits_.for_each([&](std::size_t v) { out.push_back(v); });
    return out;
}

}  // namespace coalition
