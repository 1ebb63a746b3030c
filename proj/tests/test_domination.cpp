#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coalition/domination.hpp"
#include "coalition/error.hpp"
#include "support.hpp"

using namespace coalition;
using namespace coalition::testing;

namespace {

VertexSet random_subset(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
        if (coin(rng)) s.insert(v);
    return s;
}

// Literal reading of the definition: every vertex outside S has a neighbor in S.
bool dominates_by_definition(const Graph& g, const VertexSet& s) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (s.contains(v)) continue;
        if (!g.adjacency(v).intersects(s)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("closed neighborhoods") {
    const NeighborhoodTable c4(cycle(4));
    CHECK(c4.closed(0) == VertexSet(4, {3, 0, 1}));
    const NeighborhoodTable k4(complete(4));
    CHECK(k4.closed(0) == VertexSet::full(4));
    const NeighborhoodTable k1(complete(1));
    CHECK(k1.closed(0) == VertexSet(1, {0}));

    const Graph p = petersen();
    const NeighborhoodTable t(p);
    for (Vertex v = 0; v < p.order(); ++v) {
        CHECK(t.closed(v).contains(v));
        CHECK(t.closed(v).size() == p.degree(v) + 1);
    }
}

TEST_CASE("dominated_by and is_dominating on small graphs") {
    const Graph c6 = cycle(6);
    const NeighborhoodTable t(c6);
    CHECK(t.dominated_by(VertexSet(6, {0})) == VertexSet(6, {5, 0, 1}));
    CHECK(t.dominated_by(VertexSet(6)).empty());
    CHECK(t.dominated_by(VertexSet::full(6)) == VertexSet::full(6));

    CHECK(NeighborhoodTable(complete(4)).is_dominating(VertexSet(4, {0})));
    CHECK(t.is_dominating(VertexSet(6, {0, 3})));
    CHECK_FALSE(t.is_dominating(VertexSet(6, {0})));
    CHECK_FALSE(t.is_dominating(VertexSet(6)));
    CHECK_FALSE(NeighborhoodTable(complete(1)).is_dominating(VertexSet(1)));

    CHECK_THROWS_AS(t.dominated_by(VertexSet(5, {0})), PreconditionError);
}

TEST_CASE("domination properties on random graphs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> order(1, 12);
    std::uniform_real_distribution<double> density(0.05, 0.8);
    for (int trial = 0; trial < 400; ++trial) {
        const Graph g = random_graph(rng, order(rng), density(rng), false);
        const NeighborhoodTable t(g);
        const std::size_t n = g.order();
        const VertexSet a = random_subset(rng, n, 0.3);
        const VertexSet b = random_subset(rng, n, 0.3);

        REQUIRE(t.is_dominating(a) == dominates_by_definition(g, a));
        REQUIRE(t.dominated_by(a | b) == (t.dominated_by(a) | t.dominated_by(b)));

        // monotone: extending a dominating set keeps it dominating
        if (t.is_dominating(a)) REQUIRE(t.is_dominating(a | b));
    }
}
