#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "coalition/error.hpp"
#include "coalition/solver.hpp"
#include "support.hpp"

using namespace coalition;
using namespace coalition::testing;

namespace {

// Every order k for which some set partition of V verifies.
std::set<std::size_t> achievable_orders(const Graph& g) {
    const std::size_t n = g.order();
    const NeighborhoodTable table(g);
    std::set<std::size_t> orders;
    std::vector<std::size_t> rgs(n, 0);
    auto visit = [&](auto& self, std::size_t v, std::size_t used) -> void {
        if (v == n) {
            std::vector<std::vector<Vertex>> blocks(used);
            for (Vertex u = 0; u < n; ++u) blocks[rgs[u]].push_back(u);
            if (verify_partition(g, table, Partition(n, blocks)).ok()) orders.insert(used);
            return;
        }
        for (std::size_t b = 0; b <= used; ++b) {
            rgs[v] = b;
            self(self, v + 1, std::max(used, b + 1));
        }
    };
    visit(visit, 0, 0);
    return orders;
}

void check_witness(const Graph& g, const Partition& p, std::size_t k) {
    CHECK(p.order() == k);
    const auto v = verify_partition(g, p);
    REQUIRE(v.ok());
    // a full-degree vertex must sit alone in its block
    for (Vertex u = 0; u < g.order(); ++u)
        if (g.degree(u) == g.order() - 1) CHECK(p.block(p.block_of(u)).size() == 1);
    // partners form coalitions in both roles
    const NeighborhoodTable t(g);
    for (std::size_t i = 0; i < p.order(); ++i) {
        if (const auto* partner = std::get_if<Partner>(&v.certificate->proofs[i])) {
            CHECK(is_coalition(t, p.block(i), p.block(partner->block)));
            CHECK(is_coalition(t, p.block(partner->block), p.block(i)));
        }
    }
}

}  // namespace

TEST_CASE("exists_partition_of_order on small graphs") {
    auto r = exists_partition_of_order(complete(4), 4);
    REQUIRE(r.outcome == SearchOutcome::Found);
    CHECK(format_partition(*r.witness) == "1|2|3|4");

    CHECK(exists_partition_of_order(petersen(), 9).outcome == SearchOutcome::None);

    r = exists_partition_of_order(cycle(4), 4);
    REQUIRE(r.outcome == SearchOutcome::Found);
    CHECK(format_partition(*r.witness) == "1|2|3|4");

    CHECK_THROWS_AS(exists_partition_of_order(cycle(4), 0), PreconditionError);
    CHECK_THROWS_AS(exists_partition_of_order(cycle(4), 5), PreconditionError);
}

TEST_CASE("coalition_number of complete graphs") {
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto r = coalition_number(complete(n));
        REQUIRE(r.status == SolveStatus::Exact);
        CHECK(r.value == n);
        check_witness(complete(n), *r.witness, n);
    }
}

TEST_CASE("coalition_number of K3,3 and the Petersen graph") {
    const auto r = coalition_number(complete_bipartite(3, 3));
    REQUIRE(r.status == SolveStatus::Exact);
    CHECK(r.value == 6);

    const auto p = coalition_number(petersen());
    REQUIRE(p.status == SolveStatus::Exact);
    CHECK(*p.value >= 6);
    CHECK(*p.value <= 8);
    CHECK(p.smallest_refuted == *p.value + 1);
}

TEST_CASE("brute force oracle") {
    CHECK(brute_force_coalition_number(complete(4)) == 4);
    CHECK(brute_force_coalition_number(cycle(4)) == 4);
    CHECK(brute_force_coalition_number(complete(5)) == 5);
    CHECK(brute_force_coalition_number(complete_bipartite(3, 3)) == 6);
    CHECK_THROWS_AS(brute_force_coalition_number(cycle(13)), PreconditionError);
}

TEST_CASE("every order decision matches exhaustive enumeration") {
    std::vector<Graph> graphs = catalog("cubic_06.g6");
    for (const auto& g : catalog("cubic_08.g6")) graphs.push_back(g);
    graphs.push_back(petersen());
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> order(1, 9);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int i = 0; i < 60; ++i) graphs.push_back(random_graph(rng, order(rng), density(rng), i % 2 == 0));

    for (const auto& g : graphs) {
        if (g.order() > 9) continue;
        const auto orders = achievable_orders(g);
        for (std::size_t k = 1; k <= g.order(); ++k) {
            const auto r = exists_partition_of_order(g, k);
            REQUIRE(r.outcome != SearchOutcome::BudgetExhausted);
            INFO(encode_graph6(g), " k=", k);
            REQUIRE((r.outcome == SearchOutcome::Found) == (orders.count(k) == 1));
            if (r.witness) check_witness(g, *r.witness, k);
        }
    }
}

TEST_CASE("coalition_number matches the brute force oracle") {
    std::vector<Graph> graphs = catalog("cubic_06.g6");
    for (const auto& g : catalog("cubic_08.g6")) graphs.push_back(g);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> order(1, 8);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int i = 0; i < 200; ++i) graphs.push_back(random_graph(rng, order(rng), density(rng), true));

    for (const auto& g : graphs) {
        const auto r = coalition_number(g);
        const std::size_t oracle = brute_force_coalition_number(g);
        INFO(encode_graph6(g));
        if (oracle == 0) {
            CHECK(r.status == SolveStatus::NoPartition);
            continue;
        }
        REQUIRE(r.status == SolveStatus::Exact);
        REQUIRE(r.value == oracle);
        check_witness(g, *r.witness, oracle);
        CHECK(r.certificate->order() == oracle);
    }
}

TEST_CASE("coalition_number respects the degree bound") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> order(1, 12);
    std::uniform_real_distribution<double> density(0.05, 0.9);
    for (int i = 0; i < 150; ++i) {
        const Graph g = random_graph(rng, order(rng), density(rng), false);
        const auto r = coalition_number(g);
        REQUIRE(r.status != SolveStatus::BudgetExhausted);
        if (r.value) {
            CHECK(*r.value <= upper_bound(g));
            check_witness(g, *r.witness, *r.value);
        }
    }
    for (const auto& g : catalog("cubic_10.g6")) {
        const auto r = coalition_number(g);
        REQUIRE(r.status == SolveStatus::Exact);
        CHECK(*r.value <= 9);
    }
}

TEST_CASE("search is deterministic") {
    for (const auto& g : catalog("cubic_10.g6")) {
        const auto a = coalition_number(g);
        const auto b = coalition_number(g);
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
        CHECK(a.stats.nodes == b.stats.nodes);
    }
}

TEST_CASE("search order puts full-degree vertices first") {
    const Graph star = Graph::from_edges(5, {{3, 0}, {3, 1}, {3, 2}, {3, 4}, {0, 1}});
    const auto order = search_order(star);
    REQUIRE(order.size() == 5);
    CHECK(order.front() == 3);
    CHECK(std::set<Vertex>(order.begin(), order.end()).size() == 5);
}

TEST_CASE("budget exhaustion is reported, never treated as none") {
    const Graph g = catalog("cubic_16.g6").front();
    const auto full = exists_partition_of_order(g, 9);
    REQUIRE(full.outcome != SearchOutcome::BudgetExhausted);
    REQUIRE(full.stats.nodes > 4 * 16384);

    Budget tight;
    tight.max_nodes = 1;
    const auto cut = exists_partition_of_order(g, 9, tight);
    CHECK(cut.outcome == SearchOutcome::BudgetExhausted);
    CHECK_FALSE(cut.witness.has_value());

    const auto r = coalition_number(g, tight);
    CHECK(r.status == SolveStatus::BudgetExhausted);
    CHECK_FALSE(r.value.has_value());
    if (r.witness) check_witness(g, *r.witness, r.lower_bound);

    CHECK(to_string(SolveStatus::Exact) == "exact");
    CHECK(to_string(SolveStatus::BudgetExhausted) == "budget");
    CHECK(to_string(SolveStatus::NoPartition) == "none");
}
