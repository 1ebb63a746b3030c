#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "coalition/coalition.hpp"
#include "coalition/graph.hpp"
#include "coalition/partition.hpp"

namespace coalition {

// Limits for a single order-k search. Both limits are polled every 2^14 nodes,
// so a search may overrun max_nodes by up to that many nodes.
struct Budget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::milliseconds> max_time;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

enum class SearchOutcome { Found, None, BudgetExhausted };

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::None;
    std::optional<Partition> witness;
    SearchStats stats;
};

// Decides whether g has a coalition partition with exactly k blocks.
//
// Depth-first restricted-growth enumeration: vertices are visited in
// search_order(g) and each may join an open block or open the next one.
// Vertices of degree n-1 come first and always form singleton blocks.
// Subtrees are cut when a block dominates, when too few vertices remain to
// open k blocks, or when some block provably cannot end up with a coalition
// partner given the vertices still unassigned. The witness is the first
// partition reached in this order, with blocks listed by smallest vertex.
SearchResult exists_partition_of_order(const Graph& g, std::size_t k, const Budget& budget = {});

enum class SolveStatus { Exact, BudgetExhausted, NoPartition };

struct SolveResult {
    SolveStatus status = SolveStatus::NoPartition;
    std::optional<std::size_t> value;             // C(G), set only when status == Exact
    std::size_t lower_bound = 0;                  // largest order with a verified witness (0 if none)
    std::optional<std::size_t> smallest_refuted;  // smallest order proven impossible
    std::optional<Partition> witness;
    std::optional<CoalitionCertificate> certificate;
    SearchStats stats;
};

// Coalition number by descending k from min(upper_bound(g), n). Every order is
// searched independently; a budget-exhausted order does not stop the descent,
// so the result still carries the best verified lower bound.
SolveResult coalition_number(const Graph& g, const Budget& budget = {});

// Testing oracle: maximum order over all set partitions of V that verify.
// Guarded to n <= 12.
std::size_t brute_force_coalition_number(const Graph& g);

inline constexpr std::size_t kBruteForceMaxOrder = 12;

// Vertex visiting order used by the search: full-degree vertices first, then
// greedily the vertex that completes the most closed neighborhoods.
std::vector<Vertex> search_order(const Graph& g);

std::string to_string(SolveStatus status);

}  // namespace coalition
