#include "coalition/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "coalition/detail/bits.hpp"
#include "coalition/error.hpp"

namespace coalition {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kPollMask = (std::uint64_t{1} << 14) - 1;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Search for a k-block coalition partition with masks of W words. Vertices are
// relabeled by their position in the search order; "position p" below means
// the state in which positions 0..p-1 are assigned.
template <std::size_t W>
class OrderSearch {
    using Set = detail::Bits<W>;

public:
    OrderSearch(const Graph& g, std::size_t k, const Budget& budget, Clock::time_point start)
        : n_(g.order()), k_(k), budget_(budget), start_(start), order_(search_order(g)) {
        std::vector<std::size_t> position(n_);
        for (std::size_t p = 0; p < n_; ++p) position[order_[p]] = p;

        closed_.resize(n_);
        forced_.assign(n_, false);
        for (std::size_t p = 0; p < n_; ++p) {
            const Vertex v = order_[p];
            closed_[p].set(p);
            g.adjacency(v).for_each([&](Vertex u) { closed_[p].set(position[u]); });
            if (g.degree(v) == n_ - 1) {
                forced_[p] = true;
                ++forced_count_;
            }
        }
        full_ = Set::prefix(n_);

        finalized_.resize(n_ + 1);
        pool_.resize(n_ + 1);
        max_closed_.assign(n_ + 1, 0);
        Set reach;
        for (std::size_t p = n_ + 1; p-- > 0;) {
            finalized_[p] = minus(full_, reach);
            if (p == 0) break;
            const std::size_t q = p - 1;
            reach |= closed_[q];
            pool_[q] = pool_[p];
            max_closed_[q] = max_closed_[p];
            if (!forced_[q]) {
                pool_[q].set(q);
                max_closed_[q] = std::max(max_closed_[q], closed_[q].count());
            }
        }

        members_.resize(k_);
        covered_.resize(k_);
        admissible_.resize((n_ + 1) * k_);
        assignment_.assign(n_, 0);
        own_.assign(k_, 0);
        via_partner_.assign(k_ * k_, 0);
        via_both_.assign(k_ * k_, 0);
        need_.reserve(k_);
    }

    SearchResult run() {
        SearchResult result;
        if (forced_count_ > k_) {
            result.outcome = SearchOutcome::None;
        } else if (dfs(0)) {
            result.outcome = SearchOutcome::Found;
            result.witness = witness();
        } else {
            result.outcome = exhausted_ ? SearchOutcome::BudgetExhausted : SearchOutcome::None;
        }
        result.stats.nodes = nodes_;
        return result;
    }

private:
    bool out_of_budget() {
        if (budget_.max_nodes && nodes_ >= *budget_.max_nodes) return true;
        if (budget_.max_time && Clock::now() - start_ >= *budget_.max_time) return true;
        return false;
    }

    bool dfs(std::size_t p) {
        ++nodes_;
        if ((nodes_ & kPollMask) == 0 && out_of_budget()) exhausted_ = true;
        if (exhausted_) return false;
        if (p == n_) return true;

        const std::size_t remaining = n_ - p - 1;
        if (forced_[p]) {
            if (open_ >= k_ || open_ + 1 + remaining < k_) return false;
            const std::size_t b = open_++;
            members_[b] = Set{};
            members_[b].set(p);
            covered_[b] = closed_[p];
            assignment_[p] = b;
            if (dfs(p + 1)) return true;
            --open_;
            return false;
        }

        const std::size_t limit = std::min(open_ + 1, k_);
        const Set* parent = &admissible_[p * k_];
        Set* child = &admissible_[(p + 1) * k_];
        for (std::size_t b = forced_count_; b < limit; ++b) {
            const bool fresh = (b == open_);
            if (fresh) {
                members_[b] = Set{};
                covered_[b] = Set{};
                ++open_;
            }
            const Set saved_members = members_[b];
            const Set saved_covered = covered_[b];
            members_[b].set(p);
            covered_[b] |= closed_[p];

            // A non-forced block that dominates can never be part of the answer.
            if (covered_[b] != full_ && open_ + remaining >= k_) {
                for (std::size_t i = forced_count_; i < open_; ++i) {
                    child[i] = parent[i];
                    child[i].reset(p);
                }
                child[b] = admissible(covered_[b], fresh ? pool_[p + 1] : child[b]);
                if (feasible(p + 1)) {
                    assignment_[p] = b;
                    if (dfs(p + 1)) return true;
                }
            }
            members_[b] = saved_members;
            covered_[b] = saved_covered;
            if (fresh) --open_;
            if (exhausted_) return false;
        }
        return false;
    }

    // Unassigned vertices that could join a block with the given coverage
    // without making it dominating.
    Set admissible(const Set& covered, const Set& candidates) const {
        Set out;
        candidates.for_each([&](std::size_t u) {
            if ((covered | closed_[u]) != full_) out.set(u);
        });
        return out;
    }

    // Can `missing` be dominated by at most t vertices drawn from `from`?
    // Exact for t <= 2, a containment relaxation above.
    bool coverable(const Set& missing, const Set& from, std::size_t t, std::size_t max_closed) const {
        if (missing.none()) return true;
        if (t == 0) return false;
        if (missing.count() > max_closed * t) return false;
        if (t == 1) return single_cover(missing, from);
        if (t == 2) {
            const Set first_options = from & closed_[missing.first()];
            return !first_options.every([&](std::size_t u) {
                const Set rest = minus(missing, closed_[u]);
                return !(rest.none() || single_cover(rest, from));
            });
        }
        Set reach;
        from.for_each([&](std::size_t u) { reach |= closed_[u]; });
        return missing.subset_of(reach);
    }

    // Closed neighborhoods are symmetric: u covers all of `missing` iff u lies
    // in N[w] for every w in `missing`.
    bool single_cover(const Set& missing, const Set& from) const {
        Set candidates = from;
        missing.every([&](std::size_t w) {
            candidates &= closed_[w];
            return candidates.any();
        });
        return candidates.any();
    }

    // Necessary condition for completing the current state: every non-forced
    // block, including the blocks still to be opened, must be able to acquire
    // a coalition partner using the unassigned vertices.
    bool feasible(std::size_t p) const {
        const std::size_t remaining = n_ - p;
        const std::size_t future = k_ - open_;
        if (remaining < future) return false;
        const std::size_t spare = remaining - future;
        if (spare >= 3) return finalized_check(finalized_[p], future > 0);
        return spare_check(p, spare, future);
    }

    // Vertices in `fin` have no unassigned neighbor, so they are dominated in
    // the end exactly by the blocks that dominate them now.
    bool finalized_check(const Set& fin, bool future) const {
        if (fin.none()) return true;
        bool future_partner = false;
        for (std::size_t i = forced_count_; i < open_; ++i) {
            const Set missing = minus(fin, covered_[i]);
            if (missing.none()) {
                future_partner = true;
                if (future) continue;
            }
            bool ok = false;
            for (std::size_t j = forced_count_; j < open_ && !ok; ++j) {
                ok = (j != i) && missing.subset_of(covered_[j]);
            }
            if (!ok) return false;
        }
        return !future || future_partner;
    }

    // With at most `spare` (<= 2) unassigned vertices left over for already
    // open blocks, reason about which open blocks can still grow.
    bool spare_check(std::size_t p, std::size_t spare, std::size_t future) const {
        const Set& fin = finalized_[p];
        const Set& pool = pool_[p];
        const std::size_t max_closed = max_closed_[p];
        const Set* adm = &admissible_[p * k_];
        need_.clear();
        for (std::size_t i = forced_count_; i < open_; ++i) {
            bool satisfied = false;
            own_[i] = 0;
            for (std::size_t j = forced_count_; j < open_; ++j) {
                via_partner_[i * k_ + j] = 0;
                via_both_[i * k_ + j] = 0;
            }
            for (std::size_t j = forced_count_; j < open_ && !satisfied; ++j) {
                if (j == i) continue;
                const Set missing = minus(full_, covered_[i] | covered_[j]);
                if (missing.none()) {
                    satisfied = true;
                    break;
                }
                if (spare == 0 || missing.intersects(fin)) continue;
                if (!own_[i] && coverable(missing, adm[i], spare, max_closed)) own_[i] = 1;
                if (coverable(missing, adm[j], spare, max_closed)) via_partner_[i * k_ + j] = 1;
                if (spare == 2 && coverable(missing, adm[i] | adm[j], 2, max_closed)) via_both_[i * k_ + j] = 1;
            }
            if (satisfied) continue;
            if (future > 0) {
                const Set missing = minus(full_, covered_[i]);
                if (!missing.intersects(fin) && coverable(missing, pool, spare + 1, max_closed)) continue;
            }
            bool any = own_[i] != 0;
            for (std::size_t j = forced_count_; j < open_ && !any; ++j) {
                any = via_partner_[i * k_ + j] || via_both_[i * k_ + j];
            }
            if (!any) return false;
            need_.push_back(i);
        }

        if (future > 0) {
            bool ok = future >= 2 && coverable(full_, pool, spare + 2, max_closed);
            for (std::size_t j = forced_count_; j < open_ && !ok; ++j) {
                const Set missing = minus(full_, covered_[j]);
                ok = !missing.intersects(fin) && coverable(missing, pool, spare + 1, max_closed);
            }
            if (!ok) return false;
        }
        if (need_.empty()) return true;
        if (spare == 0) return false;

        // Some set G of at most `spare` open blocks receives the leftover
        // vertices; every needy block must be served through G.
        constexpr std::size_t kNone = static_cast<std::size_t>(-1);
        auto served = [&](std::size_t a, std::size_t b) {
            for (std::size_t i : need_) {
                const bool in = (i == a || i == b);
                if (in && own_[i]) continue;
                if (via_partner_[i * k_ + a] || (b != kNone && via_partner_[i * k_ + b])) continue;
                if (in && b != kNone && via_both_[i * k_ + (i == a ? b : a)]) continue;
                return false;
            }
            return true;
        };
        for (std::size_t a = forced_count_; a < open_; ++a) {
            if (served(a, kNone)) return true;
            if (spare == 2) {
                for (std::size_t b = a + 1; b < open_; ++b) {
                    if (served(a, b)) return true;
                }
            }
        }
        return false;
    }

    Partition witness() const {
        std::vector<std::vector<Vertex>> blocks(open_);
        for (std::size_t p = 0; p < n_; ++p) blocks[assignment_[p]].push_back(order_[p]);
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        std::sort(blocks.begin(), blocks.end());
        return Partition(n_, blocks);
    }

    std::size_t n_;
    std::size_t k_;
    Budget budget_;
    Clock::time_point start_;
    std::vector<Vertex> order_;
    std::vector<Set> closed_;
    std::vector<bool> forced_;
    std::size_t forced_count_ = 0;
    Set full_;
    std::vector<Set> finalized_;  // per position: vertices with no unassigned closed neighbor
    std::vector<Set> pool_;       // per position: unassigned non-forced vertices
    std::vector<std::size_t> max_closed_;

    std::vector<Set> members_;
    std::vector<Set> covered_;
    std::vector<Set> admissible_;  // (n+1) x k, row p valid for state p
    std::vector<std::size_t> assignment_;
    std::size_t open_ = 0;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;

    mutable std::vector<std::uint8_t> own_;
    mutable std::vector<std::uint8_t> via_partner_;
    mutable std::vector<std::uint8_t> via_both_;
    mutable std::vector<std::size_t> need_;
};

template <std::size_t W>
SearchResult run_search(const Graph& g, std::size_t k, const Budget& budget, Clock::time_point start) {
    return OrderSearch<W>(g, k, budget, start).run();
}

void brute_force_blocks(const Graph& g, const NeighborhoodTable& table, Vertex v, std::vector<VertexSet>& blocks,
                        std::size_t& best) {
    const std::size_t n = g.order();
    if (v == n) {
        if (blocks.size() > best && verify_partition(g, table, Partition(n, blocks)).ok()) best = blocks.size();
        return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b].insert(v);
        brute_force_blocks(g, table, v + 1, blocks, best);
        blocks[b].erase(v);
    }
    blocks.emplace_back(n, std::initializer_list<Vertex>{v});
    brute_force_blocks(g, table, v + 1, blocks, best);
    blocks.pop_back();
}

}  // namespace

std::vector<Vertex> search_order(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<VertexSet> closed;
    closed.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        VertexSet c = g.adjacency(v);
        c.insert(v);
        closed.push_back(c);
    }
    std::vector<Vertex> order;
    order.reserve(n);
    VertexSet placed(n);
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) {
            order.push_back(v);
            placed.insert(v);
        }
    }
    while (order.size() < n) {
        Vertex best = n;
        std::size_t best_done = 0;
        std::size_t best_touch = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (placed.contains(v)) continue;
            std::size_t done = 0;
            closed[v].for_each([&](Vertex w) {
                VertexSet rest = closed[w];
                rest &= placed.complement();
                if (rest.size() == 1) ++done;
            });
            const std::size_t touch = (g.adjacency(v) & placed).size();
            if (best == n || done > best_done || (done == best_done && touch > best_touch)) {
                best = v;
                best_done = done;
                best_touch = touch;
            }
        }
        order.push_back(best);
        placed.insert(best);
    }
    return order;
}

SearchResult exists_partition_of_order(const Graph& g, std::size_t k, const Budget& budget) {
    if (k < 1 || k > g.order()) {
        throw PreconditionError("partition order " + std::to_string(k) + " outside 1.." + std::to_string(g.order()));
    }
    const auto start = Clock::now();
    SearchResult result;
    const std::size_t words = (g.order() + 63) / 64;
    switch (words) {
        case 1:
            result = run_search<1>(g, k, budget, start);
            break;
        case 2:
            result = run_search<2>(g, k, budget, start);
            break;
        case 3:
            result = run_search<3>(g, k, budget, start);
            break;
        default:
            result = run_search<4>(g, k, budget, start);
            break;
    }
    if (result.witness) {
        const auto check = verify_partition(g, *result.witness);
        if (!check.ok() || result.witness->order() != k) {
            throw std::logic_error("solver produced a witness that does not verify: " + format_partition(*result.witness));
        }
    }
    result.stats.elapsed_ms = millis_since(start);
    return result;
}

SolveResult coalition_number(const Graph& g, const Budget& budget) {
    const auto start = Clock::now();
    SolveResult out;
    bool inconclusive = false;
    const std::size_t top = std::min(upper_bound(g), g.order());
    for (std::size_t k = top; k >= 1; --k) {
        SearchResult r = exists_partition_of_order(g, k, budget);
        out.stats.nodes += r.stats.nodes;
        if (r.outcome == SearchOutcome::Found) {
            const auto check = verify_partition(g, *r.witness);
            out.lower_bound = k;
            out.witness = std::move(r.witness);
            out.certificate = check.certificate;
            if (inconclusive) {
                out.status = SolveStatus::BudgetExhausted;
            } else {
                out.status = SolveStatus::Exact;
                out.value = k;
            }
            break;
        }
        if (r.outcome == SearchOutcome::None) {
            out.smallest_refuted = k;
        } else {
            inconclusive = true;
        }
    }
    if (!out.witness) out.status = inconclusive ? SolveStatus::BudgetExhausted : SolveStatus::NoPartition;
    out.stats.elapsed_ms = millis_since(start);
    return out;
}

std::size_t brute_force_coalition_number(const Graph& g) {
    if (g.order() > kBruteForceMaxOrder) {
        throw PreconditionError("brute force is limited to " + std::to_string(kBruteForceMaxOrder) + " vertices");
    }
    const NeighborhoodTable table(g);
    std::vector<VertexSet> blocks;
    std::size_t best = 0;
    brute_force_blocks(g, table, 0, blocks, best);
    return best;
}

std::string to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Exact:
            return "exact";
        case SolveStatus::BudgetExhausted:
            return "budget";
        case SolveStatus::NoPartition:
            return "none";
    }
    return "unknown";
}

}  // namespace coalition
