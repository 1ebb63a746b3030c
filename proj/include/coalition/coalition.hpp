#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coalition/domination.hpp"
#include "coalition/graph.hpp"
#include "coalition/partition.hpp"

namespace coalition {

// True iff neither a nor b dominates but a | b does. Throws PreconditionError
// when a or b is empty or they overlap.
bool is_coalition(const NeighborhoodTable& table, const VertexSet& a, const VertexSet& b);

// Block {vertex} is dominating because vertex has degree n-1.
struct DominatingSingleton {
    Vertex vertex;
    friend bool operator==(const DominatingSingleton&, const DominatingSingleton&) = default;
};

// Block forms a coalition with block `block`.
struct Partner {
    std::size_t block;
    friend bool operator==(const Partner&, const Partner&) = default;
};

using BlockProof = std::variant<DominatingSingleton, Partner>;

struct CoalitionCertificate {
    std::vector<BlockProof> proofs;  // one per block, same order as the partition

    std::size_t order() const { return proofs.size(); }
    friend bool operator==(const CoalitionCertificate&, const CoalitionCertificate&) = default;
};

enum class RejectReason { NotAPartition, DominatingBlockNotSingleton, NonDominatingBlockWithoutPartner };

std::string to_string(RejectReason reason);

struct Rejection {
    RejectReason reason;
    std::optional<std::size_t> block;
    std::string detail;
};

struct Verification {
    std::optional<CoalitionCertificate> certificate;
    std::optional<Rejection> rejection;

    bool ok() const { return certificate.has_value(); }
    explicit operator bool() const { return ok(); }
};

// Checks that p is a coalition partition of g. Blocks are examined in order;
// the first offending block determines the rejection. Partner proofs name the
// lowest-index valid partner.
Verification verify_partition(const Graph& g, const Partition& p);
Verification verify_partition(const Graph& g, const NeighborhoodTable& table, const Partition& p);

// floor((max_degree + 3)^2 / 4)
std::size_t upper_bound(const Graph& g);

std::string describe(const Partition& p, const CoalitionCertificate& cert);

}  // namespace coalition
