#include "coalition/coalition.hpp"

#include "coalition/error.hpp"

namespace coalition {

bool is_coalition(const NeighborhoodTable& table, const VertexSet& a, const VertexSet& b) {
    if (a.empty() || b.empty()) throw PreconditionError("coalition sets must be nonempty");
    if (a.intersects(b)) throw PreconditionError("coalition sets must be disjoint");
    return !table.is_dominating(a) && !table.is_dominating(b) && table.is_dominating(a | b);
}

std::string to_string(RejectReason reason) {
    switch (reason) {
        case RejectReason::NotAPartition:
            return "NotAPartition";
        case RejectReason::DominatingBlockNotSingleton:
            return "DominatingBlockNotSingleton";
        case RejectReason::NonDominatingBlockWithoutPartner:
            return "NonDominatingBlockWithoutPartner";
    }
    return "Unknown";
}

Verification verify_partition(const Graph& g, const Partition& p) { return verify_partition(g, NeighborhoodTable(g), p); }

Verification verify_partition(const Graph& g, const NeighborhoodTable& table, const Partition& p) {
    const std::size_t n = g.order();
    if (p.universe() != n) {
        return {std::nullopt, Rejection{RejectReason::NotAPartition, std::nullopt,
                                        "partition universe " + std::to_string(p.universe()) + " differs from graph order " +
                                            std::to_string(n)}};
    }
    if (auto d = p.defect()) return {std::nullopt, Rejection{RejectReason::NotAPartition, d->block, d->reason}};

    const std::size_t k = p.order();
    std::vector<VertexSet> covered;
    std::vector<bool> dominating;
    covered.reserve(k);
    dominating.reserve(k);
    for (const auto& b : p.blocks()) {
        covered.push_back(table.dominated_by(b));
        dominating.push_back(covered.back().is_full());
    }

    CoalitionCertificate cert;
    cert.proofs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto& block = p.block(i);
        if (dominating[i]) {
            const Vertex v = block.members().front();
            if (block.size() != 1 || g.degree(v) != n - 1) {
                return {std::nullopt, Rejection{RejectReason::DominatingBlockNotSingleton, i,
                                                "block " + std::to_string(i + 1) + " dominates but is not a single full-degree vertex"}};
            }
            cert.proofs.emplace_back(DominatingSingleton{v});
            continue;
        }
        std::optional<std::size_t> partner;
        for (std::size_t j = 0; j < k && !partner; ++j) {
            if (j != i && !dominating[j] && (covered[i] | covered[j]).is_full()) partner = j;
        }
        if (!partner) {
            return {std::nullopt, Rejection{RejectReason::NonDominatingBlockWithoutPartner, i,
                                            "block " + std::to_string(i + 1) + " has no coalition partner"}};
        }
        cert.proofs.emplace_back(Partner{*partner});
    }
    return {std::move(cert), std::nullopt};
}

std::size_t upper_bound(const Graph& g) {
    const std::size_t d = g.max_degree() + 3;
    return d * d / 4;
}

std::string describe(const Partition& p, const CoalitionCertificate& cert) {
    std::string out;
    for (std::size_t i = 0; i < cert.proofs.size(); ++i) {
        Partition single(p.universe(), std::vector<VertexSet>{p.block(i)});
        out += "block " + std::to_string(i + 1) + " {" + format_partition(single) + "}: ";
        if (const auto* s = std::get_if<DominatingSingleton>(&cert.proofs[i])) {
            out += "dominating singleton (vertex " + std::to_string(s->vertex + 1) + " has full degree)";
        } else {
            const auto& partner = std::get<Partner>(cert.proofs[i]);
            Partition other(p.universe(), std::vector<VertexSet>{p.block(partner.block)});
            out += "coalition with block " + std::to_string(partner.block + 1) + " {" + format_partition(other) + "}";
        }
        out += '\n';
    }
    return out;
}

}  // namespace coalition
