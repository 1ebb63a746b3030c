#pragma once

#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "coalition/graph.hpp"
#include "coalition/scan.hpp"

namespace coalition::testing {

inline Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, edges);
}

inline Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, edges);
}

// G(n, p) with a fixed generator; optionally patched to be connected by
// joining each vertex to a random earlier one when needed.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p, bool connected) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) {
                edges.emplace_back(u, v);
                has[u][v] = has[v][u] = true;
            }
    if (connected) {
        // union-find over the sampled edges
        std::vector<Vertex> parent(n);
        for (Vertex v = 0; v < n; ++v) parent[v] = v;
        auto find = [&](Vertex v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (auto [u, v] : edges) parent[find(u)] = find(v);
        for (Vertex v = 1; v < n; ++v) {
            if (find(v) == find(0)) continue;
            std::uniform_int_distribution<Vertex> pick(0, v - 1);
            Vertex u = pick(rng);
            while (find(u) == find(v)) u = pick(rng);
            edges.emplace_back(u, v);
            parent[find(u)] = find(v);
        }
    }
    return Graph::from_edges(n, edges);
}

inline std::string data_path(const std::string& rel) { return std::string(COALITION_DATA_DIR) + "/" + rel; }

inline std::vector<std::string> catalog_lines(const std::string& name) {
    std::ifstream in(data_path("catalogs/" + name));
    if (!in) throw std::runtime_error("missing catalog " + name);
    return read_catalog(in);
}

inline std::vector<Graph> catalog(const std::string& name) {
    std::vector<Graph> out;
    for (const auto& line : catalog_lines(name)) out.push_back(parse_graph6(line));
    return out;
}

}  // namespace coalition::testing
