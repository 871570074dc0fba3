#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lightsout/graph.hpp"

namespace lightsout::testsupport {

// Seeded stream of random graphs with mixed sizes and densities.
inline std::vector<Graph> random_corpus(std::size_t count, std::size_t max_n,
                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size_dist(1, max_n);
    std::uniform_real_distribution<double> p_dist(0.1, 0.9);
    std::vector<Graph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_graph(size_dist(rng), p_dist(rng), rng()));
    return out;
}

// Every graph on n vertices as an edge-subset sweep; n must stay tiny.
inline std::vector<Graph> all_graphs(std::size_t n) {
    std::vector<Edge> all_edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) all_edges.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all_edges.size()); ++mask) {
        std::vector<Edge> es;
        for (std::size_t k = 0; k < all_edges.size(); ++k)
            if ((mask >> k) & 1u) es.push_back(all_edges[k]);
        out.emplace_back(n, std::move(es));
    }
    return out;
}

// All labeled trees on n vertices, filtered from the edge-subset sweep.
// Deliberately independent of the Prufer decoder.
inline std::vector<Graph> all_trees(std::size_t n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n))
        if (is_tree(g)) out.push_back(g);
    return out;
}

} // namespace lightsout::testsupport
