#pragma once

// Shared graph builders for the test suites.

#include "ricci/graph.hpp"

#include <random>
#include <vector>

namespace corpus {

inline ricci::Graph complete(int n) {
    std::vector<ricci::Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return ricci::build_graph(edges);
}

inline ricci::Graph path(int n) {
    std::vector<ricci::Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return ricci::build_graph(edges);
}

inline ricci::Graph cycle(int n) {
    std::vector<ricci::Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return ricci::build_graph(edges);
}

/// Star with the center labeled 0.
inline ricci::Graph star(int leaves) {
    std::vector<ricci::Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return ricci::build_graph(edges);
}

inline ricci::Graph petersen() {
    std::vector<ricci::Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);        // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);              // spokes
    }
    return ricci::build_graph(edges);
}

inline ricci::Graph cube() {
    std::vector<ricci::Edge> edges;
    for (int a = 0; a < 8; ++a) {
        for (int bit = 0; bit < 3; ++bit) {
            int b = a ^ (1 << bit);
            if (a < b) edges.emplace_back(a, b);
        }
    }
    return ricci::build_graph(edges);
}

inline ricci::Graph k33() {
    std::vector<ricci::Edge> edges;
    for (int i = 0; i < 3; ++i) {
        for (int j = 3; j < 6; ++j) edges.emplace_back(i, j);
    }
    return ricci::build_graph(edges);
}

/// Random tree plus extra edges; connected by construction and fully
/// determined by the seed.
inline ricci::Graph random_connected(int n, int extra_percent, uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<ricci::Edge> edges;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        edges.emplace_back(pick(rng), i);
    }
    std::uniform_int_distribution<int> percent(0, 99);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool tree_edge = false;
            for (const auto& [a, b] : edges) {
                if (a == i && b == j) {
                    tree_edge = true;
                    break;
                }
            }
            if (!tree_edge && percent(rng) < extra_percent) edges.emplace_back(i, j);
        }
    }
    return ricci::build_graph(edges);
}

}  // namespace corpus
