#pragma once

#include "ricci/errors.hpp"
#include "ricci/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace ricci {

using Edge = std::pair<int, int>;

/// Immutable undirected simple connected graph over vertex ids 0..n-1,
/// with the hop metric precomputed by breadth-first search from every
/// vertex. Safe for concurrent reads once constructed.
class Graph {
public:
    int vertex_count() const { return n_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Hop distance; 0 iff x == y, 1 iff (x, y) is an edge.
    int distance(int x, int y) const;
    int diameter() const { return diameter_; }
    bool is_edge(int x, int y) const;

    /// Number of triangles through the edge (x, y), i.e. the size of
    /// the common neighborhood of its endpoints.
    int triangle_count(int x, int y) const;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    const std::vector<Edge>& edges() const { return edges_; }

    friend Graph build_graph(std::span<const Edge> edge_list);

private:
    Graph() = default;
    void check_vertex(int v) const;

    int n_ = 0;
    int diameter_ = 0;
    std::vector<std::vector<int>> adj_;  // each list sorted ascending
    std::vector<Edge> edges_;
    std::vector<int> dist_;  // row-major n_ x n_
};

/// Builds a graph from an edge list referencing ids 0..max_id. Edges are
/// normalized to (min, max); rejects self-loops, duplicates, and inputs
/// whose union is not a connected graph on 0..max_id.
Graph build_graph(std::span<const Edge> edge_list);

/// Sparse probability measure on vertices: strictly positive exact
/// rational masses summing to exactly 1.
class VertexMeasure {
public:
    struct Atom {
        int vertex;
        Rational mass;
        bool operator==(const Atom&) const = default;
    };

    /// Validates and normalizes the representation (atoms sorted by
    /// vertex). Throws MeasureNotNormalizedError unless all masses are
    /// positive, vertices distinct, and the total is exactly 1.
    static VertexMeasure from_atoms(std::vector<Atom> atoms);
    static VertexMeasure point_mass(int vertex);

    /// Atoms sorted by vertex id.
    const std::vector<Atom>& support() const { return atoms_; }
    Rational mass(int vertex) const;  // 0 off the support
    bool operator==(const VertexMeasure& other) const = default;

private:
    VertexMeasure() = default;
    std::vector<Atom> atoms_;
};

/// The simple-random-walk step measure m_x: uniform mass 1/deg(x) on the
/// neighbors of x, zero elsewhere (including on x itself).
VertexMeasure random_walk_measure(const Graph& g, int x);

}  // namespace ricci
