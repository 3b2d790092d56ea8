#include "ricci/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace ricci {

namespace {

constexpr int kUnreached = -1;

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw SupportOutOfRangeError("vertex id " + std::to_string(v) +
                                     " outside 0.." + std::to_string(n_ - 1));
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::distance(int x, int y) const {
    check_vertex(x);
    check_vertex(y);
    return dist_[static_cast<size_t>(x) * n_ + y];
}

bool Graph::is_edge(int x, int y) const {
    return x != y && distance(x, y) == 1;
}

int Graph::triangle_count(int x, int y) const {
    if (!is_edge(x, y)) {
        throw NotAnEdgeError("triangle_count: " + edge_str(x, y) + " is not an edge");
    }
    const auto& a = adj_[x];
    const auto& b = adj_[y];
    int count = 0;
    size_t i = 0, j = 0;  // both sorted
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++count;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

Graph build_graph(std::span<const Edge> edge_list) {
    if (edge_list.empty()) {
        throw DisconnectedGraphError("empty edge list");
    }
    int max_id = 0;
    std::set<Edge> seen;
    for (const auto& [a, b] : edge_list) {
        if (a < 0 || b < 0) {
            throw SupportOutOfRangeError("negative vertex id in edge " + edge_str(a, b));
        }
        if (a == b) {
            throw SelfLoopError("self-loop at vertex " + std::to_string(a));
        }
        Edge e{std::min(a, b), std::max(a, b)};
        if (!seen.insert(e).second) {
            throw DuplicateEdgeError("duplicate edge " + edge_str(e.first, e.second));
        }
        max_id = std::max(max_id, e.second);
    }

    Graph g;
    g.n_ = max_id + 1;
    g.adj_.assign(g.n_, {});
    g.edges_.assign(seen.begin(), seen.end());
    for (const auto& [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
    }

    // All-pairs BFS; any unreached vertex means the input (including ids
    // that appear in no edge) is not one connected graph.
    g.dist_.assign(static_cast<size_t>(g.n_) * g.n_, kUnreached);
    for (int s = 0; s < g.n_; ++s) {
        int* row = g.dist_.data() + static_cast<size_t>(s) * g.n_;
        row[s] = 0;
        std::queue<int> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (int v : g.adj_[u]) {
                if (row[v] == kUnreached) {
                    row[v] = row[u] + 1;
                    frontier.push(v);
                }
            }
        }
        for (int v = 0; v < g.n_; ++v) {
            if (row[v] == kUnreached) {
                throw DisconnectedGraphError("vertex " + std::to_string(v) +
                                             " unreachable from vertex " + std::to_string(s));
            }
            g.diameter_ = std::max(g.diameter_, row[v]);
        }
    }
    return g;
}

VertexMeasure VertexMeasure::from_atoms(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.vertex < b.vertex; });
    Rational total = 0;
    int prev = -1;
    for (const auto& [vertex, mass] : atoms) {
        if (vertex == prev) {
            throw MeasureNotNormalizedError("repeated vertex " + std::to_string(vertex) +
                                            " in measure support");
        }
        if (vertex < 0) {
            throw SupportOutOfRangeError("negative vertex id in measure support");
        }
        if (mass <= 0) {
            throw MeasureNotNormalizedError("nonpositive mass at vertex " +
                                            std::to_string(vertex));
        }
        total += mass;
        prev = vertex;
    }
    if (total != 1) {
        throw MeasureNotNormalizedError("masses sum to " + to_string(total) + ", not 1");
    }
    VertexMeasure m;
    m.atoms_ = std::move(atoms);
    return m;
}

VertexMeasure VertexMeasure::point_mass(int vertex) {
    return from_atoms({{vertex, Rational(1)}});
}

Rational VertexMeasure::mass(int vertex) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), vertex,
                               [](const Atom& a, int v) { return a.vertex < v; });
    if (it != atoms_.end() && it->vertex == vertex) {
        return it->mass;
    }
    return 0;
}

VertexMeasure random_walk_measure(const Graph& g, int x) {
    const auto& nbrs = g.neighbors(x);
    std::vector<VertexMeasure::Atom> atoms;
    atoms.reserve(nbrs.size());
    Rational share(1, static_cast<int>(nbrs.size()));
    for (int v : nbrs) {
        atoms.push_back({v, share});
    }
    return VertexMeasure::from_atoms(std::move(atoms));
}

}  // namespace ricci
