#include "ricci/curvature.hpp"

#include "ricci/transport.hpp"

#include <string>

namespace ricci {

namespace {

Rational positive_part(Rational s) {
    return s > 0 ? s : Rational(0);
}

void require_edge(const Graph& g, int x, int y, const char* op) {
    if (!g.is_edge(x, y)) {
        throw NotAnEdgeError(std::string(op) + ": (" + std::to_string(x) + ", " +
                             std::to_string(y) + ") is not an edge");
    }
}

}  // namespace

CurvatureReport ricci_curvature(const Graph& g, int x, int y) {
    if (x == y) {
        throw SameVertexError("ricci_curvature requires two distinct vertices, got " +
                              std::to_string(x) + " twice");
    }
    CurvatureReport r;
    r.x = x;
    r.y = y;
    r.distance = g.distance(x, y);
    r.wasserstein =
        wasserstein(g, random_walk_measure(g, x), random_walk_measure(g, y)).distance;
    r.kappa = 1 - r.wasserstein / r.distance;
    if (r.distance == 1) {
        r.jl_lower = jost_liu_lower(g, x, y);
        r.jl_upper = jost_liu_upper(g, x, y);
    }
    return r;
}

Rational jost_liu_lower(const Graph& g, int x, int y) {
    require_edge(g, x, y, "jost_liu_lower");
    Rational dx(g.degree(x)), dy(g.degree(y));
    Rational tri(g.triangle_count(x, y));
    Rational dmin = dx < dy ? dx : dy;
    Rational dmax = dx < dy ? dy : dx;
    return -positive_part(1 - 1 / dx - 1 / dy - tri / dmin) -
           positive_part(1 - 1 / dx - 1 / dy - tri / dmax) + tri / dmax;
}

Rational jost_liu_upper(const Graph& g, int x, int y) {
    require_edge(g, x, y, "jost_liu_upper");
    int dmax = std::max(g.degree(x), g.degree(y));
    return Rational(g.triangle_count(x, y), dmax);
}

EdgeCurvature min_edge_curvature(const Graph& g) {
    EdgeCurvature best;
    bool first = true;
    for (const auto& [u, v] : g.edges()) {  // lexicographic order
        Rational k = ricci_curvature(g, u, v).kappa;
        if (first || k < best.kappa) {
            best = {k, {u, v}};
            first = false;
        }
    }
    return best;
}

}  // namespace ricci
