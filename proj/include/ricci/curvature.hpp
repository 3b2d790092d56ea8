#pragma once

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

#include <optional>
#include <utility>

namespace ricci {

/// Exact coarse Ricci curvature of a vertex pair, with the Jost-Liu
/// estimates attached when the pair is an edge. The estimates apply only
/// to neighboring vertices, so they are absent at distance >= 2 rather
/// than silently extended.
struct CurvatureReport {
    int x = 0;
    int y = 0;
    int distance = 0;
    Rational wasserstein;
    Rational kappa;  // 1 - wasserstein / distance, exactly
    std::optional<Rational> jl_lower;
    std::optional<Rational> jl_upper;
};

/// kappa(x, y) = 1 - W(m_x, m_y) / d(x, y) for distinct vertices.
CurvatureReport ricci_curvature(const Graph& g, int x, int y);

/// Jost-Liu lower estimate for an edge, from degrees and the triangle
/// count of (x, y).
Rational jost_liu_lower(const Graph& g, int x, int y);

/// Jost-Liu upper estimate: #(x, y) / max(d_x, d_y).
Rational jost_liu_upper(const Graph& g, int x, int y);

struct EdgeCurvature {
    Rational kappa;
    Edge edge;
};

/// Minimum edge curvature with the lexicographically smallest attaining
/// edge; by the Lin-Lu-Yau reduction this bounds kappa over all pairs.
EdgeCurvature min_edge_curvature(const Graph& g);

}  // namespace ricci
