#pragma once

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

#include <vector>

namespace ricci {

/// A coupling between two vertex measures together with its exact cost
/// under the hop metric.
struct TransportPlan {
    struct Entry {
        int source;
        int target;
        Rational mass;  // > 0
    };
    std::vector<Entry> entries;  // sorted by (source, target)
    Rational cost;
};

struct WassersteinResult {
    Rational distance;
    TransportPlan plan;
};

/// Exact 1-Wasserstein distance between mu and nu over g's hop metric,
/// together with an optimal coupling. Both measures are scaled by the
/// least common multiple of their mass denominators to an integer
/// transportation problem, which is solved by successive-shortest-path
/// min-cost flow on the bipartite support graph.
WassersteinResult wasserstein(const Graph& g, const VertexMeasure& mu,
                              const VertexMeasure& nu);

/// Independent oracle for wasserstein(): the full coupling polytope as an
/// equality-form linear program, solved by exact rational-pivot simplex.
/// Requires |supp(mu) ∪ supp(nu)| <= 12 (OracleTooLargeError otherwise).
Rational wasserstein_bruteforce(const Graph& g, const VertexMeasure& mu,
                                const VertexMeasure& nu);

/// Integer-valued potential on all vertices, a candidate Kantorovich
/// dual witness. Distances are integers, so an integral optimal dual
/// always exists for these transportation programs.
struct LipschitzWitness {
    std::vector<int> values;  // indexed by vertex id, size = vertex_count
};

struct DualCertificate {
    Rational attained;  // sum_u f(u) (mu(u) - nu(u))
    bool within;        // attained <= w
    bool optimal;       // attained == w: primal cost and dual value meet
};

/// Verifies f is 1-Lipschitz for g's metric (NotLipschitzError with a
/// violating pair otherwise) and evaluates it against the candidate
/// transport value w.
DualCertificate check_dual_witness(const Graph& g, const VertexMeasure& mu,
                                   const VertexMeasure& nu,
                                   const LipschitzWitness& f, const Rational& w);

namespace detail {

/// Flow value at an explicit integer scale, exposed so tests can confirm
/// the result is invariant under the choice of common-denominator
/// multiple. `scale` must be a positive multiple of every mass
/// denominator in mu and nu.
Rational wasserstein_with_scale(const Graph& g, const VertexMeasure& mu,
                                const VertexMeasure& nu, const Int& scale);

/// lcm of all mass denominators of both measures.
Int common_denominator(const VertexMeasure& mu, const VertexMeasure& nu);

}  // namespace detail

}  // namespace ricci
