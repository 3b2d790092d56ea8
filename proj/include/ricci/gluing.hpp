#pragma once

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

#include <string>
#include <utility>

namespace ricci {

/// Parameters of the graph obtained by joining two complete graphs K_n
/// and K'_n with the bridge (u_0, v_0) plus m spokes from each hub to the
/// first m non-hub vertices of the opposite block.
///
/// Labeling convention: u_i -> i (0 <= i <= n-1), v_j -> n + j.
struct GluingSpec {
    int n = 0;
    int m = 0;

    int u(int i) const { return i; }
    int v(int j) const { return n + j; }

    /// "attached" = adjacent to the opposite hub; "free" = the rest of a
    /// block, hubs excluded.
    bool is_hub(int x) const { return x == 0 || x == n; }
    bool is_attached(int x) const { return (1 <= x && x <= m) || (n + 1 <= x && x <= n + m); }
    bool is_free(int x) const { return !is_hub(x) && !is_attached(x); }
    bool same_block(int x, int y) const { return (x < n) == (y < n); }
};

/// The seven edge orbits of the gluing graph under its symmetries
/// (including the K <-> K' mirror).
enum class EdgeClass {
    Bridge,          // (u_0, v_0)
    CrossSpoke,      // (u_0, v_i) or (v_0, u_j), 1 <= i, j <= m
    HubToAttached,   // (u_0, u_j), u_j adjacent to v_0 (and mirror)
    AttachedPair,    // two attached vertices of one block
    AttachedToFree,  // attached and free vertex of one block
    HubToFree,       // (u_0, u_k), u_k free (and mirror)
    FreePair,        // two free vertices of one block
};

const char* to_string(EdgeClass c);

/// Exact curvature value, or an exact interval for the one class whose
/// curvature is only bracketed in closed form.
struct KappaValue {
    Rational lower;
    Rational upper;
    bool exact() const { return lower == upper; }
};

/// 2n vertices and n(n-1) + 2m + 1 edges; requires n >= 2, 1 <= m <= n-1.
Graph build_gluing(const GluingSpec& spec);

bool class_present(const GluingSpec& spec, EdgeClass c);

EdgeClass classify_edge(const GluingSpec& spec, int x, int y);

/// Canonical representative edge of a class under the fixed labeling.
Edge representative_edge(const GluingSpec& spec, EdgeClass c);

/// Closed-form curvature of every edge in the class. Exact for six of
/// the seven classes; HubToFree returns the known exact bracket (which
/// collapses to a point at m = n-2). The CrossSpoke regime is decided by
/// the integer comparison (2m+n)^2 vs 5n^2-8n, avoiding radicals.
KappaValue closed_form_kappa(const GluingSpec& spec, EdgeClass c);

struct PositivityWindow {
    Rational threshold;       // (n^2 - 2n) / (n + 2)
    int smallest_positive_m;  // M: least m with every edge strictly positive
};

/// Every edge of K_n +_m K'_n has positive curvature iff
/// threshold < m <= n-1; requires n >= 5.
PositivityWindow positivity_window(int n);

/// Lower bound on the minimum edge curvature of K_n +_M K'_n:
/// (n-6)/(n(2n-3)) for n > 6, (n-2)/(n(n-1)) for n in {5, 6}.
Rational global_lower_bound_at_M(int n);

}  // namespace ricci
