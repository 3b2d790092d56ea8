#pragma once

// Hand-constructed couplings and Lipschitz potentials on the gluing
// graph, defined casewise over the vertex classes and parameterized by
// (n, m). They certify the transport solver from both sides: each
// coupling is a feasible primal point whose cost matches the closed
// form, and each potential is a feasible dual point attaining the same
// value.

#include "ricci/gluing.hpp"
#include "ricci/graph.hpp"
#include "ricci/transport.hpp"

#include <map>
#include <string>
#include <vector>

namespace fixtures {

using ricci::GluingSpec;
using ricci::Graph;
using ricci::LipschitzWitness;
using ricci::Rational;
using ricci::TransportPlan;
using ricci::VertexMeasure;
using ricci::make_rational;

struct PlanFixture {
    std::string name;
    int x, y;  // the measure pair is (m_x, m_y)
    std::vector<TransportPlan::Entry> entries;
    Rational expected_cost;
};

struct WitnessFixture {
    std::string name;
    int x, y;
    LipschitzWitness f;
    Rational expected_value;
};

inline std::vector<int> attached_u(const GluingSpec& s) {
    std::vector<int> out;
    for (int i = 1; i <= s.m; ++i) out.push_back(s.u(i));
    return out;
}
inline std::vector<int> free_u(const GluingSpec& s) {
    std::vector<int> out;
    for (int i = s.m + 1; i <= s.n - 1; ++i) out.push_back(s.u(i));
    return out;
}
inline std::vector<int> attached_v(const GluingSpec& s) {
    std::vector<int> out;
    for (int j = 1; j <= s.m; ++j) out.push_back(s.v(j));
    return out;
}
inline std::vector<int> free_v(const GluingSpec& s) {
    std::vector<int> out;
    for (int j = s.m + 1; j <= s.n - 1; ++j) out.push_back(s.v(j));
    return out;
}

inline void add_entry(std::vector<TransportPlan::Entry>& entries, int x, int y,
                      const Rational& mass) {
    if (mass != 0) entries.push_back({x, y, mass});
}

/// Coupling between m_{u_0} and m_{u_1}; requires m >= 2.
/// Cost (2n-2)(1/n - 1/(n+m)).
inline PlanFixture coupling_hub_to_attached(const GluingSpec& s) {
    const long long n = s.n, m = s.m;
    PlanFixture fx{"A(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")",
                   s.u(0), s.u(1), {},
                   Rational(2 * n - 2) * (make_rational(1, n) - make_rational(1, n + m))};
    Rational in_place = make_rational(1, n + m);
    for (int j = 2; j <= s.n - 1; ++j) add_entry(fx.entries, s.u(j), s.u(j), in_place);
    add_entry(fx.entries, s.v(0), s.v(0), in_place);
    Rational spread = make_rational(1, n) - make_rational(1, n + m);
    for (int v : attached_v(s)) {
        add_entry(fx.entries, v, s.u(0), make_rational(1, n * m));
        add_entry(fx.entries, v, s.v(0), spread / m);
        for (int j = 2; j <= s.n - 1; ++j) {
            add_entry(fx.entries, v, s.u(j),
                      (spread - make_rational(1, (n - 2) * (n + m))) / m);
        }
    }
    for (int j = 2; j <= s.n - 1; ++j) {
        add_entry(fx.entries, s.u(1), s.u(j), make_rational(1, (n - 2) * (n + m)));
    }
    return fx;
}

/// Coupling between m_{u_0} and m_{v_1} at m = n-1.
/// Cost 2(n-1)^2 / (n(2n-1)).
inline PlanFixture coupling_full_gluing(const GluingSpec& s) {
    const long long n = s.n;
    PlanFixture fx{"B_3(n=" + std::to_string(n) + ")",
                   s.u(0), s.v(1), {},
                   make_rational(2 * (n - 1) * (n - 1), n * (2 * n - 1))};
    Rational in_place = make_rational(1, 2 * n - 1);
    add_entry(fx.entries, s.v(0), s.v(0), in_place);
    for (int j = 2; j <= s.n - 1; ++j) {
        add_entry(fx.entries, s.v(j), s.v(j), in_place);
        add_entry(fx.entries, s.v(1), s.v(j), make_rational(1, (n - 2) * (2 * n - 1)));
    }
    Rational spread = make_rational(1, n) - make_rational(1, 2 * n - 1);
    for (int i = 1; i <= s.n - 1; ++i) {
        add_entry(fx.entries, s.u(i), s.u(0), make_rational(1, n * (n - 1)));
        add_entry(fx.entries, s.u(i), s.v(0), spread / (n - 1));
        for (int j = 2; j <= s.n - 1; ++j) {
            add_entry(fx.entries, s.u(i), s.v(j),
                      (spread - make_rational(1, (n - 2) * (2 * n - 1))) / (n - 1));
        }
    }
    return fx;
}

/// Coupling between m_{u_0} and m_{v_1} for the upper curvature regime,
/// 2 <= m <= n-3. Cost 2(n^2 - n - m) / (n(n+m)).
inline PlanFixture coupling_cross_spoke_dense(const GluingSpec& s) {
    const long long n = s.n, m = s.m;
    PlanFixture fx{"A_2(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")",
                   s.u(0), s.v(1), {},
                   make_rational(2 * (n * n - n - m), n * (n + m))};
    Rational in_place = make_rational(1, n + m);
    add_entry(fx.entries, s.v(0), s.v(0), in_place);
    for (int j = 2; j <= s.m; ++j) add_entry(fx.entries, s.v(j), s.v(j), in_place);
    for (int y : free_v(s)) {
        add_entry(fx.entries, s.v(1), y, make_rational(1, (n - m - 1) * (n + m)));
    }
    Rational to_hub = make_rational(1, n * (n - m - 1));
    for (int x : free_u(s)) {
        add_entry(fx.entries, x, s.u(0), to_hub);
        for (int j = 2; j <= s.m; ++j) {
            add_entry(fx.entries, x, s.v(j), (in_place - to_hub) / (m - 1));
        }
    }
    Rational spread = make_rational(1, n) - in_place;
    for (int x : attached_u(s)) {
        add_entry(fx.entries, x, s.v(0), spread / m);
        for (int y : free_v(s)) {
            add_entry(fx.entries, x, y,
                      (make_rational(1, n) - make_rational(1, (n - m - 1) * (n + m))) / m);
        }
        for (int j = 2; j <= s.m; ++j) {
            add_entry(fx.entries, x, s.v(j),
                      (spread - (make_rational(n - m - 1, n + m) - make_rational(1, n)) / (m - 1)) / m);
        }
    }
    return fx;
}

/// The m = n-2 variant of the same coupling. Cost (n^2-2n+2)/(n(n-1)).
inline PlanFixture coupling_cross_spoke_nearly_full(const GluingSpec& s) {
    const long long n = s.n;
    PlanFixture fx{"A_2(n=" + std::to_string(n) + ",m=n-2)",
                   s.u(0), s.v(1), {},
                   make_rational(n * n - 2 * n + 2, n * (n - 1))};
    Rational unit = make_rational(1, 2 * n - 2);
    add_entry(fx.entries, s.v(1), s.v(n - 1), unit);
    add_entry(fx.entries, s.v(0), s.v(0), unit);
    for (int j = 2; j <= s.n - 2; ++j) add_entry(fx.entries, s.v(j), s.v(j), unit);
    add_entry(fx.entries, s.u(n - 1), s.u(0), unit);
    Rational spread = (make_rational(1, n) - unit) / (n - 2);
    for (int x : attached_u(s)) {
        add_entry(fx.entries, x, s.u(0), spread);
        add_entry(fx.entries, x, s.v(0), spread);
        add_entry(fx.entries, x, s.v(n - 1), spread);
        for (int j = 2; j <= s.n - 2; ++j) add_entry(fx.entries, x, s.v(j), spread);
    }
    return fx;
}

/// Coupling between m_{u_0} and m_{v_1} for the lower curvature regime,
/// 1 <= m < (-n + sqrt(5n^2-8n))/2. Cost (-m^2-(2+n)m+3n^2-4n)/(n(n+m)).
inline PlanFixture coupling_cross_spoke_sparse(const GluingSpec& s) {
    const long long n = s.n, m = s.m;
    PlanFixture fx{"A'_2(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")",
                   s.u(0), s.v(1), {},
                   make_rational(-m * m - (2 + n) * m + 3 * n * n - 4 * n, n * (n + m))};
    Rational in_place = make_rational(1, n + m);
    add_entry(fx.entries, s.v(0), s.v(0), in_place);
    for (int j = 2; j <= s.m; ++j) add_entry(fx.entries, s.v(j), s.v(j), in_place);
    for (int y : free_v(s)) {
        add_entry(fx.entries, s.v(1), y, make_rational(1, (n - m - 1) * (n + m)));
    }
    const long long f = n - m - 1;  // number of free vertices per block
    Rational spread = make_rational(1, n) - in_place;
    Rational residue = in_place - (make_rational(m, n) - make_rational(m - 1, n + m)) / f;
    for (int x : free_u(s)) {
        add_entry(fx.entries, x, s.u(0), make_rational(1, n * f));
        for (int j = 2; j <= s.m; ++j) add_entry(fx.entries, x, s.v(j), spread / f);
        for (int y : free_v(s)) add_entry(fx.entries, x, y, residue / f);
    }
    Rational leftover = in_place - spread / m;
    for (int x : attached_u(s)) {
        add_entry(fx.entries, x, s.v(0), spread / m);
        for (int y : free_v(s)) add_entry(fx.entries, x, y, leftover / f);
    }
    return fx;
}

namespace detail {

inline LipschitzWitness witness_on(const GluingSpec& s,
                                   const std::vector<std::pair<std::vector<int>, int>>& levels) {
    LipschitzWitness f;
    f.values.assign(2 * s.n, 0);
    for (const auto& [set, value] : levels) {
        for (int w : set) f.values[w] = value;
    }
    return f;
}

}  // namespace detail

/// Potential for (m_{u_0}, m_{v_1}) at m = n-1; attains the transport cost.
inline WitnessFixture witness_full_gluing(const GluingSpec& s) {
    const long long n = s.n;
    std::vector<int> low;
    for (int j = 2; j <= s.n - 1; ++j) low.push_back(s.v(j));
    return {"f(n=" + std::to_string(n) + ")",
            s.u(0), s.v(1),
            detail::witness_on(s, {{low, -2}, {{s.u(0), s.v(1), s.v(0)}, -1}}),
            make_rational(2 * (n - 1) * (n - 1), n * (2 * n - 1))};
}

/// Potential for (m_{u_0}, m_{v_0}); attains (3n-3m-4)/(n+m).
inline WitnessFixture witness_bridge(const GluingSpec& s) {
    const long long n = s.n, m = s.m;
    std::vector<int> two = attached_u(s);
    two.push_back(s.u(0));
    std::vector<int> one = attached_v(s);
    one.push_back(s.v(0));
    return {"f_1(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")",
            s.u(0), s.v(0),
            detail::witness_on(s, {{free_u(s), 3}, {two, 2}, {one, 1}}),
            make_rational(3 * n - 3 * m - 4, n + m)};
}

/// Potential for (m_{u_0}, m_{v_1}) in the upper regime; attains
/// 2(n^2-n-m)/(n(n+m)).
inline WitnessFixture witness_cross_spoke_dense(const GluingSpec& s) {
    const long long n = s.n, m = s.m;
    std::vector<int> two;
    for (int i = 1; i <= s.n - 1; ++i) two.push_back(s.u(i));
    return {"f_2(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")",
            s.u(0), s.v(1),
            detail::witness_on(s, {{two, 2}, {{s.u(0), s.v(0), s.v(1)}, 1}}),
            make_rational(2 * (n * n - n - m), n * (n + m))};
}

/// Potential for (m_{u_0}, m_{v_1}) in the lower regime; attains
/// (3n-2)/(n+m) - (m+2)/n.
inline WitnessFixture witness_cross_spoke_sparse(const GluingSpec& s) {
    const long long n = s.n, m = s.m;
    std::vector<int> two = attached_u(s);
    two.push_back(s.u(0));
    std::vector<int> one = attached_v(s);
    one.push_back(s.v(0));
    return {"f'_2(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")",
            s.u(0), s.v(1),
            detail::witness_on(s, {{free_u(s), 3}, {two, 2}, {one, 1}}),
            make_rational(3 * n - 2, n + m) - make_rational(m + 2, n)};
}

/// Potential for (m_{u_0}, m_{u_1}); attains (2n-2)(1/n - 1/(n+m)).
inline WitnessFixture witness_hub_to_attached(const GluingSpec& s) {
    const long long n = s.n, m = s.m;
    std::vector<int> low;
    for (int j = 2; j <= s.n - 1; ++j) low.push_back(s.u(j));
    return {"f_3(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")",
            s.u(0), s.u(1),
            detail::witness_on(s, {{low, -2}, {{s.u(0), s.u(1), s.v(0)}, -1}}),
            Rational(2 * n - 2) * (make_rational(1, n) - make_rational(1, n + m))};
}

/// Potential for (m_{u_0}, m_{u_{n-1}}); attains
/// (2nm-3m+n-2)/((n-1)(n+m)), the exact transport cost when m >= 2.
/// The free primed vertices sit at level 1, not 0: they are adjacent to
/// the level-2 attached vertices, so level 0 would break the Lipschitz
/// constraint, and they carry no mass of either measure, so the attained
/// value is unaffected.
inline WitnessFixture witness_hub_to_free(const GluingSpec& s) {
    const long long n = s.n, m = s.m;
    std::vector<int> one = free_v(s);
    one.push_back(s.u(0));
    one.push_back(s.v(0));
    one.push_back(s.u(n - 1));
    return {"f_4(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")",
            s.u(0), s.u(n - 1),
            detail::witness_on(s, {{attached_v(s), 2}, {one, 1}}),
            make_rational(2 * n * m - 3 * m + n - 2, (n - 1) * (n + m))};
}

/// True iff (n, m) falls in the upper ("dense") cross-spoke regime,
/// decided in integers: (2m+n)^2 >= 5n^2 - 8n.
inline bool dense_regime(const GluingSpec& s) {
    const long long n = s.n, m = s.m;
    return (2 * m + n) * (2 * m + n) >= 5 * n * n - 8 * n;
}

struct PlanCheck {
    bool nonnegative = true;
    bool marginals_ok = true;
    Rational cost;
};

/// Recomputes feasibility and cost of a coupling fixture from scratch.
inline PlanCheck evaluate_plan(const Graph& g, const PlanFixture& fx) {
    PlanCheck out;
    std::map<int, Rational> row, col;
    for (const auto& e : fx.entries) {
        if (e.mass <= 0) out.nonnegative = false;
        row[e.source] += e.mass;
        col[e.target] += e.mass;
        out.cost += e.mass * g.distance(e.source, e.target);
    }
    VertexMeasure mu = ricci::random_walk_measure(g, fx.x);
    VertexMeasure nu = ricci::random_walk_measure(g, fx.y);
    for (const auto& atom : mu.support()) {
        if (row[atom.vertex] != atom.mass) out.marginals_ok = false;
        row.erase(atom.vertex);
    }
    for (const auto& atom : nu.support()) {
        if (col[atom.vertex] != atom.mass) out.marginals_ok = false;
        col.erase(atom.vertex);
    }
    if (!row.empty() || !col.empty()) out.marginals_ok = false;  // mass off-support
    return out;
}

}  // namespace fixtures
