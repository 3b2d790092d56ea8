#include "ricci/transport.hpp"

#include "ricci/simplex.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <vector>

namespace ricci {

namespace {

void check_support(const Graph& g, const VertexMeasure& m, const char* name) {
    for (const auto& atom : m.support()) {
        if (atom.vertex >= g.vertex_count()) {
            throw SupportOutOfRangeError(std::string(name) + " has mass at vertex " +
                                         std::to_string(atom.vertex) +
                                         " outside the graph");
        }
    }
}

// Successive-shortest-path min-cost flow. Arc costs are hop distances
// (small nonnegative ints); capacities and flows are big integers so the
// common-denominator scale never overflows.
class FlowNetwork {
public:
    explicit FlowNetwork(int node_count) : head_(node_count) {}

    void add_arc(int from, int to, Int capacity, int cost) {
        head_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, std::move(capacity), cost});
        head_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, Int(0), -cost});
    }

    // Sends `supply` units from s to t; returns the optimal cost.
    // All original costs are >= 0, so Dijkstra with potentials applies
    // from the start.
    Int run(int s, int t, const Int& supply) {
        const int n = static_cast<int>(head_.size());
        std::vector<long long> potential(n, 0);
        Int remaining = supply;
        Int total_cost = 0;
        while (remaining > 0) {
            constexpr long long inf = std::numeric_limits<long long>::max();
            std::vector<long long> dist(n, inf);
            std::vector<int> via_arc(n, -1);
            std::vector<bool> done(n, false);
            dist[s] = 0;
            for (;;) {  // dense Dijkstra; node counts are tiny
                int u = -1;
                for (int i = 0; i < n; ++i) {
                    if (!done[i] && dist[i] < inf && (u == -1 || dist[i] < dist[u])) {
                        u = i;
                    }
                }
                if (u == -1) break;
                done[u] = true;
                for (int idx : head_[u]) {
                    const Arc& a = arcs_[idx];
                    if (a.capacity <= 0) continue;
                    long long nd = dist[u] + a.cost + potential[u] - potential[a.to];
                    if (nd < dist[a.to]) {
                        dist[a.to] = nd;
                        via_arc[a.to] = idx;
                    }
                }
            }
            if (dist[t] == inf) {
                throw Error("min-cost flow: demand unreachable");  // cannot happen on K(supp x supp)
            }
            for (int i = 0; i < n; ++i) {
                if (dist[i] < inf) potential[i] += dist[i];
            }
            Int push = remaining;
            for (int v = t; v != s;) {
                const Arc& a = arcs_[via_arc[v]];
                push = std::min(push, a.capacity);
                v = arcs_[via_arc[v] ^ 1].to;
            }
            long long path_cost = potential[t] - potential[s];
            for (int v = t; v != s;) {
                Arc& a = arcs_[via_arc[v]];
                a.capacity -= push;
                arcs_[via_arc[v] ^ 1].capacity += push;
                v = arcs_[via_arc[v] ^ 1].to;
            }
            total_cost += push * path_cost;
            remaining -= push;
        }
        return total_cost;
    }

    // Flow sent along the forward arc added k-th (in add_arc order).
    Int flow_on(int k) const { return arcs_[2 * k + 1].capacity; }

private:
    struct Arc {
        int to;
        Int capacity;
        int cost;
    };
    std::vector<std::vector<int>> head_;
    std::vector<Arc> arcs_;
};

struct ScaledSolve {
    Rational value;
    TransportPlan plan;
};

ScaledSolve solve_scaled(const Graph& g, const VertexMeasure& mu,
                         const VertexMeasure& nu, const Int& scale) {
    const auto& src = mu.support();
    const auto& dst = nu.support();
    const int s = static_cast<int>(src.size());
    const int t = static_cast<int>(dst.size());

    // Nodes: 0 = source, 1..s = mu atoms, s+1..s+t = nu atoms, s+t+1 = sink.
    FlowNetwork net(s + t + 2);
    int arc_index = 0;
    for (int i = 0; i < s; ++i) {
        Rational scaled = src[i].mass * scale;
        net.add_arc(0, 1 + i, numerator(scaled), 0);
        ++arc_index;
    }
    std::vector<int> cross_base(s);
    for (int i = 0; i < s; ++i) {
        cross_base[i] = arc_index;
        for (int j = 0; j < t; ++j) {
            net.add_arc(1 + i, 1 + s + j, Int(scale),
                        g.distance(src[i].vertex, dst[j].vertex));
            ++arc_index;
        }
    }
    for (int j = 0; j < t; ++j) {
        Rational scaled = dst[j].mass * scale;
        net.add_arc(1 + s + j, s + t + 1, numerator(scaled), 0);
        ++arc_index;
    }

    Int cost = net.run(0, s + t + 1, scale);

    ScaledSolve out;
    out.value = Rational(cost, scale);
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < t; ++j) {
            Int f = net.flow_on(cross_base[i] + j);
            if (f > 0) {
                out.plan.entries.push_back(
                    {src[i].vertex, dst[j].vertex, Rational(f, scale)});
            }
        }
    }
    out.plan.cost = out.value;
    return out;
}

}  // namespace

namespace detail {

Int common_denominator(const VertexMeasure& mu, const VertexMeasure& nu) {
    Int l = 1;
    for (const auto& atom : mu.support()) l = lcm(l, denominator(atom.mass));
    for (const auto& atom : nu.support()) l = lcm(l, denominator(atom.mass));
    return l;
}

Rational wasserstein_with_scale(const Graph& g, const VertexMeasure& mu,
                                const VertexMeasure& nu, const Int& scale) {
    check_support(g, mu, "mu");
    check_support(g, nu, "nu");
    if (scale <= 0 || scale % common_denominator(mu, nu) != 0) {
        throw Error("scale must be a positive common multiple of the mass denominators");
    }
    return solve_scaled(g, mu, nu, scale).value;
}

}  // namespace detail

WassersteinResult wasserstein(const Graph& g, const VertexMeasure& mu,
                              const VertexMeasure& nu) {
    check_support(g, mu, "mu");
    check_support(g, nu, "nu");

    if (mu == nu) {  // degenerate case: keep every atom in place
        WassersteinResult r;
        r.distance = 0;
        for (const auto& atom : mu.support()) {
            r.plan.entries.push_back({atom.vertex, atom.vertex, atom.mass});
        }
        r.plan.cost = 0;
        return r;
    }

    ScaledSolve solved = solve_scaled(g, mu, nu, detail::common_denominator(mu, nu));
    return {solved.value, std::move(solved.plan)};
}

Rational wasserstein_bruteforce(const Graph& g, const VertexMeasure& mu,
                                const VertexMeasure& nu) {
    check_support(g, mu, "mu");
    check_support(g, nu, "nu");

    std::set<int> combined;
    for (const auto& atom : mu.support()) combined.insert(atom.vertex);
    for (const auto& atom : nu.support()) combined.insert(atom.vertex);
    if (combined.size() > 12) {
        throw OracleTooLargeError("combined support has " +
                                  std::to_string(combined.size()) +
                                  " vertices; the oracle caps at 12");
    }

    const auto& src = mu.support();
    const auto& dst = nu.support();
    const size_t s = src.size();
    const size_t t = dst.size();

    // Variables x[i*t+j] = mass moved src i -> dst j. Row sums fix mu,
    // column sums fix nu; the last column constraint is implied by the
    // rest and dropped to keep the system full-rank.
    lp::Problem p;
    p.cost.resize(s * t);
    for (size_t i = 0; i < s; ++i) {
        for (size_t j = 0; j < t; ++j) {
            p.cost[i * t + j] = g.distance(src[i].vertex, dst[j].vertex);
        }
    }
    for (size_t i = 0; i < s; ++i) {
        std::vector<Rational> row(s * t, Rational(0));
        for (size_t j = 0; j < t; ++j) row[i * t + j] = 1;
        p.constraints.push_back(std::move(row));
        p.rhs.push_back(src[i].mass);
    }
    for (size_t j = 0; j + 1 < t; ++j) {
        std::vector<Rational> row(s * t, Rational(0));
        for (size_t i = 0; i < s; ++i) row[i * t + j] = 1;
        p.constraints.push_back(std::move(row));
        p.rhs.push_back(dst[j].mass);
    }
    return lp::solve(p).value;
}

DualCertificate check_dual_witness(const Graph& g, const VertexMeasure& mu,
                                   const VertexMeasure& nu,
                                   const LipschitzWitness& f, const Rational& w) {
    check_support(g, mu, "mu");
    check_support(g, nu, "nu");
    const int n = g.vertex_count();
    if (static_cast<int>(f.values.size()) != n) {
        throw SupportOutOfRangeError("witness assigns " +
                                     std::to_string(f.values.size()) +
                                     " values on a graph with " + std::to_string(n) +
                                     " vertices");
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int gap = f.values[u] - f.values[v];
            if (gap < 0) gap = -gap;
            if (gap > g.distance(u, v)) {
                throw NotLipschitzError("witness violates |f(u)-f(v)| <= d(u,v) at (" +
                                            std::to_string(u) + ", " +
                                            std::to_string(v) + ")",
                                        u, v);
            }
        }
    }
    Rational attained = 0;
    for (const auto& atom : mu.support()) attained += atom.mass * f.values[atom.vertex];
    for (const auto& atom : nu.support()) attained -= atom.mass * f.values[atom.vertex];
    return {attained, attained <= w, attained == w};
}

}  // namespace ricci
