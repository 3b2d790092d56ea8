#include "ricci/gluing.hpp"

#include <string>
#include <vector>

namespace ricci {

namespace {

void check_spec(const GluingSpec& spec) {
    if (spec.n < 2 || spec.m < 1 || spec.m > spec.n - 1) {
        throw InvalidSpecError("gluing requires n >= 2 and 1 <= m <= n-1, got n=" +
                               std::to_string(spec.n) + " m=" + std::to_string(spec.m));
    }
}

void check_positivity_n(int n) {
    if (n < 5) {
        throw NTooSmallError("the positivity results require n >= 5, got n=" +
                             std::to_string(n));
    }
}

}  // namespace

const char* to_string(EdgeClass c) {
    switch (c) {
        case EdgeClass::Bridge: return "Bridge";
        case EdgeClass::CrossSpoke: return "CrossSpoke";
        case EdgeClass::HubToAttached: return "HubToAttached";
        case EdgeClass::AttachedPair: return "AttachedPair";
        case EdgeClass::AttachedToFree: return "AttachedToFree";
        case EdgeClass::HubToFree: return "HubToFree";
        case EdgeClass::FreePair: return "FreePair";
    }
    return "?";
}

Graph build_gluing(const GluingSpec& spec) {
    check_spec(spec);
    const int n = spec.n;
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) + 2 * spec.m + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.emplace_back(spec.u(i), spec.u(j));
            edges.emplace_back(spec.v(i), spec.v(j));
        }
    }
    edges.emplace_back(spec.u(0), spec.v(0));
    for (int i = 1; i <= spec.m; ++i) {
        edges.emplace_back(spec.u(0), spec.v(i));
        edges.emplace_back(spec.u(i), spec.v(0));
    }
    return build_graph(edges);
}

bool class_present(const GluingSpec& spec, EdgeClass c) {
    check_spec(spec);
    const int free_count = spec.n - 1 - spec.m;
    switch (c) {
        case EdgeClass::Bridge:
        case EdgeClass::CrossSpoke:
        case EdgeClass::HubToAttached:
            return true;  // m >= 1 always
        case EdgeClass::AttachedPair:
            return spec.m >= 2;
        case EdgeClass::AttachedToFree:
        case EdgeClass::HubToFree:
            return free_count >= 1;
        case EdgeClass::FreePair:
            return free_count >= 2;
    }
    return false;
}

EdgeClass classify_edge(const GluingSpec& spec, int x, int y) {
    check_spec(spec);
    const int n = spec.n;
    auto in_range = [&](int w) { return 0 <= w && w < 2 * n; };
    bool edge = false;
    if (in_range(x) && in_range(y) && x != y) {
        if (spec.same_block(x, y)) {
            edge = true;  // blocks are complete
        } else {
            int a = std::min(x, y), b = std::max(x, y);  // a unprimed, b primed
            edge = (a == 0 && b == n) || (a == 0 && spec.is_attached(b)) ||
                   (b == n && spec.is_attached(a));
        }
    }
    if (!edge) {
        throw NotAnEdgeError("(" + std::to_string(x) + ", " + std::to_string(y) +
                             ") is not an edge of the gluing graph");
    }
    if (!spec.same_block(x, y)) {
        return spec.is_hub(x) && spec.is_hub(y) ? EdgeClass::Bridge
                                                : EdgeClass::CrossSpoke;
    }
    if (spec.is_hub(x) || spec.is_hub(y)) {
        int other = spec.is_hub(x) ? y : x;
        return spec.is_attached(other) ? EdgeClass::HubToAttached : EdgeClass::HubToFree;
    }
    int attached = (spec.is_attached(x) ? 1 : 0) + (spec.is_attached(y) ? 1 : 0);
    if (attached == 2) return EdgeClass::AttachedPair;
    if (attached == 1) return EdgeClass::AttachedToFree;
    return EdgeClass::FreePair;
}

Edge representative_edge(const GluingSpec& spec, EdgeClass c) {
    if (!class_present(spec, c)) {
        throw ClassEmptyForSpecError(std::string(to_string(c)) +
                                     " has no edges at n=" + std::to_string(spec.n) +
                                     " m=" + std::to_string(spec.m));
    }
    const int n = spec.n;
    switch (c) {
        case EdgeClass::Bridge: return {spec.u(0), spec.v(0)};
        case EdgeClass::CrossSpoke: return {spec.u(0), spec.v(1)};
        case EdgeClass::HubToAttached: return {spec.u(0), spec.u(1)};
        case EdgeClass::AttachedPair: return {spec.u(1), spec.u(2)};
        case EdgeClass::AttachedToFree: return {spec.u(1), spec.u(n - 1)};
        case EdgeClass::HubToFree: return {spec.u(0), spec.u(n - 1)};
        case EdgeClass::FreePair: return {spec.u(n - 2), spec.u(n - 1)};
    }
    throw ClassEmptyForSpecError("unknown edge class");
}

KappaValue closed_form_kappa(const GluingSpec& spec, EdgeClass c) {
    if (!class_present(spec, c)) {
        throw ClassEmptyForSpecError(std::string(to_string(c)) +
                                     " has no edges at n=" + std::to_string(spec.n) +
                                     " m=" + std::to_string(spec.m));
    }
    const long long n = spec.n;
    const long long m = spec.m;
    auto exact = [](Rational r) { return KappaValue{r, r}; };
    switch (c) {
        case EdgeClass::Bridge:
            // The (4m-2n+4)/(n+m) form holds up to m = n-2; at m = n-1
            // both Jost-Liu estimates are tight and give (2n-2)/(2n-1).
            if (m == n - 1) {
                return exact(make_rational(2 * n - 2, 2 * n - 1));
            }
            return exact(make_rational(4 * m - 2 * n + 4, n + m));
        case EdgeClass::CrossSpoke:
            // Regimes split at m = (-n + sqrt(5n^2-8n)) / 2.
            if ((2 * m + n) * (2 * m + n) >= 5 * n * n - 8 * n) {
                return exact(make_rational((2 + n) * m + 2 * n - n * n, n * (n + m)));
            }
            return exact(
                make_rational(m * m + 2 * (n + 1) * m - 2 * n * n + 4 * n, n * (n + m)));
        case EdgeClass::HubToAttached:
            if (m == 1) {
                return exact(make_rational(n - 1, n + 1));
            }
            return exact(make_rational(n * n - m * n + 2 * m, n * (n + m)));
        case EdgeClass::HubToFree:
            if (m == n - 2) {  // the bracket collapses
                return exact(make_rational(1, n - 1));
            }
            return {make_rational((2 - n) * m + n * n - 3 * n + 3, (n - 1) * (n + m)),
                    make_rational((2 - n) * m + n * n - 2 * n + 2, (n - 1) * (n + m))};
        case EdgeClass::AttachedPair:
            return exact(make_rational(n - 1, n));
        case EdgeClass::AttachedToFree:
            return exact(make_rational(n - 2, n));
        case EdgeClass::FreePair:
            return exact(make_rational(n - 2, n - 1));
    }
    throw ClassEmptyForSpecError("unknown edge class");
}

PositivityWindow positivity_window(int n) {
    check_positivity_n(n);
    const long long nn = n;
    Rational threshold = make_rational(nn * nn - 2 * nn, nn + 2);
    // Smallest integer strictly above the threshold.
    Int floor_q = numerator(threshold) / denominator(threshold);
    int M = static_cast<int>(floor_q) + 1;
    int expected = n > 6 ? n - 3 : n - 2;
    if (M != expected) {
        throw Error("positivity window cross-check failed at n=" + std::to_string(n));
    }
    return {threshold, M};
}

Rational global_lower_bound_at_M(int n) {
    check_positivity_n(n);
    const long long nn = n;
    if (n > 6) {
        return make_rational(nn - 6, nn * (2 * nn - 3));
    }
    return make_rational(nn - 2, nn * (nn - 1));
}

}  // namespace ricci
