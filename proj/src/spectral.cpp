#include "ricci/spectral.hpp"

#include "ricci/curvature.hpp"
#include "ricci/gluing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

namespace ricci {

namespace {

double off_diagonal_frobenius(const std::vector<std::vector<double>>& a) {
    double sum = 0;
    const size_t n = a.size();
    for (size_t p = 0; p < n; ++p) {
        for (size_t q = p + 1; q < n; ++q) {
            sum += 2 * a[p][q] * a[p][q];
        }
    }
    return std::sqrt(sum);
}

std::vector<std::vector<double>> normalized_laplacian(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        l[i][i] = 1.0;
    }
    for (const auto& [u, v] : g.edges()) {
        double w = 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
        l[u][v] = -w;
        l[v][u] = -w;
    }
    return l;
}

double residual_inf(const std::vector<std::vector<double>>& a,
                    const EigenDecomposition& eig) {
    const size_t n = a.size();
    double worst = 0;
    for (size_t k = 0; k < n; ++k) {
        for (size_t i = 0; i < n; ++i) {
            double av = 0;
            for (size_t j = 0; j < n; ++j) {
                av += a[i][j] * eig.vectors[k][j];
            }
            worst = std::max(worst, std::abs(av - eig.values[k] * eig.vectors[k][i]));
        }
    }
    return worst;
}

int popcount(uint32_t mask) { return __builtin_popcount(mask); }

}  // namespace

EigenDecomposition jacobi_eigen_symmetric(std::vector<std::vector<double>> a) {
    const size_t n = a.size();
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i) v[i][i] = 1.0;

    constexpr double kOffTarget = 1e-14;
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_frobenius(a) >= kOffTarget;
         ++sweep) {
        for (size_t p = 0; p < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (size_t k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return a[x][x] < a[y][y]; });

    EigenDecomposition out;
    out.values.reserve(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (size_t k = 0; k < n; ++k) {
        out.values.push_back(a[order[k]][order[k]]);
        for (size_t i = 0; i < n; ++i) {
            out.vectors[k][i] = v[i][order[k]];
        }
    }
    return out;
}

SpectralReport normalized_laplacian_gap(const Graph& g) {
    auto l = normalized_laplacian(g);
    EigenDecomposition eig = jacobi_eigen_symmetric(l);
    SpectralReport r;
    r.spectrum = eig.values;
    r.lambda1 = eig.values.size() > 1 ? eig.values[1] : 0.0;
    r.eigen_residual = residual_inf(l, eig);
    r.kappa_min = min_edge_curvature(g).kappa;
    return r;
}

double unnormalized_laplacian_gap(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        l[i][i] = g.degree(i);
    }
    for (const auto& [u, v] : g.edges()) {
        l[u][v] = -1.0;
        l[v][u] = -1.0;
    }
    EigenDecomposition eig = jacobi_eigen_symmetric(l);
    return eig.values.size() > 1 ? eig.values[1] : 0.0;
}

namespace {

std::vector<int> mask_to_set(uint32_t mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        if (mask >> i & 1u) out.push_back(i);
    }
    return out;
}

// Shared subset sweep: admissible(mask, |A|) gates, weight(mask) is the
// denominator. The lexicographically least vertex set wins ties.
template <typename Admissible, typename Weight>
CheegerReport enumerate_cheeger(const Graph& g, Admissible admissible, Weight weight) {
    const int n = g.vertex_count();
    if (n > 20) {
        throw GraphTooLargeForExhaustiveError(
            "exhaustive Cheeger enumeration caps at 20 vertices, got " +
            std::to_string(n));
    }
    const auto& edges = g.edges();
    CheegerReport best;
    bool found = false;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!admissible(mask)) continue;
        int boundary = 0;
        for (const auto& [u, v] : edges) {
            boundary += ((mask >> u & 1u) != (mask >> v & 1u)) ? 1 : 0;
        }
        Rational value(boundary, weight(mask));
        if (!found || value < best.value ||
            (value == best.value &&
             mask_to_set(mask, n) < best.argmin_set)) {
            best.value = value;
            best.argmin_set = mask_to_set(mask, n);
            found = true;
        }
    }
    if (!found) {
        // Strict |A| < |V|/2 admits nothing on a two-vertex graph.
        throw Error("no admissible subset for the Cheeger minimum on " +
                    std::to_string(n) + " vertices");
    }
    return best;
}

}  // namespace

CheegerReport cheeger_constant(const Graph& g, CheegerSizeRule rule) {
    const int n = g.vertex_count();
    return enumerate_cheeger(
        g,
        [&](uint32_t mask) {
            int size = popcount(mask);
            return rule == CheegerSizeRule::StrictHalf ? 2 * size < n : 2 * size <= n;
        },
        [](uint32_t mask) { return popcount(mask); });
}

CheegerReport cheeger_conductance(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> degree(n);
    int total_volume = 0;
    for (int i = 0; i < n; ++i) {
        degree[i] = g.degree(i);
        total_volume += degree[i];
    }
    auto volume = [&](uint32_t mask) {
        int vol = 0;
        for (int i = 0; i < n; ++i) {
            if (mask >> i & 1u) vol += degree[i];
        }
        return vol;
    };
    return enumerate_cheeger(
        g, [&](uint32_t mask) { return 2 * volume(mask) <= total_volume; }, volume);
}

SandwichReport verify_sandwich(int n) {
    PositivityWindow window = positivity_window(n);  // NTooSmall below 5
    constexpr double kTol = 1e-9;

    SandwichReport r;
    r.n = n;
    r.m = window.smallest_positive_m;
    Graph g = build_gluing({n, r.m});

    SpectralReport spectral = normalized_laplacian_gap(g);
    r.kappa_min = spectral.kappa_min;
    r.lambda1 = spectral.lambda1;
    r.eigen_residual = spectral.eigen_residual;
    r.cheeger_size = cheeger_constant(g).value;
    r.cheeger_volume = cheeger_conductance(g).value;

    double k = to_double(r.kappa_min);
    r.eigen_sandwich_ok =
        k - kTol <= r.lambda1 && r.lambda1 <= 2.0 - k + kTol;

    auto chung = [&](const Rational& h) {
        double hd = to_double(h);
        return r.lambda1 / 2.0 - kTol <= hd && hd <= std::sqrt(2.0 * r.lambda1) + kTol;
    };
    r.chung_size_ok = chung(r.cheeger_size);
    r.chung_volume_ok = chung(r.cheeger_volume);

    const long long nn = n;
    if (n > 6) {
        r.bracket_lower = make_rational(nn - 6, 2 * nn * (2 * nn - 3));
        r.bracket_upper = std::sqrt(2.0 * (4.0 * nn * nn - 7.0 * nn + 6.0) /
                                    (nn * (2.0 * nn - 3.0)));
    } else {
        r.bracket_lower = make_rational(nn - 2, 2 * nn * (nn - 1));
        r.bracket_upper =
            std::sqrt(2.0 * (nn * nn - 2.0 * nn + 2.0) / (nn * (nn - 1.0)));
    }
    auto bracket = [&](const Rational& h) {
        return r.bracket_lower <= h && to_double(h) <= r.bracket_upper + kTol;
    };
    r.bracket_size_ok = bracket(r.cheeger_size);
    r.bracket_volume_ok = bracket(r.cheeger_volume);
    return r;
}

}  // namespace ricci
