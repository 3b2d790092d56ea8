#pragma once

#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

#include <vector>

namespace ricci {

/// Eigendecomposition of a dense symmetric matrix by cyclic Jacobi
/// rotations; sweeps stop once the off-diagonal Frobenius mass drops
/// below 1e-14. values are ascending; vectors[k] pairs with values[k].
struct EigenDecomposition {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

EigenDecomposition jacobi_eigen_symmetric(std::vector<std::vector<double>> a);

/// First nonzero eigenvalue of the random-walk normalized Laplacian
/// I - D^{-1}A, computed on the symmetric conjugate
/// I - D^{-1/2} A D^{-1/2} (same spectrum). Spectrum lies in [0, 2].
struct SpectralReport {
    double lambda1 = 0;
    Rational kappa_min;     // minimum edge curvature of the same graph
    double eigen_residual = 0;  // max ||L v - lambda v||_inf over all pairs
    std::vector<double> spectrum;  // ascending
};

SpectralReport normalized_laplacian_gap(const Graph& g);

/// First nonzero eigenvalue of the combinatorial Laplacian D - A,
/// exposed for comparison with the normalized operator.
double unnormalized_laplacian_gap(const Graph& g);

struct CheegerReport {
    Rational value;
    std::vector<int> argmin_set;  // lexicographically least minimizer
};

enum class CheegerSizeRule {
    StrictHalf,   // 0 < |A| < |V|/2 (excludes exact halves on even |V|)
    AtMostHalf,   // 0 < |A| <= |V|/2, the conventional variant
};

/// Exhaustive boundary-to-size ratio min |dA| / |A| over admissible
/// subsets; requires |V| <= 20.
CheegerReport cheeger_constant(const Graph& g,
                               CheegerSizeRule rule = CheegerSizeRule::StrictHalf);

/// Volume-normalized variant min |dA| / vol(A) over 2 vol(A) <= vol(V),
/// the quantity the Cheeger eigenvalue inequalities govern.
CheegerReport cheeger_conductance(const Graph& g);

/// Bounds checked on K_n +_M K'_n: the curvature sandwich on lambda_1,
/// the Cheeger inequalities, and the explicit n-dependent bracket for h.
/// The chains are evaluated both for the size-normalized Cheeger
/// constant and for the conductance; float comparisons use a 1e-9 slack.
struct SandwichReport {
    int n = 0;
    int m = 0;  // = M
    Rational kappa_min;
    double lambda1 = 0;
    double eigen_residual = 0;
    Rational cheeger_size;    // |dA| / |A|, strict-half rule
    Rational cheeger_volume;  // |dA| / vol(A)

    bool eigen_sandwich_ok = false;      // kappa_min <= lambda1 <= 2 - kappa_min
    bool chung_size_ok = false;          // lambda1/2 <= h <= sqrt(2 lambda1), size-normalized h
    bool chung_volume_ok = false;        // same chain for the conductance
    bool bracket_size_ok = false;        // explicit n-branch bracket, size-normalized h
    bool bracket_volume_ok = false;      // same bracket for the conductance

    Rational bracket_lower;  // (n-6)/(2n(2n-3)) for n > 6, else (n-2)/(2n(n-1))
    double bracket_upper = 0;  // sqrt of the matching branch
};

SandwichReport verify_sandwich(int n);

}  // namespace ricci
