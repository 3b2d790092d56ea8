#pragma once

#include "ricci/errors.hpp"
#include "ricci/rational.hpp"

#include <vector>

namespace ricci::lp {

/// minimize cost . x  subject to  constraints x == rhs, x >= 0.
struct Problem {
    std::vector<std::vector<Rational>> constraints;  // m rows, n columns
    std::vector<Rational> rhs;                       // length m
    std::vector<Rational> cost;                      // length n
};

struct Solution {
    Rational value;
    std::vector<Rational> x;
};

/// Two-phase dense tableau simplex with Bland's anti-cycling rule, all
/// pivots in exact rational arithmetic. Sized for desk-scale problems
/// (the coupling polytopes this library enumerates); throws Error on
/// infeasible or unbounded input.
Solution solve(const Problem& problem);

}  // namespace ricci::lp
