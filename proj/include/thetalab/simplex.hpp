#pragma once

// Exact rational simplex for small dense problems
//
//     maximize c.x  subject to  A x <= b,  x_j >= 0 or x_j free.
//
// Free variables are split into differences of nonnegative columns. Pivot
// selection follows Bland's rule (lowest eligible index for both the entering
// column and the leaving row), so the method terminates and the pivot
// sequence is a pure function of the input.

#include "thetalab/combinat.hpp"
#include "thetalab/matrix.hpp"

#include <vector>

namespace thetalab {

enum class VarSign { Free, Nonnegative };

enum class LpStatus { Optimal, Unbounded, Infeasible };

const char* to_string(LpStatus status);

struct InequalityLp {
    Matrix<Rational> A;
    std::vector<Rational> b;
    std::vector<Rational> c;
    std::vector<VarSign> sign;
};

struct SimplexResult {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;
    /// Optimal point in the original variables (empty unless Optimal).
    std::vector<Rational> x;
    /// Nonnegative row multipliers y with A^T y >= c (= c on free columns)
    /// and b.y == objective: an exact optimality certificate.
    std::vector<Rational> dual;
    std::size_t pivots = 0;
};

SimplexResult solve_simplex(const InequalityLp& lp);

/// Checks primal feasibility, dual feasibility and equal objectives exactly.
bool certifies_optimum(const InequalityLp& lp, const SimplexResult& result);

}  // namespace thetalab
