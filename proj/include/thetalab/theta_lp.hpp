#pragma once

// The association-scheme linear program whose optimum is the Lovasz number
// of G(n, k, L), and its nonnegative variant (Schrijver / Delsarte bound).
//
// Decision variables are a_i for the relations i in M \ {0}, where
// M = {0} u {k - l : l in L} (two k-sets meet in t points iff they are at
// Johnson distance k - t). For every eigenspace u in [0, k]:
//
//     sum_i a_i mu_u P_i^u / nu_i  >=  -mu_u        (a_0 = 1 moved right)
//
// and the objective is 1 + sum_i a_i. Each row is scaled by lcm(nu_i) so the
// stored coefficients are integers.

#include "thetalab/combinat.hpp"
#include "thetalab/matrix.hpp"
#include "thetalab/simplex.hpp"

#include <span>
#include <vector>

namespace thetalab {

enum class SignMode { Free, Nonnegative };

struct LpProblem {
    LSpec spec;
    SignMode mode = SignMode::Free;
    /// Relation indices i in M \ {0}, increasing. Variable v is a_{classes[v]}.
    std::vector<int> classes;
    /// (k+1) x s integer coefficients; row u is the eigenspace-u constraint.
    Matrix<BigInt> coeff;
    /// Row u reads coeff.row(u) . a >= rhs[u].
    std::vector<BigInt> rhs;

    std::size_t constraint_count() const { return coeff.rows(); }
    std::size_t variable_count() const { return classes.size(); }
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational optimum;
    /// a_{classes[v]} for each variable v.
    std::vector<Rational> assignment;
    /// Nonnegative multipliers, one per constraint row.
    std::vector<Rational> dual;
    std::size_t pivots = 0;
};

/// Throws std::invalid_argument when n < 2k.
LpProblem build_lp(const LSpec& spec, SignMode mode);

/// Exact optimum with a stored dual certificate.
LpSolution solve_exact(const LpProblem& problem);

/// Evaluates row u of the problem at `a`, minus rhs (>= 0 iff satisfied).
Rational constraint_slack(const LpProblem& problem, std::size_t u, std::span<const Rational> a);

/// Re-substitutes the assignment into every row, checks the sign mode and
/// verifies that the dual certificate reproduces the optimum exactly.
bool verify_solution(const LpProblem& problem, const LpSolution& solution);

/// Lovasz number. Throws std::logic_error if the LP is not optimal.
Rational theta(const LSpec& spec);

/// Schrijver / Delsarte bound (all a_i >= 0).
Rational sigma(const LSpec& spec);

}  // namespace thetalab
