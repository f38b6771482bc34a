#include "thetalab/theta_lp.hpp"

#include "thetalab/scheme.hpp"

#include <stdexcept>

namespace thetalab {

namespace {

InequalityLp to_inequality_form(const LpProblem& p) {
    // coeff . a >= rhs   <=>   -coeff . a <= -rhs
    const std::size_t m = p.constraint_count();
    const std::size_t s = p.variable_count();
    InequalityLp lp{Matrix<Rational>(m, s), std::vector<Rational>(m), std::vector<Rational>(s, Rational(1)),
                    std::vector<VarSign>(s, p.mode == SignMode::Free ? VarSign::Free
                                                                     : VarSign::Nonnegative)};
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < s; ++v) lp.A(u, v) = Rational(-p.coeff(u, v));
        lp.b[u] = Rational(-p.rhs[u]);
    }
    return lp;
}

}  // namespace

LpProblem build_lp(const LSpec& spec, SignMode mode) {
    auto scheme = build_scheme(spec.n(), spec.k());
    const int k = spec.k();

    LpProblem p{spec, mode, {}, {}, {}};
    for (auto it = spec.L().rbegin(); it != spec.L().rend(); ++it) p.classes.push_back(k - *it);

    BigInt scale = 1;
    for (int i : p.classes) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), scheme->nu(i).get_mpz_t());

    const std::size_t s = p.classes.size();
    p.coeff = Matrix<BigInt>(k + 1, s);
    p.rhs.resize(k + 1);
    for (int u = 0; u <= k; ++u) {
        for (std::size_t v = 0; v < s; ++v) {
            const int i = p.classes[v];
            p.coeff(u, v) = scheme->mu(u) * scheme->P(i, u) * (scale / scheme->nu(i));
        }
        p.rhs[u] = -scheme->mu(u) * scale;
    }
    return p;
}

LpSolution solve_exact(const LpProblem& problem) {
    const InequalityLp lp = to_inequality_form(problem);
    SimplexResult r = solve_simplex(lp);
    LpSolution out;
    out.status = r.status;
    out.pivots = r.pivots;
    if (r.status == LpStatus::Optimal) {
        out.optimum = 1 + r.objective;
        out.assignment = std::move(r.x);
        out.dual = std::move(r.dual);
    }
    return out;
}

Rational constraint_slack(const LpProblem& problem, std::size_t u, std::span<const Rational> a) {
    Rational lhs = 0;
    for (std::size_t v = 0; v < problem.variable_count(); ++v) lhs += Rational(problem.coeff(u, v)) * a[v];
    return lhs - Rational(problem.rhs[u]);
}

bool verify_solution(const LpProblem& problem, const LpSolution& solution) {
    if (solution.status != LpStatus::Optimal) return false;
    if (solution.assignment.size() != problem.variable_count()) return false;
    Rational objective = 1;
    for (const Rational& a : solution.assignment) {
        if (problem.mode == SignMode::Nonnegative && a < 0) return false;
        objective += a;
    }
    if (objective != solution.optimum) return false;
    for (std::size_t u = 0; u < problem.constraint_count(); ++u)
        if (constraint_slack(problem, u, solution.assignment) < 0) return false;

    SimplexResult as_simplex{LpStatus::Optimal, solution.optimum - 1, solution.assignment, solution.dual,
                             solution.pivots};
    return certifies_optimum(to_inequality_form(problem), as_simplex);
}

namespace {

Rational solve_or_throw(const LSpec& spec, SignMode mode) {
    const LpProblem p = build_lp(spec, mode);
    const LpSolution sol = solve_exact(p);
    if (sol.status != LpStatus::Optimal)
        throw std::logic_error(std::string("theta LP for n=") + std::to_string(spec.n()) +
                               " k=" + std::to_string(spec.k()) + " L={" + join_list(spec.L()) +
                               "} returned " + to_string(sol.status) +
                               "; the program is bounded and feasible by construction");
    return sol.optimum;
}

}  // namespace

Rational theta(const LSpec& spec) { return solve_or_throw(spec, SignMode::Free); }

Rational sigma(const LSpec& spec) { return solve_or_throw(spec, SignMode::Nonnegative); }

}  // namespace thetalab
