#include "thetalab/simplex.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

namespace thetalab {

const char* to_string(LpStatus status) {
    switch (status) {
        case LpStatus::Optimal: return "OPTIMAL";
        case LpStatus::Unbounded: return "UNBOUNDED";
        case LpStatus::Infeasible: return "INFEASIBLE";
    }
    return "?";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dictionary tableau: row i reads  x_basis[i] = rhs_i - sum_j T(i,j) x_j.
// Column layout: [split structural columns | slacks | optional artificial].
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : t_(rows, cols + 1), basis_(rows), cost_(cols + 1) {}

    std::size_t rows() const { return t_.rows(); }
    std::size_t cols() const { return t_.cols() - 1; }
    Rational& at(std::size_t r, std::size_t c) { return t_(r, c); }
    Rational& rhs(std::size_t r) { return t_(r, cols()); }
    std::size_t& basic(std::size_t r) { return basis_[r]; }
    const Rational& reduced(std::size_t c) const { return cost_[c]; }

    /// Recomputes reduced costs d_j = c_j - c_B . column_j for objective c
    /// (c has one entry per column).
    void price(const std::vector<Rational>& c) {
        for (std::size_t j = 0; j < cols(); ++j) {
            Rational d = c[j];
            for (std::size_t i = 0; i < rows(); ++i) d -= c[basis_[i]] * t_(i, j);
            cost_[j] = d;
        }
        value_ = 0;
        for (std::size_t i = 0; i < rows(); ++i) value_ += c[basis_[i]] * t_(i, cols());
    }

    const Rational& value() const { return value_; }

    void pivot(std::size_t r, std::size_t col) {
        const Rational piv = t_(r, col);
        for (std::size_t j = 0; j <= cols(); ++j) t_(r, j) /= piv;
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == r || t_(i, col) == 0) continue;
            const Rational f = t_(i, col);
            for (std::size_t j = 0; j <= cols(); ++j) t_(i, j) -= f * t_(r, j);
        }
        const Rational f = cost_[col];
        if (f != 0) {
            for (std::size_t j = 0; j < cols(); ++j) cost_[j] -= f * t_(r, j);
            value_ += f * t_(r, cols());
        }
        basis_[r] = col;
        ++pivots_;
    }

    /// Bland's rule iterations until optimal or unbounded. Columns at or
    /// beyond `limit` never enter.
    bool optimize(std::size_t limit) {
        for (;;) {
            std::size_t enter = kNone;
            for (std::size_t j = 0; j < limit; ++j)
                if (cost_[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter == kNone) return true;
            std::size_t leave = kNone;
            Rational best;
            for (std::size_t i = 0; i < rows(); ++i) {
                if (t_(i, enter) <= 0) continue;
                Rational ratio = t_(i, cols()) / t_(i, enter);
                if (leave == kNone || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == kNone) return false;
            pivot(leave, enter);
        }
    }

    std::size_t pivots() const { return pivots_; }

private:
    Matrix<Rational> t_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> cost_;
    Rational value_;
    std::size_t pivots_ = 0;
};

}  // namespace

SimplexResult solve_simplex(const InequalityLp& lp) {
    const std::size_t m = lp.A.rows();
    const std::size_t nvar = lp.A.cols();
    if (lp.b.size() != m || lp.c.size() != nvar || lp.sign.size() != nvar)
        throw std::invalid_argument("simplex: inconsistent problem dimensions");

    // Column map: structural variable j -> (plus column, minus column or kNone).
    std::vector<std::size_t> plus(nvar), minus(nvar, kNone);
    std::size_t ncols = 0;
    for (std::size_t j = 0; j < nvar; ++j) {
        plus[j] = ncols++;
        if (lp.sign[j] == VarSign::Free) minus[j] = ncols++;
    }
    const std::size_t slack0 = ncols;
    const std::size_t artificial = slack0 + m;
    const std::size_t total = artificial + 1;

    Tableau tab(m, total);
    bool need_phase1 = false;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < nvar; ++j) {
            tab.at(i, plus[j]) = lp.A(i, j);
            if (minus[j] != kNone) tab.at(i, minus[j]) = -lp.A(i, j);
        }
        tab.at(i, slack0 + i) = 1;
        tab.at(i, artificial) = -1;
        tab.rhs(i) = lp.b[i];
        tab.basic(i) = slack0 + i;
        if (lp.b[i] < 0) need_phase1 = true;
    }

    SimplexResult result;
    if (need_phase1) {
        // Auxiliary problem: maximize -x_art; one pivot on the most
        // negative rhs makes the dictionary feasible.
        std::vector<Rational> aux(total, Rational(0));
        aux[artificial] = -1;
        tab.price(aux);
        std::size_t r = 0;
        for (std::size_t i = 1; i < m; ++i)
            if (tab.rhs(i) < tab.rhs(r)) r = i;
        tab.pivot(r, artificial);
        if (!tab.optimize(total)) throw std::logic_error("simplex: auxiliary problem unbounded");
        if (tab.value() < 0) {
            result.status = LpStatus::Infeasible;
            result.pivots = tab.pivots();
            return result;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.basic(i) != artificial) continue;
            for (std::size_t j = 0; j < artificial; ++j)
                if (tab.at(i, j) != 0) {
                    tab.pivot(i, j);
                    break;
                }
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        // artificial column is retired: it can no longer enter
        tab.at(i, artificial) = 0;
    }

    std::vector<Rational> cost(total, Rational(0));
    for (std::size_t j = 0; j < nvar; ++j) {
        cost[plus[j]] = lp.c[j];
        if (minus[j] != kNone) cost[minus[j]] = -lp.c[j];
    }
    tab.price(cost);
    if (!tab.optimize(artificial)) {
        result.status = LpStatus::Unbounded;
        result.pivots = tab.pivots();
        return result;
    }

    std::vector<Rational> col_value(total, Rational(0));
    for (std::size_t i = 0; i < m; ++i) col_value[tab.basic(i)] = tab.rhs(i);
    result.status = LpStatus::Optimal;
    result.objective = tab.value();
    result.x.resize(nvar);
    for (std::size_t j = 0; j < nvar; ++j) {
        result.x[j] = col_value[plus[j]];
        if (minus[j] != kNone) result.x[j] -= col_value[minus[j]];
    }
    result.dual.resize(m);
    for (std::size_t i = 0; i < m; ++i) result.dual[i] = -tab.reduced(slack0 + i);
    result.pivots = tab.pivots();
    return result;
}

bool certifies_optimum(const InequalityLp& lp, const SimplexResult& r) {
    if (r.status != LpStatus::Optimal) return false;
    const std::size_t m = lp.A.rows();
    const std::size_t nvar = lp.A.cols();
    if (r.x.size() != nvar || r.dual.size() != m) return false;

    Rational primal = 0;
    for (std::size_t j = 0; j < nvar; ++j) {
        if (lp.sign[j] == VarSign::Nonnegative && r.x[j] < 0) return false;
        primal += lp.c[j] * r.x[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < nvar; ++j) lhs += lp.A(i, j) * r.x[j];
        if (lhs > lp.b[i]) return false;
    }
    Rational dual = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (r.dual[i] < 0) return false;
        dual += lp.b[i] * r.dual[i];
    }
    for (std::size_t j = 0; j < nvar; ++j) {
        Rational col = 0;
        for (std::size_t i = 0; i < m; ++i) col += lp.A(i, j) * r.dual[i];
        if (lp.sign[j] == VarSign::Free ? col != lp.c[j] : col < lp.c[j]) return false;
    }
    return primal == dual && primal == r.objective;
}

}  // namespace thetalab
