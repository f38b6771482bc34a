#pragma once

// Vertex enumeration for max c.x s.t. A x <= b in few variables: every
// basic solution of every d-subset of rows, kept if feasible. Independent of
// the simplex code; exponential, for test sizes only.

#include "thetalab/combinat.hpp"

#include <optional>
#include <vector>

namespace oracle {

using thetalab::Rational;
using Rows = std::vector<std::vector<Rational>>;

/// Gauss-Jordan on a copy; nullopt if singular.
inline std::optional<std::vector<Rational>> solve_square(Rows a, std::vector<Rational> b) {
    std::size_t d = b.size();
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        while (p < d && a[p][c] == 0) ++p;
        if (p == d) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < d; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < d; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t r = 0; r < d; ++r) b[r] /= a[r][r];
    return b;
}

/// Max over vertices; nullopt if there is no vertex. The caller must know
/// the LP is bounded and the feasible set has a vertex.
inline std::optional<Rational> best_vertex(const Rows& A, const std::vector<Rational>& b,
                                           const std::vector<Rational>& c) {
    std::size_t m = A.size(), d = c.size();
    if (d == 0) return Rational(0);
    std::optional<Rational> best;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        Rows sub;
        std::vector<Rational> rhs;
        for (auto i : idx) {
            sub.push_back(A[i]);
            rhs.push_back(b[i]);
        }
        if (auto x = solve_square(sub, rhs)) {
            bool ok = true;
            for (std::size_t r = 0; r < m && ok; ++r) {
                Rational lhs = 0;
                for (std::size_t j = 0; j < d; ++j) lhs += A[r][j] * (*x)[j];
                ok = lhs <= b[r];
            }
            if (ok) {
                Rational val = 0;
                for (std::size_t j = 0; j < d; ++j) val += c[j] * (*x)[j];
                if (!best || val > *best) best = val;
            }
        }
        // next combination
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == m - d + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return best;
}

}  // namespace oracle
