#include "thetalab/matrix.hpp"

namespace thetalab {

namespace {

// Bareiss elimination over the first `n` columns of m (m may carry extra
// columns to the right). Returns the sign of the row permutation, or 0 if a
// zero pivot column makes the leading n x n block singular.
int bareiss_eliminate(Matrix<BigInt>& m, std::size_t n) {
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            m.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < m.cols(); ++j) {
                BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = std::move(v);
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign;
}

}  // namespace

BigInt bareiss_determinant(Matrix<BigInt> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    int sign = bareiss_eliminate(m, n);
    if (sign == 0) return 0;
    return sign * m(n - 1, n - 1);
}

std::optional<std::vector<Rational>> solve_exact_system(const Matrix<BigInt>& a,
                                                        std::span<const BigInt> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
    Matrix<BigInt> m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n) = b[i];
    }
    if (bareiss_eliminate(m, n) == 0) return std::nullopt;

    std::vector<Rational> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational acc(m(ii, n));
        for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m(ii, j)) * x[j];
        x[ii] = acc / Rational(m(ii, ii));
    }
    return x;
}

}  // namespace thetalab
