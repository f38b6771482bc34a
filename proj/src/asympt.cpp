#include "thetalab/asympt.hpp"

#include "thetalab/scheme.hpp"
#include "thetalab/theta_lp.hpp"

#include <stdexcept>

namespace thetalab {

namespace {

Rational power(long n, int e) {
    if (e >= 0) return Rational(pow_int(BigInt(n), static_cast<unsigned long>(e)));
    return Rational(BigInt(1), pow_int(BigInt(n), static_cast<unsigned long>(-e)));
}

void require_L(int k, std::span<const int> L) {
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (L[i] < 0 || L[i] > k - 1) throw std::invalid_argument("L element outside [0, k-1]");
        if (i > 0 && L[i] <= L[i - 1]) throw std::invalid_argument("L must be strictly increasing");
    }
}

}  // namespace

LeadingTerm leading_constant(int k, std::span<const int> L) {
    if (L.empty()) throw std::invalid_argument("leading constant needs a nonempty L");
    require_L(k, L);
    LeadingTerm out;
    out.exponent = static_cast<int>(L.size());
    out.run_product = full_runs(L).factorial_product();

    BigInt num = out.run_product * binom(k, k - L[0]);
    for (std::size_t i = 1; i < L.size(); ++i) num *= binom(k - L[i - 1] - 1, k - L[i]);
    BigInt den = 1;
    for (int l : L) den *= BigInt(l + 1) * BigInt(k - l);
    out.constant = make_rational(num, den);
    return out;
}

Rational complement_constant_product(int k, std::span<const int> L) {
    require_L(k, L);
    const std::vector<int> comp = complement_set(k, L);
    Rational out = 1;
    if (!L.empty()) out *= leading_constant(k, L).constant;
    if (!comp.empty()) out *= leading_constant(k, comp).constant;
    return out;
}

Rational exact_theta_singleton(long n, int k, int l) {
    if (!(n > k && k > l && l >= 0)) throw std::invalid_argument("need n > k > l >= 0");
    if (n < static_cast<long>(k) + l + 1)
        throw std::domain_error("closed form needs n >= k + l + 1");
    BigInt den = 0;
    for (int j = 0; j <= k - l; ++j) {
        BigInt term = binom(l + 1, j) * binom(k - l - 1, k - l - j) * binom(n - k - l - 1, k - l - j);
        if (j % 2) den += term;
        else den -= term;
    }
    if (den == 0)
        throw std::domain_error("closed form denominator vanishes at n=" + std::to_string(n));
    return 1 + make_rational(binom(k, k - l) * binom(n - k, k - l), den);
}

Rational exact_theta_cosingleton(long n, int k, int l) {
    return Rational(binom(n, k)) / exact_theta_singleton(n, k, l);
}

DefBound def_bound(const LSpec& spec) {
    DefBound out{Rational(1), false};
    for (int l : spec.L()) out.value *= make_rational(BigInt(spec.n() - l), BigInt(spec.k() - l));
    const BigInt threshold = pow_int(BigInt(2), spec.k()) * pow_int(BigInt(spec.k()), 3);
    out.valid = BigInt(spec.n()) > threshold;
    return out;
}

BigInt rcw_bound(const LSpec& spec) { return binom(spec.n(), spec.s()); }

FeasibleVector feasible_solution(const LSpec& spec) {
    const int s = spec.s();
    const Matrix<BigInt> p = build_P_matrix(spec);
    std::vector<BigInt> rhs(s, BigInt(0));
    rhs[s - 1] = -1;
    auto v = solve_exact_system(p, rhs);
    if (!v)
        throw SingularMatrix("P is singular at n=" + std::to_string(spec.n()) +
                             "; retry at a larger n");

    const int k = spec.k();
    FeasibleVector out;
    out.objective = 1;
    out.nonnegative = true;
    for (int i = 0; i < s; ++i) {
        const int l = spec.L()[i];
        out.values.push_back(Rational(binom(k, k - l) * binom(spec.n() - k, k - l)) * (*v)[i]);
        out.objective += out.values.back();
        if (out.values.back() < 0) out.nonnegative = false;
    }

    // The LP orders its variables by increasing relation index k - l,
    // i.e. by decreasing l.
    const LpProblem lp = build_lp(spec, SignMode::Free);
    std::vector<Rational> a(out.values.rbegin(), out.values.rend());
    out.feasible = true;
    for (std::size_t u = 0; u < lp.constraint_count(); ++u) {
        if (constraint_slack(lp, u, a) < 0) {
            out.feasible = false;
            out.violated_row = static_cast<int>(u);
            break;
        }
    }
    return out;
}

Rational DetPCheck::ratio(long n) const { return Rational(det) / (predicted_leading * power(n, exponent)); }

DetPCheck detP_check(const LSpec& spec) {
    const int s = spec.s();
    if (s == 0) throw std::invalid_argument("det P check needs a nonempty L");
    const int k = spec.k();
    DetPCheck out;
    out.det = bareiss_determinant(build_P_matrix(spec));

    BigInt num = 1, den = full_runs(spec.L()).factorial_product();
    int sum_l = 0;
    for (int l : spec.L()) {
        num *= l + 1;
        den *= factorial(k - l - 1);
        sum_l += l;
    }
    if (s % 2) num = -num;
    out.predicted_leading = make_rational(num, den);
    out.exponent = s * k - sum_l - s;
    return out;
}

std::pair<Rational, int> eigenvalue_leading_term(int k, int l, int u) {
    if (l < 0 || l > k - 1 || u < 0 || u > k) throw std::out_of_range("eigenvalue_leading_term: index");
    if (u < l) return {make_rational(binom(k - u, k - l), factorial(k - l)), k - l};
    BigInt num = binom(u, l);
    if ((u - l) % 2) num = -num;
    return {make_rational(num, factorial(k - u)), k - u};
}

Rational scaled_residual(const Rational& value, const LeadingTerm& lead, long n) {
    return (value - lead.constant * power(n, lead.exponent)) / power(n, lead.exponent - 1);
}

}  // namespace thetalab
