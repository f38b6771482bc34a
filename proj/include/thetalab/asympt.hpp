#pragma once

// Closed forms and leading-order terms for theta(G(n, k, L)) as n grows with
// k and L fixed, plus the classical product and binomial bounds on L-systems.

#include "thetalab/combinat.hpp"
#include "thetalab/matrix.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace thetalab {

/// theta(G(n,k,L)) = constant * n^exponent + O(n^(exponent-1)).
struct LeadingTerm {
    Rational constant;
    int exponent = 0;
    /// prod over full runs of (run length)!
    BigInt run_product;
};

/// constant = prod m_i! * C(k, k-l_1) * prod_{i>=2} C(k-l_{i-1}-1, k-l_i)
///            / prod (l_i+1)(k-l_i).
/// Requires nonempty, strictly increasing L within [0, k-1].
LeadingTerm leading_constant(int k, std::span<const int> L);

/// leading_constant(k, L) * leading_constant(k, complement), with the empty
/// set contributing 1. Always 1/k!.
Rational complement_constant_product(int k, std::span<const int> L);

/// 1 + C(k,k-l) C(n-k,k-l) / sum_j (-1)^(j+1) C(l+1,j) C(k-l-1,k-l-j) C(n-k-l-1,k-l-j):
/// the value of theta for L = {l} once n is large enough. Throws
/// std::domain_error when the denominator vanishes or n < k + l + 1.
Rational exact_theta_singleton(long n, int k, int l);

/// C(n,k) / exact_theta_singleton(n,k,l): theta for L = [0,k-1] \ {l}.
Rational exact_theta_cosingleton(long n, int k, int l);

struct DefBound {
    Rational value;
    /// n > 2^k k^3, the range where the product bound is known to hold.
    bool valid = false;
};

/// prod_{l in L} (n-l)/(k-l).
DefBound def_bound(const LSpec& spec);

/// C(n, |L|).
BigInt rcw_bound(const LSpec& spec);

/// Explicit LP point a_{k-l_i} = C(k,k-l_i) C(n-k,k-l_i) v_i with
/// v = P^{-1} (0,...,0,-1)^T. The left sides of rows u = l_i + 1 vanish for
/// i < s and row u = l_s + 1 is tight; whether the other rows hold depends on n.
struct FeasibleVector {
    /// values[i] = a_{k - l_i}, indexed like L.
    std::vector<Rational> values;
    Rational objective;
    bool feasible = false;
    bool nonnegative = false;
    /// First eigenspace row violated, when infeasible.
    std::optional<int> violated_row;
};

/// Throws SingularMatrix when det P = 0 at this n; requires s >= 1, n >= 2k.
FeasibleVector feasible_solution(const LSpec& spec);

struct DetPCheck {
    BigInt det;
    /// Predicted coefficient (-1)^s prod(l_i+1) / (prod m_i! prod (k-l_i-1)!).
    Rational predicted_leading;
    /// s k - sum l_i - s.
    int exponent = 0;

    /// det / (predicted_leading * n^exponent); tends to 1.
    Rational ratio(long n) const;
};

DetPCheck detP_check(const LSpec& spec);

/// Leading term of P_{k-l}^u in n: coefficient and power.
///   u <  l:  C(k-u, k-l) / (k-l)!        * n^(k-l)
///   u >= l:  (-1)^(u-l) C(u,l) / (k-u)!  * n^(k-u)
std::pair<Rational, int> eigenvalue_leading_term(int k, int l, int u);

/// (value - constant n^s) / n^(s-1).
Rational scaled_residual(const Rational& value, const LeadingTerm& lead, long n);

}  // namespace thetalab
