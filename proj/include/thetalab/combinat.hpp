#pragma once

// Exact integers and rationals, binomial coefficients, and the set-system
// parameters (n, k, L) shared by every other module.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thetalab {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::invalid_argument if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den = 1);

/// Always "p/q", including "28/1" and "0/1"; parse_rational inverts it exactly.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Correctly rounded decimal with `significant` digits (round half away
/// from zero). Fixed notation for moderate magnitudes, otherwise d.ddde+XX.
std::string to_decimal(const Rational& value, int significant = 12);

/// Natural logarithm of a positive rational, accurate for values far outside
/// the double range. Throws std::domain_error for value <= 0.
double log_of(const Rational& value);

/// C(n, r); zero for r < 0 or r > n. Throws std::invalid_argument for n < 0.
BigInt binom(long n, long r);

/// n! for n >= 0.
BigInt factorial(long n);

BigInt pow_int(const BigInt& base, unsigned long exponent);

/// The problem instance: ground set size n, set size k, allowed
/// intersection sizes L (strictly increasing, within [0, k-1]).
class LSpec {
public:
    /// Validates n > k >= 1 and 0 <= l <= k-1; sorts and deduplicates L.
    /// Throws std::invalid_argument.
    static LSpec make(long n, int k, std::vector<int> L);

    long n() const { return n_; }
    int k() const { return k_; }
    const std::vector<int>& L() const { return L_; }
    int s() const { return static_cast<int>(L_.size()); }

    /// Same (k, L) at a different ground-set size.
    LSpec with_n(long n) const { return make(n, k_, L_); }

    bool operator==(const LSpec&) const = default;

private:
    LSpec(long n, int k, std::vector<int> L) : n_(n), k_(k), L_(std::move(L)) {}

    long n_;
    int k_;
    std::vector<int> L_;
};

struct Run {
    int start;
    int length;

    bool operator==(const Run&) const = default;
};

/// Maximal blocks of consecutive integers of L, in increasing order.
struct RunDecomposition {
    std::vector<Run> runs;

    std::size_t count() const { return runs.size(); }
    /// Product of length! over all runs (1 for no runs).
    BigInt factorial_product() const;
};

/// Throws std::invalid_argument unless L is strictly increasing.
RunDecomposition full_runs(std::span<const int> L);

/// [0, k-1] \ L in increasing order.
std::vector<int> complement_set(int k, std::span<const int> L);

LSpec complement_L(const LSpec& spec);

/// "1,3,4"; empty string for the empty set.
std::string join_list(std::span<const int> values);

}  // namespace thetalab
