#pragma once

// Eigenvalue data of the Johnson scheme on the k-subsets of [n].

#include "thetalab/combinat.hpp"
#include "thetalab/matrix.hpp"

#include <memory>
#include <vector>

namespace thetalab {

/// P_i^u = sum_j (-1)^j C(u,j) C(k-u,i-j) C(n-k-u,i-j), the eigenvalue of
/// the distance-i relation on the u-th eigenspace. Requires 0 <= i,u <= k
/// and n >= 2k; throws std::out_of_range / std::invalid_argument.
BigInt eigenvalue_P(long n, int k, int i, int u);

/// nu_i = C(k,i) C(n-k,i), the valency of relation i (equals P_i^0).
BigInt valency(long n, int k, int i);

/// mu_u = C(n,u) - C(n,u-1), the dimension of eigenspace u.
BigInt multiplicity(long n, int k, int u);

class SchemeTriple {
public:
    SchemeTriple(long n, int k);

    long n() const { return n_; }
    int k() const { return k_; }
    const BigInt& nu(int i) const { return nu_.at(i); }
    const BigInt& mu(int u) const { return mu_.at(u); }
    /// P_i^u.
    const BigInt& P(int i, int u) const { return P_(i, u); }

private:
    long n_;
    int k_;
    std::vector<BigInt> nu_;
    std::vector<BigInt> mu_;
    Matrix<BigInt> P_;
};

/// Immutable, shared tables for (n, k); repeated calls hit a process-wide
/// cache. Throws std::invalid_argument unless n >= 2k >= 2.
std::shared_ptr<const SchemeTriple> build_scheme(long n, int k);

/// The s x s matrix with entry (i, j) = P_{k - l_j}^{l_i + 1}. Requires s >= 1
/// and n >= 2k.
Matrix<BigInt> build_P_matrix(const LSpec& spec);

}  // namespace thetalab
