#include "thetalab/scheme.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace thetalab {

namespace {

void require_scheme(long n, int k) {
    if (k < 1 || n < 2L * k)
        throw std::invalid_argument("the Johnson scheme requires n >= 2k >= 2 (got n=" +
                                    std::to_string(n) + ", k=" + std::to_string(k) +
                                    "); complement the ground set for k < n < 2k");
}

void require_index(int k, int idx, const char* what) {
    if (idx < 0 || idx > k)
        throw std::out_of_range(std::string(what) + " = " + std::to_string(idx) +
                                " outside [0, k]");
}

constexpr std::size_t kCacheLimit = 512;

}  // namespace

BigInt eigenvalue_P(long n, int k, int i, int u) {
    require_scheme(n, k);
    require_index(k, i, "relation index i");
    require_index(k, u, "eigenspace index u");
    BigInt sum = 0;
    for (int j = 0; j <= i; ++j) {
        BigInt term = binom(u, j) * binom(k - u, i - j) * binom(n - k - u, i - j);
        if (j % 2) sum -= term;
        else sum += term;
    }
    return sum;
}

BigInt valency(long n, int k, int i) {
    require_scheme(n, k);
    require_index(k, i, "relation index i");
    return binom(k, i) * binom(n - k, i);
}

BigInt multiplicity(long n, int k, int u) {
    require_scheme(n, k);
    require_index(k, u, "eigenspace index u");
    return binom(n, u) - (u > 0 ? binom(n, u - 1) : BigInt(0));
}

SchemeTriple::SchemeTriple(long n, int k) : n_(n), k_(k) {
    require_scheme(n, k);
    P_ = Matrix<BigInt>(k + 1, k + 1);
    for (int i = 0; i <= k; ++i) {
        nu_.push_back(valency(n, k, i));
        mu_.push_back(multiplicity(n, k, i));
        for (int u = 0; u <= k; ++u) P_(i, u) = eigenvalue_P(n, k, i, u);
    }
}

std::shared_ptr<const SchemeTriple> build_scheme(long n, int k) {
    require_scheme(n, k);
    static std::mutex mutex;
    static std::map<std::pair<long, int>, std::shared_ptr<const SchemeTriple>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find({n, k});
        if (it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const SchemeTriple>(n, k);
    std::lock_guard lock(mutex);
    if (cache.size() >= kCacheLimit) cache.clear();
    return cache.try_emplace({n, k}, std::move(built)).first->second;
}

Matrix<BigInt> build_P_matrix(const LSpec& spec) {
    const int s = spec.s();
    if (s == 0) throw std::invalid_argument("P matrix needs a nonempty L");
    const auto& L = spec.L();
    Matrix<BigInt> p(s, s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            p(i, j) = eigenvalue_P(spec.n(), spec.k(), spec.k() - L[j], L[i] + 1);
    return p;
}

}  // namespace thetalab
