#pragma once

// Explicit generalized Johnson graphs, exact independence numbers at desk
// scale, and the Lovasz-number / minrank gap family G_q(n, q^2 - 1).

#include "thetalab/asympt.hpp"
#include "thetalab/bitset.hpp"
#include "thetalab/combinat.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetalab {

inline constexpr std::size_t kDefaultVertexCap = 5000;
inline constexpr std::uint64_t kDefaultNodeBudget = 20'000'000;

class ResourceCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IdentityViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vertices are the k-subsets of {0, ..., n-1} in colex order; A ~ B iff
/// |A n B| is not in L.
struct JohnsonGraph {
    LSpec spec;
    std::vector<std::vector<int>> vertices;
    std::vector<Bitset> adjacency;

    std::size_t size() const { return vertices.size(); }
    std::size_t degree(std::size_t v) const { return adjacency[v].count(); }
    bool adjacent(std::size_t a, std::size_t b) const { return adjacency[a].test(b); }
};

/// Throws ResourceCapExceeded when C(n,k) > vertex_cap.
JohnsonGraph build_graph(const LSpec& spec, std::size_t vertex_cap = kDefaultVertexCap);

/// sum_{j in [0,k-1] \ L} C(k,j) C(n-k,k-j): the common vertex degree.
BigInt degree_formula(const LSpec& spec);

/// |A n B| for sorted sets.
int intersection_size(const std::vector<int>& a, const std::vector<int>& b);

struct AlphaResult {
    std::size_t size = 0;
    /// false when the node budget ran out; size is then a lower bound.
    bool exact = true;
    std::uint64_t nodes = 0;
    /// Vertex indices of an independent set of `size` vertices, increasing.
    std::vector<std::size_t> witness;
};

/// Maximum independent set by branch and bound on bitsets with greedy
/// clique-cover (colouring) bounds. The symmetric group on [n] acts
/// transitively on ordered pairs of k-sets with a given intersection, so the
/// search fixes the pair of the optimum with the largest intersection j and
/// solves one residual problem per j in L. Deterministic.
AlphaResult alpha_bruteforce(const JohnsonGraph& graph,
                             std::uint64_t node_budget = kDefaultNodeBudget);

struct SandwichReport {
    AlphaResult alpha;
    Rational sigma;
    Rational theta;
};

/// alpha <= sigma <= theta. Throws IdentityViolation on failure and
/// ResourceCapExceeded above the vertex cap.
SandwichReport sandwich_check(const LSpec& spec, std::size_t vertex_cap = kDefaultVertexCap,
                              std::uint64_t node_budget = kDefaultNodeBudget);

/// (p, m) with q = p^m, or nullopt.
std::optional<std::pair<int, int>> prime_power(int q);

/// G_q(n, k): k = q^2 - 1 and A ~ B iff |A n B| = -1 (mod q).
bool gap_adjacent(int q, int intersection);

/// The non-edge intersection sizes of G_q(n, k), derived from gap_adjacent.
/// Throws std::logic_error unless its size is q^2 - q.
std::vector<int> gap_L(int q);

struct GapReport {
    int q = 0;
    int p = 0;
    int k = 0;
    long n = 0;
    std::vector<int> L;
    BigInt vertex_count;  ///< N = C(n, k)
    Rational theta;
    Rational sigma;
    BigInt minrank_bound;  ///< C(n, q-1)
    std::optional<std::size_t> alpha;
    bool alpha_exact = false;
    DefBound def;
    BigInt rcw;
    /// log(theta / minrank_bound) / log N.
    double exponent_estimate = 0;
    /// 1 - 2/(q+1).
    Rational target_exponent;
};

/// Throws std::invalid_argument for q not a prime power or n < 2(q^2-1).
GapReport gap_report(int q, long n, std::size_t vertex_cap = kDefaultVertexCap,
                     std::uint64_t node_budget = kDefaultNodeBudget);

/// One line per vertex: "{1,2}: 5 7 9" with 1-based elements of [n]
/// followed by the 0-based indices of its neighbours.
std::string dump_adjacency(const JohnsonGraph& graph);

}  // namespace thetalab
