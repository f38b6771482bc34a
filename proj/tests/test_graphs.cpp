#include "thetalab/graphs.hpp"
#include "thetalab/theta_lp.hpp"

#include <doctest.h>

using namespace thetalab;

namespace {

std::vector<int> interval(int t, int k) {
    std::vector<int> L;
    for (int l = t; l < k; ++l) L.push_back(l);
    return L;
}

// Largest independent set by enumerating all vertex subsets (N <= 28).
std::size_t alpha_exhaustive(const JohnsonGraph& g) {
    std::size_t N = g.size(), best = 0;
    std::vector<unsigned> adj(N, 0);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            if (g.adjacent(a, b)) adj[a] |= 1u << b;
    for (unsigned long mask = 0; mask < (1ul << N); ++mask) {
        bool ok = true;
        for (std::size_t v = 0; v < N && ok; ++v)
            if (mask >> v & 1) ok = (adj[v] & mask) == 0;
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountl(mask)));
    }
    return best;
}

bool independent(const JohnsonGraph& g, const std::vector<std::size_t>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.adjacent(set[i], set[j])) return false;
    return true;
}

}  // namespace

TEST_CASE("vertex order is colex") {
    auto g = build_graph(LSpec::make(4, 2, {}), 100);
    std::vector<std::vector<int>> want{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
    CHECK(g.vertices == want);
    CHECK(dump_adjacency(g).substr(0, 13) == "{1,2}: 1 2 3 ");
}

TEST_CASE("degrees") {
    CHECK(degree_formula(LSpec::make(5, 2, {0})) == 6);
    CHECK(degree_formula(LSpec::make(5, 2, {1})) == 3);
    for (long n = 4; n <= 10; ++n)
        for (int k = 1; k <= 3 && 2 * k <= n; ++k)
            for (unsigned m = 0; m < (1u << k); ++m) {
                std::vector<int> L;
                for (int l = 0; l < k; ++l)
                    if (m >> l & 1) L.push_back(l);
                LSpec spec = LSpec::make(n, k, L);
                auto g = build_graph(spec);
                auto gc = build_graph(complement_L(spec));
                BigInt d = degree_formula(spec);
                for (std::size_t v = 0; v < g.size(); ++v) {
                    CHECK(BigInt(static_cast<unsigned long>(g.degree(v))) == d);
                    CHECK_FALSE(g.adjacent(v, v));
                    for (std::size_t w = 0; w < g.size(); ++w)
                        if (w != v) CHECK(g.adjacent(v, w) != gc.adjacent(v, w));
                }
            }
}

TEST_CASE("edgeless and capped graphs") {
    auto g = build_graph(LSpec::make(7, 3, {0, 1, 2}));
    for (std::size_t v = 0; v < g.size(); ++v) CHECK(g.degree(v) == 0);
    auto a = alpha_bruteforce(g);
    CHECK(a.size == 35);
    CHECK(a.exact);
    CHECK_THROWS_AS(build_graph(LSpec::make(20, 5, {1}), 5000), ResourceCapExceeded);
    CHECK_THROWS_AS(sandwich_check(LSpec::make(20, 5, {1})), ResourceCapExceeded);
}

TEST_CASE("alpha against exhaustive search") {
    // Petersen
    auto p = build_graph(LSpec::make(5, 2, {1}));
    CHECK(alpha_exhaustive(p) == 4);
    CHECK(alpha_bruteforce(p).size == 4);
    for (long n = 4; n <= 8; ++n) {
        auto g = build_graph(LSpec::make(n, 2, {0}));
        CHECK(alpha_exhaustive(g) == static_cast<std::size_t>(n / 2));
        auto a = alpha_bruteforce(g);
        CHECK(a.size == static_cast<std::size_t>(n / 2));
        CHECK(a.exact);
        CHECK(independent(g, a.witness));
    }
    for (long n = 4; n <= 7; ++n)
        for (std::vector<int> L : {std::vector<int>{1}, std::vector<int>{0}, std::vector<int>{}}) {
            auto g = build_graph(LSpec::make(n, 2, L));
            CHECK(alpha_bruteforce(g).size == alpha_exhaustive(g));
        }
    auto g6 = build_graph(LSpec::make(6, 3, {1}));  // 20 vertices
    CHECK(alpha_bruteforce(g6).size == alpha_exhaustive(g6));
    auto g7 = build_graph(LSpec::make(6, 3, {0, 2}));
    CHECK(alpha_bruteforce(g7).size == alpha_exhaustive(g7));
}

TEST_CASE("Wilson range: alpha of [t, k-1] is C(n-t, k-t)") {
    for (int k = 2; k <= 4; ++k)
        for (int t = 1; t < k; ++t)
            for (long n = std::max<long>(2 * k, (t + 1) * (k - t + 1)); n <= 11; ++n) {
                if (binom(n, k) > 400) continue;
                auto g = build_graph(LSpec::make(n, k, interval(t, k)));
                auto a = alpha_bruteforce(g);
                CHECK(a.exact);
                CHECK(a.size == binom(n - t, k - t).get_ui());
                CHECK(independent(g, a.witness));
            }
}

TEST_CASE("sandwich") {
    auto s = sandwich_check(LSpec::make(5, 2, {1}));
    CHECK(s.alpha.size == 4);
    CHECK(s.theta == 4);
    auto w = sandwich_check(LSpec::make(9, 3, {1, 2}));
    CHECK(w.alpha.size == 28);
    CHECK(w.theta == 28);
    auto z = sandwich_check(LSpec::make(6, 3, {0}));
    CHECK(Rational(static_cast<unsigned long>(z.alpha.size)) <= z.sigma);
    CHECK(z.sigma <= z.theta);
}

TEST_CASE("budget exhaustion gives a flagged lower bound") {
    auto g = build_graph(LSpec::make(12, 4, {0, 1, 2}));
    auto a = alpha_bruteforce(g, 1000);
    CHECK_FALSE(a.exact);
    CHECK(a.size > 0);
    CHECK(a.witness.size() == a.size);
    CHECK(independent(g, a.witness));
}

TEST_CASE("gap family") {
    CHECK(prime_power(2) == std::make_pair(2, 1));
    CHECK(prime_power(9) == std::make_pair(3, 2));
    CHECK(prime_power(8) == std::make_pair(2, 3));
    CHECK_FALSE(prime_power(6).has_value());
    CHECK_FALSE(prime_power(1).has_value());
    CHECK(gap_L(2) == std::vector<int>{0, 2});
    CHECK(gap_L(3) == std::vector<int>{0, 1, 3, 4, 6, 7});
    CHECK(gap_L(4).size() == 12);
    CHECK(gap_L(5).size() == 20);
    // Predicate and L agree on a tiny explicit instance.
    auto g = build_graph(LSpec::make(7, 3, gap_L(2)));
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
            if (a != b)
                CHECK(g.adjacent(a, b) == gap_adjacent(2, intersection_size(g.vertices[a], g.vertices[b])));
    CHECK_THROWS_AS(gap_report(6, 50), std::invalid_argument);
    CHECK_THROWS_AS(gap_report(2, 5), std::invalid_argument);

    auto r = gap_report(2, 50);
    CHECK(r.k == 3);
    CHECK(r.minrank_bound == 50);
    CHECK(r.target_exponent == make_rational(1, 3));
    CHECK_FALSE(r.alpha.has_value());
    auto small = gap_report(2, 12);
    REQUIRE(small.alpha.has_value());
    CHECK(Rational(static_cast<unsigned long>(*small.alpha)) <= small.theta);
    auto r3 = gap_report(3, 20);
    CHECK(r3.k == 8);
    CHECK(r3.minrank_bound == binom(20, 2));
    CHECK(r3.target_exponent == make_rational(1, 2));
}
