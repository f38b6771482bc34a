#include "thetalab/asympt.hpp"
#include "thetalab/scheme.hpp"
#include "thetalab/theta_lp.hpp"

#include <doctest.h>

#include <cmath>

using namespace thetalab;

namespace {

std::vector<int> subset(unsigned mask, int k) {
    std::vector<int> L;
    for (int l = 0; l < k; ++l)
        if (mask >> l & 1) L.push_back(l);
    return L;
}

std::vector<int> interval(int t, int k) {
    std::vector<int> L;
    for (int l = t; l < k; ++l) L.push_back(l);
    return L;
}

}  // namespace

TEST_CASE("leading constants by hand") {
    auto a = leading_constant(3, std::vector<int>{1});
    CHECK(a.constant == make_rational(3, 4));
    CHECK(a.exponent == 1);
    CHECK(leading_constant(2, std::vector<int>{0}).constant == make_rational(1, 2));
    // L = [t, k-1]: theta = C(n-t, k-t), whose top coefficient is 1/(k-t)!.
    for (int k = 1; k <= 9; ++k)
        for (int t = 0; t < k; ++t) {
            auto lt = leading_constant(k, interval(t, k));
            CHECK(lt.constant == make_rational(1, factorial(k - t)));
            CHECK(lt.exponent == k - t);
        }
    CHECK(leading_constant(12, std::vector<int>{1, 3, 4, 7, 8, 9, 11}).run_product == 12);
    CHECK_THROWS(leading_constant(3, std::vector<int>{}));
}

TEST_CASE("leading constant times complement is 1/k!") {
    for (int k = 1; k <= 10; ++k)
        for (unsigned m = 0; m < (1u << k); ++m)
            CHECK(complement_constant_product(k, subset(m, k)) == make_rational(1, factorial(k)));
}

TEST_CASE("singleton closed forms") {
    CHECK(exact_theta_singleton(12, 3, 1) == theta(LSpec::make(12, 3, {1})));
    CHECK(exact_theta_cosingleton(12, 3, 1) == Rational(binom(12, 3)) / exact_theta_singleton(12, 3, 1));
    CHECK(exact_theta_cosingleton(12, 3, 1) == theta(LSpec::make(12, 3, {0, 2})));
    CHECK_THROWS_AS(exact_theta_singleton(4, 3, 1), std::domain_error);
    // Slopes.
    for (int k = 2; k <= 5; ++k)
        for (int l = 0; l < k; ++l) {
            long n = 100000;
            Rational slope = exact_theta_singleton(n, k, l) / n;
            Rational want = Rational(binom(k, k - l)) / ((k - l) * (l + 1));
            CHECK(std::abs(Rational(slope / want - 1).get_d()) < 1e-3);
            Rational co = exact_theta_cosingleton(n, k, l) /
                          Rational(pow_int(BigInt(n), static_cast<unsigned long>(k - 1)));
            Rational cowant = Rational((l + 1) * (k - l)) / Rational(factorial(k) * binom(k, k - l));
            CHECK(std::abs(Rational(co / cowant - 1).get_d()) < 1e-3);
        }
}

TEST_CASE("DEF and RCW bounds") {
    CHECK(def_bound(LSpec::make(100, 3, {1})).value == make_rational(99, 2));
    CHECK_FALSE(def_bound(LSpec::make(100, 3, {1})).valid);
    CHECK(def_bound(LSpec::make(217, 3, {1})).valid);   // 2^3 * 27 = 216
    CHECK_FALSE(def_bound(LSpec::make(216, 3, {1})).valid);
    CHECK(def_bound(LSpec::make(10, 3, {})).value == 1);
    for (long n = 6; n <= 30; n += 4)
        for (int t = 0; t < 3; ++t)
            CHECK(def_bound(LSpec::make(n, 3, interval(t, 3))).value == Rational(binom(n - t, 3 - t)));
    CHECK(rcw_bound(LSpec::make(10, 3, {0, 1})) == 45);
    CHECK(rcw_bound(LSpec::make(10, 3, {})) == 1);
}

TEST_CASE("det P against its leading term") {
    auto c = detP_check(LSpec::make(1000, 4, {1, 2}));
    CHECK(c.exponent == 3);
    CHECK(c.det == bareiss_determinant(build_P_matrix(LSpec::make(1000, 4, {1, 2}))));
    for (auto [k, L] : std::vector<std::pair<int, std::vector<int>>>{
             {3, {1}}, {4, {1, 2}}, {4, {0, 2}}, {5, {0, 1, 3}}, {5, {1, 2, 3}}}) {
        double r3 = detP_check(LSpec::make(1000, k, L)).ratio(1000).get_d();
        double r5 = detP_check(LSpec::make(100000, k, L)).ratio(100000).get_d();
        CHECK(std::abs(r5 - 1) < std::abs(r3 - 1) + 1e-12);
        CHECK(std::abs(r5 - 1) < 0.01);
    }
}

TEST_CASE("explicit feasible vector") {
    for (auto [k, L] : std::vector<std::pair<int, std::vector<int>>>{{3, {1}}, {4, {1, 2}}, {4, {0, 2}}}) {
        for (long n : {40L, 80L, 160L}) {
            LSpec spec = LSpec::make(n, k, L);
            FeasibleVector f = feasible_solution(spec);
            REQUIRE(f.values.size() == L.size());
            Rational sum = 1;
            for (auto& v : f.values) sum += v;
            CHECK(sum == f.objective);
            auto lp = build_lp(spec, SignMode::Free);
            // Row l_s + 1 is tight; the P-rows l_i + 1 (i < s) evaluate to 0.
            std::vector<Rational> a(f.values.rbegin(), f.values.rend());  // variables run by increasing k - l
            for (int l : L) {
                auto u = static_cast<std::size_t>(l + 1);
                Rational want = l == L.back() ? Rational(0) : Rational(-lp.rhs[u]);
                CHECK(constraint_slack(lp, u, a) == want);
            }
            if (f.feasible) CHECK(f.objective <= theta(spec));
        }
    }
}

TEST_CASE("scaled residual") {
    auto lt = leading_constant(3, std::vector<int>{1});
    Rational v = make_rational(3, 4) * 100 + 5;
    CHECK(scaled_residual(v, lt, 100) == 5);
}
