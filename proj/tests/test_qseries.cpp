#include "oracles.hpp"
#include "rrg/errors.hpp"
#include "rrg/qseries.hpp"

#include <doctest.h>

#include <limits>
#include <random>

using namespace rrg;

namespace {
TruncatedSeries S(std::vector<std::int64_t> c) { return TruncatedSeries::from_coefficients(std::move(c)); }
} // namespace

TEST_CASE("mul examples") {
    CHECK(mul(S({1, 1, 0}), S({1, -1, 0})) == S({1, 0, -1}));
    const auto s = S({3, -1, 4, 1, -5});
    CHECK(mul(s, TruncatedSeries::one(4)) == s);
    CHECK(mul(S({1, -1, 0, 0, 0, 0}), S({1, 1, 1, 1, 1, 1})) == TruncatedSeries::one(5));
    CHECK_THROWS_AS(mul(S({1, 1}), S({1, 1, 1})), ParameterError);
}

TEST_CASE("mul is commutative and associative") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        const int N = 1 + trial % 12;
        auto rnd = [&] {
            std::vector<std::int64_t> c;
            for (int i = 0; i <= N; ++i) c.push_back(coeff(rng));
            return S(c);
        };
        const auto x = rnd(), y = rnd(), z = rnd();
        REQUIRE(mul(x, y) == mul(y, x));
        REQUIRE(mul(mul(x, y), z) == mul(x, mul(y, z)));
    }
}

TEST_CASE("overflow is detected, never wrapped") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
    CHECK_THROWS_AS(mul(S({big, 0}), S({2, 0})), OverflowError);
    CHECK_THROWS_AS(add(S({big}), S({big})), OverflowError);
    TruncatedSeries t = S({std::numeric_limits<std::int64_t>::max()});
    CHECK_THROWS_AS(t.add_term(0, 1), OverflowError);
}

TEST_CASE("invert_unit examples") {
    CHECK(invert_unit(S({1, -1, 0, 0})) == S({1, 1, 1, 1}));
    CHECK(invert_unit(TruncatedSeries::one(5)) == TruncatedSeries::one(5));
    CHECK(invert_unit(poch_inf(PochSign::plus, 1, 1, 6)) == S({1, 1, 2, 3, 5, 7, 11}));
    const auto neg = S({-1, 2, 0, 3});
    CHECK(mul(neg, invert_unit(neg)) == TruncatedSeries::one(3));
    CHECK_THROWS_AS(invert_unit(S({2, 1})), ParameterError);
    CHECK_THROWS_AS(invert_unit(S({0, 1})), ParameterError);
}

TEST_CASE("invert_unit of (q;q) gives the partition numbers") {
    const auto p = invert_unit(poch_inf(PochSign::plus, 1, 1, 25));
    for (int n = 0; n <= 25; ++n) CHECK(p[n] == static_cast<std::int64_t>(oracle::partitions(n).size()));
}

TEST_CASE("poch_inf examples") {
    CHECK(poch_inf(PochSign::plus, 1, 1, 3) == S({1, -1, -1, 0}));
    CHECK(poch_inf(PochSign::minus, 1, 2, 4) == S({1, 1, 0, 1, 1}));
    CHECK(poch_inf(PochSign::plus, 5, 4, 4) == TruncatedSeries::one(4));
    CHECK_THROWS_AS(poch_inf(PochSign::plus, 0, 1, 4), ParameterError);
    CHECK_THROWS_AS(poch_inf(PochSign::plus, 1, 0, 4), ParameterError);
}

TEST_CASE("poch_inf matches signed distinct-partition counts") {
    for (bool plus : {true, false})
        for (int a = 1; a <= 4; ++a)
            for (int m = 1; m <= 5; ++m)
                CHECK(poch_inf(plus ? PochSign::plus : PochSign::minus, a, m, 18).coefficients() ==
                      oracle::poch(plus, a, m, 18));
}

TEST_CASE("Euler's pentagonal number theorem") {
    const int N = 80;
    std::vector<std::int64_t> pent(N + 1, 0);
    for (long long n = -10; n <= 10; ++n) {
        const long long e = n * (3 * n - 1) / 2;
        if (e <= N) pent[static_cast<std::size_t>(e)] += n % 2 == 0 ? 1 : -1;
    }
    CHECK(poch_inf(PochSign::plus, 1, 1, N).coefficients() == pent);
}

TEST_CASE("theta_sum examples") {
    CHECK(theta_sum({7, 1}, 17) == S({1, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0}));
    CHECK(theta_sum({7, 1}, 17)[17] == 0);
    CHECK(theta_sum({7, 1}, 0) == TruncatedSeries::one(0));
    CHECK_THROWS_AS(theta_sum({7, 2}, 10), ParameterError);
    CHECK_THROWS_AS(theta_sum({0, 2}, 10), ParameterError);
}

TEST_CASE("theta_sum matches the direct bilateral sum") {
    for (int alpha = 1; alpha <= 12; ++alpha)
        for (int beta = -alpha + 2; beta < alpha; ++beta) {
            if ((alpha + beta) % 2 != 0) continue;
            CHECK(theta_sum({alpha, beta}, 40).coefficients() == oracle::theta(alpha, beta, 40));
        }
}

TEST_CASE("Jacobi triple product instances") {
    for (int k = 2; k <= 6; ++k)
        for (int a = 1; a <= k; ++a) {
            const int m = 2 * k + 1, N = 60;
            const auto prod = mul(mul(poch_inf(PochSign::plus, m, m, N), poch_inf(PochSign::plus, a, m, N)),
                                  poch_inf(PochSign::plus, m - a, m, N));
            CHECK(theta_sum({m, 2 * (k - a) + 1}, N) == prod);
        }
}

TEST_CASE("restricted_gf examples") {
    CHECK(restricted_gf({0, 2, 3}, 5, 4) == S({1, 1, 1, 1, 2}));
    CHECK(restricted_gf({}, 1, 0) == TruncatedSeries::one(0));
    CHECK(restricted_gf({0, 3, 4}, 7, 5)[5] == 4);
    CHECK(restricted_gf({0, 3, 4}, 7, 5)[5] == count_family(Family::A, 3, 3, 5));
    CHECK_THROWS_AS(restricted_gf({}, 0, 3), ParameterError);
}

TEST_CASE("multisum_rrg examples") {
    CHECK(multisum_rrg(2, 2, 4) == S({1, 1, 1, 1, 2}));
    const auto m21 = multisum_rrg(2, 1, 2);
    CHECK(m21[0] == 1);
    CHECK(m21[1] == 0);
    for (int k = 2; k <= 5; ++k)
        for (int a = 1; a <= k; ++a) CHECK(multisum_rrg(k, a, 0) == TruncatedSeries::one(0));
    CHECK_THROWS_AS(multisum_rrg(1, 1, 3), ParameterError);
}

TEST_CASE("multisum equals the A and B families (brute-force counts)") {
    for (int k = 2; k <= 4; ++k)
        for (int a = 1; a <= k; ++a) {
            const auto ms = multisum_rrg(k, a, 16);
            CHECK(ms.coefficients() == oracle::family_counts('A', k, a, 16));
            CHECK(ms.coefficients() == oracle::family_counts('B', k, a, 16));
        }
}

TEST_CASE("family_gf examples") {
    CHECK(family_gf(Family::B, 2, 2, 5) == S({1, 1, 1, 1, 2, 2}));
    // W_{3,3}: (1,1) and (2,2) are admissible, so the q^2 coefficient is 1.
    CHECK(family_gf(Family::W, 3, 3, 5).coefficients() == oracle::family_counts('W', 3, 3, 5));
    CHECK(family_gf(Family::W, 3, 3, 5) == S({1, 1, 1, 1, 2, 2}));
    for (auto fam : {Family::A, Family::B, Family::W, Family::Wbar})
        CHECK(family_gf(fam, 4, 2, 0) == TruncatedSeries::one(0));
}

TEST_CASE("family_gf coefficients equal count_family") {
    for (auto fam : {Family::A, Family::B, Family::W, Family::Wbar})
        for (int k = 2; k <= 4; ++k)
            for (int a = 1; a <= k; ++a) {
                const auto s = family_gf(fam, k, a, 14);
                for (int n = 0; n <= 14; ++n) REQUIRE(s[n] == count_family(fam, k, a, n));
            }
}

TEST_CASE("product relations between the parity factors") {
    const int N = 60;
    const auto q_q = poch_inf(PochSign::plus, 1, 1, N);
    const auto q2_q2 = poch_inf(PochSign::plus, 2, 2, N);
    const auto q2_q4 = poch_inf(PochSign::plus, 2, 4, N);
    const auto mq_q2 = poch_inf(PochSign::minus, 1, 2, N);
    const auto mq2_q2 = poch_inf(PochSign::minus, 2, 2, N);
    CHECK(mul(mq_q2, q_q) == mul(q2_q4, q2_q2));
    CHECK(mul(q2_q4, invert_unit(q_q)) == mul(mq_q2, invert_unit(q2_q2)));
    CHECK(mul(mul(mq_q2, q_q), mq2_q2) == q2_q2);
}

TEST_CASE("series text form") {
    CHECK(to_string(S({1, -1, 0, 2})) == "1 - q + 2q^3 + O(q^4)");
    CHECK(first_difference(S({1, 2, 3}), S({1, 2, 4})) == 2);
    CHECK(first_difference(S({1, 2, 3}), S({1, 2, 3})) == -1);
}
