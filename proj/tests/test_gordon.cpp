#include "oracles.hpp"
#include "rrg/errors.hpp"
#include "rrg/gordon.hpp"

#include <doctest.h>

#include <map>

using namespace rrg;

namespace {

std::vector<PartitionPair> oracle_pairs(int k, int a, int w) {
    std::vector<PartitionPair> out;
    for (int wa = 0; wa <= w; ++wa)
        for (auto &A : oracle::partitions(wa)) {
            if (!oracle::distinct(A)) continue;
            for (auto &B : oracle::partitions(w - wa))
                if (oracle::gordon(B, k, a)) out.push_back({A, B});
        }
    return out;
}

} // namespace

TEST_CASE("classify examples") {
    CHECK(classify({{6}, {5, 5, 1}}, 3, 3) == ClassLabel::u(1, 2));
    CHECK(classify({{6, 1}, {5, 5}}, 3, 3) == ClassLabel::u(1, 1));
    CHECK(classify({{}, {5, 4, 1}}, 3, 3) == ClassLabel::move_b_to_a());
    CHECK(classify({{7}, {5, 5, 1}}, 3, 3) == ClassLabel::move_a_to_b());
    CHECK(classify({{}, {}}, 3, 3) == ClassLabel::fixed(0, 0));
}

TEST_CASE("classify rejects configurations outside the ground set") {
    CHECK_THROWS_AS(classify({{3, 3}, {}}, 3, 3), MembershipError);
    CHECK_THROWS_AS(classify({{}, {2, 2, 1}}, 3, 3), MembershipError);
    CHECK_THROWS_AS(classify({{}, {}}, 1, 1), ParameterError);
}

TEST_CASE("step1_move examples") {
    CHECK(step1_move({{}, {5, 4, 1}}, 3, 3) == PartitionPair{{5}, {4, 1}});
    CHECK(step1_move({{7}, {5, 5, 1}}, 3, 3) == PartitionPair{{}, {7, 5, 5, 1}});
    for (PartitionPair p : {PartitionPair{{}, {5, 4, 1}}, PartitionPair{{7}, {5, 5, 1}}})
        CHECK(step1_move(step1_move(p, 3, 3), 3, 3) == p);
    CHECK_THROWS_AS(step1_move({{6, 1}, {5, 5}}, 3, 3), ParameterError);
}

TEST_CASE("compute_params examples") {
    auto cp = compute_params({{6}, {5, 5, 1}}, 3, 3);
    CHECK(cp.p == 6);
    CHECK(cp.q == 1);
    CHECK(cp.r == 1);
    CHECK(cp.n == 1);
    cp = compute_params({{4, 3, 2, 1}, {3, 3, 1}}, 3, 3);
    CHECK(cp.p == 1);
    CHECK(cp.q == 4);
    CHECK(cp.r == 1);
    CHECK(cp.n == 1);
    cp = compute_params({{6, 1}, {5, 5}}, 3, 3);
    CHECK(cp.p == 1);
    CHECK(cp.q == 1);
    CHECK(cp.r == 1);
    CHECK(cp.n == 1);
    CHECK_THROWS_AS(compute_params({{7}, {5, 5, 1}}, 3, 3), ParameterError);
}

TEST_CASE("beta rows of the worked example") {
    const auto fwd = apply_map({{6, 1}, {5, 5}}, 3, 3);
    CHECK_FALSE(fwd.fixed);
    CHECK(fwd.partner == PartitionPair{{6}, {6, 5}});
    CHECK(fwd.step == "beta");
    const auto back = apply_map({{6}, {6, 5}}, 3, 3);
    CHECK(back.partner == PartitionPair{{6, 1}, {5, 5}});
    CHECK(back.step == "beta^-1");
    const auto row = apply_map({{4, 3, 2, 1}, {3, 3, 1}}, 3, 3);
    CHECK(row.partner == PartitionPair{{4, 3, 2}, {4, 3, 1}});
    CHECK(apply_map({{4, 3, 2}, {4, 3, 1}}, 3, 3).partner == PartitionPair{{4, 3, 2, 1}, {3, 3, 1}});
}

TEST_CASE("alpha rows of the worked example are annotated, not binding") {
    // The alpha formula sends (6 | 5,5,1) to (5,1 | 5,5,1); the printed table
    // shows (5 | 5,4,3), which is the image of a different configuration.
    const auto out = apply_map({{6}, {5, 5, 1}}, 3, 3);
    CHECK(out.label == ClassLabel::u(1, 2));
    CHECK(out.step == "alpha");
    CHECK(out.partner == PartitionPair{{5, 1}, {5, 5, 1}});
    CHECK(involute_gordon(out.partner, 3, 3).partner == PartitionPair{{6}, {5, 5, 1}});
    CHECK(classify({{5}, {5, 4, 3}}, 3, 3).kind == ClassLabel::Kind::U);
}

TEST_CASE("fixed points are recognised by apply_map") {
    const auto f1 = apply_map({{2}, {1, 1}}, 3, 3);
    CHECK(f1.fixed);
    CHECK(f1.family == 1);
    CHECK(f1.n == 1);
    const auto f2 = apply_map({{1}, {1, 1}}, 3, 3);
    CHECK(f2.fixed);
    CHECK(f2.family == 2);
    CHECK(f2.n == 1);
    const auto empty = involute_gordon({{}, {}}, 3, 3);
    CHECK(empty.fixed);
    CHECK(empty.n == 0);
    CHECK_THROWS_AS(apply_map({{}, {5, 4, 1}}, 3, 3), ParameterError);
}

TEST_CASE("gordon_fixed_point examples") {
    CHECK(gordon_fixed_point(1, 1, 3, 3) == PartitionPair{{2}, {1, 1}});
    CHECK(gordon_fixed_point(1, 1, 3, 3).weight() == 4);
    CHECK(gordon_fixed_point(2, 1, 3, 3) == PartitionPair{{1}, {1, 1}});
    CHECK(gordon_fixed_point(2, 1, 3, 3).weight() == 3);
    CHECK(gordon_fixed_point(1, 1, 2, 1) == PartitionPair{{2}, {2}});
    CHECK(gordon_fixed_point(1, 1, 2, 1).weight() == 4);
    CHECK_THROWS_AS(gordon_fixed_point(1, 0, 3, 3), ParameterError);
    CHECK_THROWS_AS(gordon_fixed_point(3, 1, 3, 3), ParameterError);
}

TEST_CASE("fixed-point templates are members with the theta weights") {
    for (int k = 2; k <= 6; ++k)
        for (int a = 1; a <= k; ++a)
            for (int n = 1; n <= 6; ++n)
                for (int family : {1, 2}) {
                    const auto fp = gordon_fixed_point(family, n, k, a);
                    REQUIRE(in_gordon_ground_set(fp, k, a));
                    REQUIRE(static_cast<int>(fp.A.size()) == n);
                    const int twice = (2 * k + 1) * n * n + (family == 1 ? 1 : -1) * (2 * (k - a) + 1) * n;
                    REQUIRE(2 * fp.weight() == twice);
                    const auto out = involute_gordon(fp, k, a);
                    REQUIRE(out.fixed);
                    REQUIRE(out.family == family);
                    REQUIRE(out.n == n);
                }
}

TEST_CASE("gordon_fixed_gf examples") {
    const auto s = gordon_fixed_gf(3, 3, 17);
    CHECK(s.coefficients() == std::vector<std::int64_t>{1, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0});
    // Exponents (5n^2 + n)/2: 0, 2, 3, 9, 11, ...
    CHECK(gordon_fixed_gf(2, 2, 7).coefficients() == std::vector<std::int64_t>{1, 0, -1, -1, 0, 0, 0, 0});
    CHECK(gordon_fixed_gf(2, 2, 12).coefficients() == oracle::theta(5, 1, 12));
    CHECK(gordon_fixed_gf(4, 1, 0) == TruncatedSeries::one(0));
}

TEST_CASE("weight 17 with k = a = 3 has no fixed point") {
    for (auto &p : oracle_pairs(3, 3, 17)) REQUIRE_FALSE(involute_gordon(p, 3, 3).fixed);
}

TEST_CASE("involution laws on all pairs up to weight 16, k <= 5 (oracle enumeration)") {
    for (int k = 2; k <= 5; ++k)
        for (int a = 1; a <= k; ++a) {
            const int N = 16;
            std::vector<std::int64_t> fixed(N + 1, 0), total(N + 1, 0);
            for (int w = 0; w <= N; ++w)
                for (auto &p : oracle_pairs(k, a, w)) {
                    total[static_cast<std::size_t>(w)] += p.sign();
                    const auto out = involute_gordon(p, k, a);
                    if (out.fixed) {
                        REQUIRE(((out.n == 0 && p == PartitionPair{}) || gordon_fixed_point(out.family, out.n, k, a) == p));
                        fixed[static_cast<std::size_t>(w)] += p.sign();
                        continue;
                    }
                    const auto &q = out.partner;
                    REQUIRE(in_gordon_ground_set(q, k, a));
                    REQUIRE(q.weight() == w);
                    const long d = static_cast<long>(q.A.size()) - static_cast<long>(p.A.size());
                    REQUIRE((d == 1 || d == -1));
                    const auto back = involute_gordon(q, k, a);
                    REQUIRE_FALSE(back.fixed);
                    REQUIRE(back.partner == p);
                }
            const auto theta = oracle::theta(2 * k + 1, 2 * (k - a) + 1, N);
            CHECK(fixed == theta);
            CHECK(total == theta);
            CHECK(gordon_fixed_gf(k, a, N).coefficients() == theta);
            // Series side of the same sum: (q;q) times the B counts.
            CHECK(oracle::product(oracle::poch(true, 1, 1, N), oracle::family_counts('B', k, a, N)) == theta);
        }
}

TEST_CASE("reduced involution at k = 1 is Franklin's involution") {
    // Fixed points are the pentagonal configurations; their signed sum is (q;q).
    const int N = 30;
    std::vector<std::int64_t> fixed(N + 1, 0);
    for (int w = 0; w <= N; ++w)
        for (auto &A : oracle::partitions(w)) {
            if (!oracle::distinct(A)) continue;
            const PartitionPair p{A, {}};
            const auto out = involute_gordon_reduced(p, 1, 1);
            if (out.fixed) {
                fixed[static_cast<std::size_t>(w)] += p.sign();
                continue;
            }
            REQUIRE(out.partner.B.empty());
            REQUIRE(out.partner.weight() == w);
            REQUIRE(involute_gordon_reduced(out.partner, 1, 1).partner == p);
        }
    CHECK(fixed == oracle::poch(true, 1, 1, N));
    CHECK_THROWS_AS(involute_gordon({{1}, {}}, 1, 1), ParameterError);
}

TEST_CASE("chain witness") {
    CHECK(chain_witness({{6, 1}, {5, 5}}, 3, 3) == 1);
    CHECK(chain_witness({{6}, {6, 5}}, 3, 3) == 2);
    CHECK_FALSE(chain_witness({{7}, {5, 5, 1}}, 3, 3).has_value());
    CHECK(ClassLabel::u(2, 4).to_string() == "U(2,4)");
}
