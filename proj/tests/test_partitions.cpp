#include "doctest.h"

#include "cfree/errors.hpp"
#include "cfree/partitions.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

using namespace cfree;
using namespace testing_support;

TEST_CASE("NC enumeration matches brute-force filter of all set partitions") {
    for (int n = 1; n <= 9; ++n) {
        std::set<std::vector<std::vector<int>>> expected;
        for (const auto& rgs : all_rgs(n))
            if (brute_noncrossing(rgs)) expected.insert(blocks_of(rgs));
        auto got = enumerate_nc(n);
        CHECK(got.size() == expected.size());
        std::set<std::vector<std::vector<int>>> got_set;
        for (const auto& p : got) got_set.insert(p.blocks());
        CHECK(got_set == expected);
        CHECK(std::is_sorted(got.begin(), got.end()));
        CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
    }
}

TEST_CASE("Catalan counts") {
    const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int n = 0; n <= 10; ++n) CHECK(catalan(n) == expected[n]);
    for (int n = 1; n <= 10; ++n) {
        CHECK(BigInt(enumerate_nc(n).size()) == catalan(n));
        CHECK(BigInt(enumerate_nc2(2 * n).size()) == catalan(n));
    }
    CHECK(BigInt(enumerate_nc(kMaxNcSize).size()) == catalan(kMaxNcSize));
}

TEST_CASE("pairings agree with the brute-force census") {
    for (int n = 1; n <= 5; ++n) {
        auto census = brute_census(2 * n);
        CHECK(BigInt(enumerate_nc2(2 * n).size()) == census.pairings);
        for (const auto& p : enumerate_nc2(2 * n)) CHECK(p.is_pairing());
    }
}

TEST_CASE("crossing detection") {
    CHECK(is_noncrossing({{1, 3}, {2, 4}}) == false);
    CHECK(is_noncrossing({{1, 4}, {2, 3}}));
    CHECK(is_noncrossing({{1, 2}, {3, 4}}));
    CHECK(is_noncrossing({{1, 5}, {2, 6}, {3, 4}}) == false);
    CHECK_THROWS_AS(Partition::from_blocks(4, {{1, 3}, {2, 4}}), ShapeError);
    CHECK_THROWS_AS(Partition::from_blocks(4, {{1, 3}, {2}}), ShapeError);
    CHECK_THROWS_AS(Partition::from_blocks(3, {{1, 2}, {2, 3}}), ShapeError);
    auto p = Partition::from_blocks(6, {{5, 6}, {2, 3}, {4, 1}});
    CHECK(p.blocks() == std::vector<std::vector<int>>{{1, 4}, {2, 3}, {5, 6}});
}

TEST_CASE("inner and outer classification") {
    auto p = Partition::from_blocks(6, {{1, 4}, {2, 3}, {5, 6}});
    auto cls = classify(p);
    CHECK(cls.counts == BlockClass{2, 1});
    CHECK(cls.inner == std::vector<bool>{false, true, false});

    // A singleton strictly inside another block is inner.
    auto q = Partition::from_blocks(3, {{1, 3}, {2}});
    CHECK(classify(q).counts == BlockClass{1, 1});
    // Neighbouring blocks are both outer.
    auto r = Partition::from_blocks(3, {{1}, {2}, {3}});
    CHECK(classify(r).counts == BlockClass{3, 0});

    for (int n = 1; n <= 8; ++n) {
        for (const auto& rgs : all_rgs(n)) {
            if (!brute_noncrossing(rgs)) continue;
            auto s = brute_stats(rgs);
            auto c = classify(Partition::from_blocks(n, blocks_of(rgs))).counts;
            CHECK(c.inner_count == s.inner);
            CHECK(c.outer_count == s.blocks - s.inner);
        }
    }
}

TEST_CASE("Catalan path bijection") {
    auto p = Partition::from_blocks(6, {{1, 4}, {2, 3}, {5, 6}});
    auto path = to_catalan_path(p);
    using enum Step;
    CHECK(path.steps == std::vector<Step>{Right, Right, Up, Up, Right, Up});
    CHECK(path.diagonal_touches() == 2);
    CHECK(from_catalan_path(path) == p);

    for (int n = 1; n <= 8; ++n) {
        std::set<std::vector<Step>> seen;
        for (const auto& pairing : enumerate_nc2(2 * n)) {
            auto cp = to_catalan_path(pairing);
            CHECK(cp.is_valid());
            CHECK(cp.diagonal_touches() == classify(pairing).counts.outer_count);
            CHECK(from_catalan_path(cp) == pairing);
            seen.insert(cp.steps);
        }
        CHECK(BigInt(seen.size()) == catalan(n));
    }

    CatalanPath bad{2, {Step::Up, Step::Right, Step::Right, Step::Up}};
    CHECK_FALSE(bad.is_valid());
    CHECK_THROWS_AS(from_catalan_path(bad), ShapeError);
}

TEST_CASE("a-table: recursion vs enumeration") {
    BlockCounts counts(10);
    const long row4[] = {1, 3, 5, 5, 0};
    for (int k = 0; k <= 4; ++k) CHECK(counts.a(4, k) == row4[k]);

    for (int n = 1; n <= 10; ++n) {
        std::map<int, BigInt> by_inner;
        for (const auto& p : enumerate_nc2(2 * n)) ++by_inner[classify(p).counts.inner_count];
        for (int k = 0; k <= n; ++k) CHECK(counts.a(n, k) == by_inner[k]);
        CHECK(counts.a(n, 0) == 1);
        CHECK(counts.a(n, n) == 0);
        if (n >= 2) {
            CHECK(counts.a(n, n - 1) == catalan(n - 1));
            CHECK(counts.a(n, n - 2) == catalan(n - 1));
        }
        BigInt row = 0;
        for (int k = 0; k <= n; ++k) row += counts.a(n, k);
        CHECK(row == catalan(n));
    }
    CHECK_THROWS_AS(counts.a(11, 0), BoundError);
    CHECK_THROWS_AS(counts.a(3, 4), BoundError);
}

TEST_CASE("a-table: first-block decomposition") {
    BlockCounts counts(12);
    for (int n = 3; n <= 12; ++n) {
        for (int k = 0; k <= n - 3; ++k) {
            BigInt rhs = 0;
            for (int l = 1; l <= k + 2; ++l) {
                const int rest = n - l;
                const int kk = k - l + 2;
                if (rest < 1 || kk > rest) continue;
                rhs += counts.a(l, l - 1) * counts.a(rest, kk);
            }
            CHECK(counts.a(n, k + 1) == rhs);
        }
    }
}

TEST_CASE("t-table: recursion, Kreweras and enumeration") {
    BlockCounts counts(12);
    CHECK(counts.t(0, 0) == 1);
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k) CHECK(counts.t(n, k) == kreweras(n, k));
    for (int n = 1; n <= 9; ++n) {
        auto census = brute_census(n);
        for (int k = 1; k <= n; ++k) CHECK(counts.t(n, k) == census.by_blocks[k]);
    }
    CHECK(count_t(5, 0) == 0);
    CHECK(count_t(5, 6) == 0);
}

TEST_CASE("s-table: recursion vs enumeration") {
    BlockCounts counts(9);
    CHECK(counts.s(0, 0, 0) == 1);
    CHECK(counts.s(1, 1, 0) == 1);
    for (int n = 1; n <= 9; ++n) {
        auto census = brute_census(n);
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l) CHECK(counts.s(n, k, l) == census.by_outer_inner[{k, l}]);
        for (int l = 0; n >= 2 && l <= n - 1; ++l) CHECK(counts.s(n, 1, l) == counts.t(n - 1, l + 1));
        for (int k = 0; k + 1 <= n; ++k) {
            for (int l = 0; l <= n; ++l) {
                BigInt rhs = 0;
                for (int r = 1; r <= n; ++r)
                    for (int j = 0; j <= l; ++j) rhs += counts.s(r, 1, j) * counts.s(n - r, k, l - j);
                CHECK(counts.s(n, k + 1, l) == rhs);
            }
        }
    }
    CHECK(count_s(4, 2, 1) == counts.s(4, 2, 1));
}

TEST_CASE("size bounds") {
    CHECK_THROWS_AS(enumerate_nc(0), BoundError);
    CHECK_THROWS_AS(enumerate_nc(kMaxNcSize + 1), BoundError);
    CHECK_THROWS_AS(enumerate_nc2(7), ParityError);
    CHECK_THROWS_AS(enumerate_nc2(kMaxPairingSize + 2), BoundError);
}
