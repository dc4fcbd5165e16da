#pragma once

// Brute-force views of NC(n) straight from the definitions: filter all set
// partitions by the crossing quadruple test, then count blocks by hand.

#include "cfree/rational.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace testing_support {

using cfree::BigInt;

// Every set partition of {1..n} as a restricted growth string.
inline std::vector<std::vector<int>> all_rgs(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> rgs(n, 0);
    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == n) {
            out.push_back(rgs);
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    if (n > 0) {
        rgs[0] = 0;
        rec(rec, 1, 0);
    }
    return out;
}

// Quadruple test straight from the definition.
inline bool brute_noncrossing(const std::vector<int>& rgs) {
    const int n = static_cast<int>(rgs.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (rgs[a] == rgs[c] && rgs[b] == rgs[d] && rgs[a] != rgs[b]) return false;
    return true;
}

struct BruteStats {
    int blocks = 0;
    int inner = 0;
    bool pairing = true;
};

inline BruteStats brute_stats(const std::vector<int>& rgs) {
    const int n = static_cast<int>(rgs.size());
    BruteStats s;
    s.blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<int> lo(s.blocks, n), hi(s.blocks, -1), size(s.blocks, 0);
    for (int i = 0; i < n; ++i) {
        lo[rgs[i]] = std::min(lo[rgs[i]], i);
        hi[rgs[i]] = std::max(hi[rgs[i]], i);
        ++size[rgs[i]];
    }
    for (int b = 0; b < s.blocks; ++b) {
        if (size[b] != 2) s.pairing = false;
        for (int o = 0; o < s.blocks; ++o) {
            if (o != b && lo[o] < lo[b] && lo[b] < hi[o]) {
                ++s.inner;
                break;
            }
        }
    }
    return s;
}

struct Census {
    std::map<int, BigInt> by_blocks;
    std::map<std::pair<int, int>, BigInt> by_outer_inner;
    std::map<int, BigInt> pairings_by_inner;
    BigInt total = 0;
    BigInt pairings = 0;
};

inline Census brute_census(int n) {
    Census c;
    for (const auto& rgs : all_rgs(n)) {
        if (!brute_noncrossing(rgs)) continue;
        auto s = brute_stats(rgs);
        ++c.total;
        ++c.by_blocks[s.blocks];
        ++c.by_outer_inner[{s.blocks - s.inner, s.inner}];
        if (s.pairing) {
            ++c.pairings;
            ++c.pairings_by_inner[s.inner];
        }
    }
    return c;
}

inline std::vector<std::vector<int>> blocks_of(const std::vector<int>& rgs) {
    int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> out(k);
    for (int i = 0; i < static_cast<int>(rgs.size()); ++i) out[rgs[i]].push_back(i + 1);
    return out;
}


}  // namespace testing_support
