#pragma once

#include "cfree/rational.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cfree {

/// Largest ground set accepted by enumerate_nc.
inline constexpr int kMaxNcSize = 14;
/// Largest ground set accepted by enumerate_nc2.
inline constexpr int kMaxPairingSize = 24;

/// A non-crossing partition of {1,...,n}.
///
/// Stored as the block-label string: labels[i] is the index of the block
/// holding element i+1, with blocks numbered by their minimal element.
/// This string is the canonical encoding; ordering and equality use it.
class Partition {
public:
    /// Validates disjointness, coverage of {1..n} and the non-crossing
    /// condition; throws ShapeError otherwise. Blocks may be given in any order.
    static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

    int size() const { return static_cast<int>(labels_.size()); }
    int block_count() const { return block_count_; }
    std::span<const std::uint8_t> labels() const { return labels_; }

    /// Blocks sorted by minimal element, elements ascending (1-based).
    std::vector<std::vector<int>> blocks() const;

    bool is_pairing() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.labels_ <=> b.labels_; }

private:
    friend class NcBuilder;
    Partition(std::vector<std::uint8_t> labels, int block_count)
        : labels_(std::move(labels)), block_count_(block_count) {}

    std::vector<std::uint8_t> labels_;
    int block_count_ = 0;
};

/// True iff no a<b<c<d with a,c in one block and b,d in another.
bool is_noncrossing(const std::vector<std::vector<int>>& blocks);

struct BlockClass {
    int outer_count = 0;
    int inner_count = 0;
    friend bool operator==(const BlockClass&, const BlockClass&) = default;
};

struct Classification {
    BlockClass counts;
    /// One flag per block of Partition::blocks(); true means inner.
    std::vector<bool> inner;
};

/// A block is inner when some other block has elements a < v < b around it.
Classification classify(const Partition& p);

/// Calls `visit` for every element of NC(n) in canonical (label string) order.
/// Throws BoundError unless 1 <= n <= kMaxNcSize.
void for_each_nc(int n, const std::function<void(const Partition&)>& visit);

std::vector<Partition> enumerate_nc(int n);

/// All non-crossing pair partitions of {1..two_n}. Throws ParityError for
/// odd input and BoundError outside 2 <= two_n <= kMaxPairingSize.
std::vector<Partition> enumerate_nc2(int two_n);

enum class Step : std::uint8_t { Right, Up };

/// Lattice path from (0,0) to (n,n) with Right=(1,0), Up=(0,1) steps that
/// never rises above the diagonal.
struct CatalanPath {
    int n = 0;
    std::vector<Step> steps;

    /// Number of points (i,i), 1 <= i <= n, visited by the path.
    int diagonal_touches() const;
    bool is_valid() const;
    friend bool operator==(const CatalanPath&, const CatalanPath&) = default;
};

/// Right step at the first element of each pair, Up at the second.
CatalanPath to_catalan_path(const Partition& pairing);
Partition from_catalan_path(const CatalanPath& path);

BigInt catalan(int n);

/// Kreweras' closed form (n-1)! n! / ((k-1)! k! (n-k)! (n-k+1)!) for 1 <= k <= n,
/// evaluated over exact integers; follows the t-table conventions elsewhere.
BigInt kreweras(int n, int k);

/// Memoized inner/outer counting tables, filled from the recursions:
///   a(n,k): pairings of 2n points with exactly k inner blocks,
///   t(n,k): non-crossing partitions of n points with k blocks,
///   s(n,k,l): non-crossing partitions with k outer and l inner blocks.
/// Never enumerates. Each instance owns its tables; not shared across threads.
class BlockCounts {
public:
    explicit BlockCounts(int max_n);

    int max_n() const { return max_n_; }

    /// Throws BoundError unless 1 <= n <= max_n and 0 <= k <= n.
    const BigInt& a(int n, int k) const;
    /// Zero outside the natural domain; t(0,0) = 1.
    BigInt t(int n, int k) const;
    /// Zero outside the natural domain; s(0,0,0) = 1.
    BigInt s(int n, int k, int l) const;

private:
    int max_n_;
    std::vector<std::vector<BigInt>> a_;
    std::vector<std::vector<BigInt>> t_;
    std::vector<std::vector<std::vector<BigInt>>> s_;
};

BigInt count_a(int n, int k);
BigInt count_t(int n, int k);
BigInt count_s(int n, int k, int l);

}  // namespace cfree
