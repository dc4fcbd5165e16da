#include "cfree/partitions.hpp"

#include "cfree/errors.hpp"

#include <algorithm>
#include <string>

namespace cfree {

// Builds Partition values from label strings during enumeration.
class NcBuilder {
public:
    static Partition make(std::vector<std::uint8_t> labels, int block_count) {
        return Partition(std::move(labels), block_count);
    }
};

bool is_noncrossing(const std::vector<std::vector<int>>& blocks) {
    // Two blocks cross iff their merged element sequence, with runs collapsed,
    // alternates at least four times (P Q P Q).
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            std::vector<std::pair<int, int>> merged;
            for (int v : blocks[i]) merged.emplace_back(v, 0);
            for (int v : blocks[j]) merged.emplace_back(v, 1);
            std::sort(merged.begin(), merged.end());
            int runs = 0;
            int last = -1;
            for (const auto& [v, who] : merged) {
                if (who != last) {
                    ++runs;
                    last = who;
                }
            }
            if (runs >= 4) return false;
        }
    }
    return true;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    if (n < 1 || n > 255) throw BoundError("partition size must lie in [1, 255], got " + std::to_string(n));
    std::vector<int> owner(n + 1, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw ShapeError("partition has an empty block");
        for (int v : blocks[b]) {
            if (v < 1 || v > n) throw ShapeError("element " + std::to_string(v) + " outside {1.." + std::to_string(n) + "}");
            if (owner[v] != -1) throw ShapeError("element " + std::to_string(v) + " appears twice");
            owner[v] = static_cast<int>(b);
        }
    }
    for (int v = 1; v <= n; ++v) {
        if (owner[v] == -1) throw ShapeError("element " + std::to_string(v) + " not covered");
    }
    if (!is_noncrossing(blocks)) throw ShapeError("partition is crossing");

    // Renumber blocks by first appearance, i.e. by minimal element.
    std::vector<int> renumber(blocks.size(), -1);
    std::vector<std::uint8_t> labels(n);
    int next = 0;
    for (int v = 1; v <= n; ++v) {
        int& id = renumber[owner[v]];
        if (id == -1) id = next++;
        labels[v - 1] = static_cast<std::uint8_t>(id);
    }
    return Partition(std::move(labels), next);
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(block_count_);
    for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(static_cast<int>(i) + 1);
    return out;
}

bool Partition::is_pairing() const {
    if (labels_.size() != 2 * static_cast<std::size_t>(block_count_)) return false;
    std::vector<int> sizes(block_count_, 0);
    for (auto l : labels_) ++sizes[l];
    return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 2; });
}

Classification classify(const Partition& p) {
    const int blocks = p.block_count();
    std::vector<int> lo(blocks, p.size() + 1), hi(blocks, 0);
    auto labels = p.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int v = static_cast<int>(i) + 1;
        lo[labels[i]] = std::min(lo[labels[i]], v);
        hi[labels[i]] = std::max(hi[labels[i]], v);
    }
    Classification out;
    out.inner.assign(blocks, false);
    for (int b = 0; b < blocks; ++b) {
        for (int other = 0; other < blocks; ++other) {
            if (other != b && lo[other] < lo[b] && lo[b] < hi[other]) {
                out.inner[b] = true;
                break;
            }
        }
        if (out.inner[b]) {
            ++out.counts.inner_count;
        } else {
            ++out.counts.outer_count;
        }
    }
    return out;
}

namespace {

// Depth-first generation. An element may join any block still on the open
// stack (closing everything opened after it) or open a new block. Choices are
// tried in ascending label order so output is sorted by label string.
void generate_nc(int n, std::vector<std::uint8_t>& labels, std::vector<std::uint8_t>& open, int blocks,
                 const std::function<void(const Partition&)>& visit) {
    const auto pos = labels.size();
    if (static_cast<int>(pos) == n) {
        visit(NcBuilder::make(labels, blocks));
        return;
    }
    for (std::size_t depth = 0; depth < open.size(); ++depth) {
        std::vector<std::uint8_t> saved(open.begin() + static_cast<std::ptrdiff_t>(depth) + 1, open.end());
        labels.push_back(open[depth]);
        open.resize(depth + 1);
        generate_nc(n, labels, open, blocks, visit);
        open.insert(open.end(), saved.begin(), saved.end());
        labels.pop_back();
    }
    labels.push_back(static_cast<std::uint8_t>(blocks));
    open.push_back(static_cast<std::uint8_t>(blocks));
    generate_nc(n, labels, open, blocks + 1, visit);
    open.pop_back();
    labels.pop_back();
}

void generate_pairings(int two_n, std::vector<std::uint8_t>& labels, std::vector<std::uint8_t>& open, int blocks,
                       std::vector<Partition>& out) {
    const int pos = static_cast<int>(labels.size());
    if (pos == two_n) {
        out.push_back(NcBuilder::make(labels, blocks));
        return;
    }
    if (!open.empty()) {
        std::uint8_t top = open.back();
        labels.push_back(top);
        open.pop_back();
        generate_pairings(two_n, labels, open, blocks, out);
        open.push_back(top);
        labels.pop_back();
    }
    if (blocks < two_n / 2) {
        labels.push_back(static_cast<std::uint8_t>(blocks));
        open.push_back(static_cast<std::uint8_t>(blocks));
        generate_pairings(two_n, labels, open, blocks + 1, out);
        open.pop_back();
        labels.pop_back();
    }
}

}  // namespace

void for_each_nc(int n, const std::function<void(const Partition&)>& visit) {
    if (n < 1 || n > kMaxNcSize) {
        throw BoundError("enumerate_nc: n must lie in [1, " + std::to_string(kMaxNcSize) + "], got " + std::to_string(n));
    }
    std::vector<std::uint8_t> labels, open;
    labels.reserve(n);
    generate_nc(n, labels, open, 0, visit);
}

std::vector<Partition> enumerate_nc(int n) {
    std::vector<Partition> out;
    if (n >= 1 && n <= kMaxNcSize) out.reserve(catalan(n).get_ui());
    for_each_nc(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> enumerate_nc2(int two_n) {
    if (two_n % 2 != 0) throw ParityError("enumerate_nc2: ground set size must be even, got " + std::to_string(two_n));
    if (two_n < 2 || two_n > kMaxPairingSize) {
        throw BoundError("enumerate_nc2: size must lie in [2, " + std::to_string(kMaxPairingSize) + "], got " +
                         std::to_string(two_n));
    }
    std::vector<Partition> out;
    out.reserve(catalan(two_n / 2).get_ui());
    std::vector<std::uint8_t> labels, open;
    generate_pairings(two_n, labels, open, 0, out);
    return out;
}

int CatalanPath::diagonal_touches() const {
    int right = 0, up = 0, touches = 0;
    for (Step s : steps) {
        (s == Step::Right ? right : up) += 1;
        if (right == up && right >= 1) ++touches;
    }
    return touches;
}

bool CatalanPath::is_valid() const {
    if (n < 1 || steps.size() != 2 * static_cast<std::size_t>(n)) return false;
    int right = 0, up = 0;
    for (Step s : steps) {
        (s == Step::Right ? right : up) += 1;
        if (up > right || right > n) return false;
    }
    return right == n && up == n;
}

CatalanPath to_catalan_path(const Partition& pairing) {
    if (!pairing.is_pairing()) throw ShapeError("to_catalan_path: partition is not a pair partition");
    CatalanPath path{pairing.size() / 2, {}};
    std::vector<bool> seen(pairing.block_count(), false);
    for (auto l : pairing.labels()) {
        path.steps.push_back(seen[l] ? Step::Up : Step::Right);
        seen[l] = true;
    }
    return path;
}

Partition from_catalan_path(const CatalanPath& path) {
    if (!path.is_valid()) throw ShapeError("from_catalan_path: not an n-Catalan path");
    // An Up step closes the most recent unmatched Right step.
    std::vector<std::vector<int>> blocks;
    std::vector<int> open;
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        int v = static_cast<int>(i) + 1;
        if (path.steps[i] == Step::Right) {
            open.push_back(static_cast<int>(blocks.size()));
            blocks.push_back({v});
        } else {
            blocks[open.back()].push_back(v);
            open.pop_back();
        }
    }
    return Partition::from_blocks(2 * path.n, blocks);
}

BigInt catalan(int n) {
    if (n < 0) throw BoundError("catalan: n must be nonnegative");
    BigInt out = binomial(2 * n, n);
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), n + 1);
    return out;
}

BigInt kreweras(int n, int k) {
    if (n == 0 && k == 0) return 1;
    if (n < 1 || k < 1 || k > n) return 0;
    BigInt num = factorial(n - 1) * factorial(n);
    BigInt den = factorial(k - 1) * factorial(k) * factorial(n - k) * factorial(n - k + 1);
    BigInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

BlockCounts::BlockCounts(int max_n) : max_n_(max_n) {
    if (max_n < 0) throw BoundError("BlockCounts: max_n must be nonnegative");

    // a(n,k): a(n,0)=1, a(n,n)=0 and a(n,k+1) = a(n,k) + a(n-1,k+1).
    a_.assign(max_n + 1, {});
    for (int n = 1; n <= max_n; ++n) {
        auto& row = a_[n];
        row.assign(n + 1, 0);
        row[0] = 1;
        for (int k = 0; n >= 2 && k <= n - 2; ++k) row[k + 1] = row[k] + a_[n - 1][k + 1];
        row[n] = 0;
    }

    // t(n,k) = t(n-1,k-1) + sum_{r=2}^{n} sum_{i=1}^{r-1} t(r-1,i) t(n-r,k-i).
    t_.assign(max_n + 1, {});
    t_[0] = {1};
    for (int n = 1; n <= max_n; ++n) {
        t_[n].assign(n + 1, 0);
        for (int k = 1; k <= n; ++k) {
            BigInt sum = t(n - 1, k - 1);
            for (int r = 2; r <= n; ++r) {
                for (int i = 1; i <= r - 1; ++i) sum += t(r - 1, i) * t(n - r, k - i);
            }
            t_[n][k] = sum;
        }
    }

    // s(n,1,l) = t(n-1,l+1) for n >= 2 and
    // s(n,k+1,l) = sum_{r=1}^{n} sum_{j=0}^{l} s(r,1,j) s(n-r,k,l-j).
    s_.assign(max_n + 1, {});
    s_[0] = {{1}};
    for (int n = 1; n <= max_n; ++n) {
        s_[n].assign(n + 1, std::vector<BigInt>(n + 1, 0));
        for (int l = 0; l <= n; ++l) s_[n][1][l] = (n == 1) ? BigInt(l == 0 ? 1 : 0) : t(n - 1, l + 1);
        for (int k = 1; k + 1 <= n; ++k) {
            for (int l = 0; l <= n; ++l) {
                BigInt sum = 0;
                for (int r = 1; r <= n; ++r) {
                    for (int j = 0; j <= l; ++j) sum += s(r, 1, j) * s(n - r, k, l - j);
                }
                s_[n][k + 1][l] = sum;
            }
        }
    }
}

const BigInt& BlockCounts::a(int n, int k) const {
    if (n < 1 || n > max_n_ || k < 0 || k > n) {
        throw BoundError("count_a: need 1 <= n <= " + std::to_string(max_n_) + " and 0 <= k <= n, got (" +
                         std::to_string(n) + "," + std::to_string(k) + ")");
    }
    return a_[n][k];
}

BigInt BlockCounts::t(int n, int k) const {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n > max_n_) throw BoundError("count_t: n exceeds table size");
    return t_[n][k];
}

BigInt BlockCounts::s(int n, int k, int l) const {
    if (n < 0 || k < 0 || l < 0 || k > n || l > n) return 0;
    if (n > max_n_) throw BoundError("count_s: n exceeds table size");
    if (n < static_cast<int>(s_.size()) && k < static_cast<int>(s_[n].size())) return s_[n][k][l];
    return 0;
}

BigInt count_a(int n, int k) {
    if (n < 1) throw BoundError("count_a: n must be positive");
    return BlockCounts(n).a(n, k);
}

BigInt count_t(int n, int k) {
    if (n < 0) return 0;
    return BlockCounts(n).t(n, k);
}

BigInt count_s(int n, int k, int l) {
    if (n < 0) return 0;
    return BlockCounts(n).s(n, k, l);
}

}  // namespace cfree
