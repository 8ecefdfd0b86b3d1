#pragma once

// Set partitions of [n] = {0, ..., n-1}: non-crossing, irreducible
// non-crossing, interval and monotone partitions, the nesting forest of a
// non-crossing partition, and the generic partition-sum evaluator.
//
// Positions are 0-based in memory and printed 1-based.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"
#include "word.hpp"

namespace nccum {

inline constexpr std::size_t max_partition_size = 12;

using Block = std::vector<std::size_t>;

struct SetPartition {
    std::size_t n = 0;
    std::vector<Block> blocks;  // each sorted, ordered by minimum

    std::size_t block_count() const noexcept { return blocks.size(); }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
        if (a.n != b.n) return a.n <=> b.n;
        return a.blocks <=> b.blocks;
    }
};

// Validates a disjoint cover of [n] and returns it in canonical order.
inline SetPartition make_partition(std::size_t n, std::vector<Block> blocks) {
    std::vector<bool> seen(n, false);
    for (auto& b : blocks) {
        if (b.empty()) throw DomainError("empty block");
        std::sort(b.begin(), b.end());
        for (std::size_t x : b) {
            if (x >= n) throw DomainError("block element out of range");
            if (seen[x]) throw DomainError("blocks are not disjoint");
            seen[x] = true;
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw DomainError("blocks do not cover [n]");
    std::sort(blocks.begin(), blocks.end());
    return SetPartition{n, std::move(blocks)};
}

// True iff no i < j < l < m with i, l in one block and j, m in another.
inline bool is_noncrossing(const SetPartition& p) {
    std::vector<std::size_t> owner(p.n);
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (std::size_t x : p.blocks[b]) owner[x] = b;
    // Two blocks cross iff some pair of consecutive elements of one block
    // separates an element of the other from an element outside it.
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        const Block& blk = p.blocks[b];
        for (std::size_t k = 0; k + 1 < blk.size(); ++k) {
            for (std::size_t j = blk[k] + 1; j < blk[k + 1]; ++j) {
                const Block& other = p.blocks[owner[j]];
                if (other.front() < blk[k] || other.back() > blk[k + 1]) return false;
            }
        }
    }
    return true;
}

namespace detail {

inline void check_size(std::size_t n) {
    if (n < 1 || n > max_partition_size)
        throw DomainError("partition size must be in 1.." + std::to_string(max_partition_size));
}

// Block lists of all non-crossing partitions of [0, m), built from the
// block containing 0: its elements cut [0, m) into gaps that are filled
// independently by smaller non-crossing partitions.
inline std::vector<std::vector<Block>> nc_blocks(std::size_t m) {
    static std::mutex mutex;
    static std::vector<std::vector<std::vector<Block>>> table{{std::vector<Block>{}}};
    std::lock_guard lock(mutex);
    while (table.size() <= m) {
        const std::size_t len = table.size();
        std::vector<std::vector<Block>> out;
        auto shifted = [](const std::vector<Block>& bs, std::size_t off) {
            std::vector<Block> r = bs;
            for (auto& b : r)
                for (auto& x : b) x += off;
            return r;
        };
        Block first{0};
        std::vector<Block> others;
        std::function<void(std::size_t)> go = [&](std::size_t last) {
            for (const auto& tail : table[len - 1 - last]) {
                std::vector<Block> part = others;
                auto t = shifted(tail, last + 1);
                part.insert(part.end(), t.begin(), t.end());
                part.push_back(first);
                std::sort(part.begin(), part.end());
                out.push_back(std::move(part));
            }
            for (std::size_t j = last + 1; j < len; ++j) {
                for (const auto& gap : table[j - last - 1]) {
                    const std::size_t saved = others.size();
                    auto g = shifted(gap, last + 1);
                    others.insert(others.end(), g.begin(), g.end());
                    first.push_back(j);
                    go(j);
                    first.pop_back();
                    others.resize(saved);
                }
            }
        };
        go(0);
        std::sort(out.begin(), out.end());
        table.push_back(std::move(out));
    }
    return table[m];
}

}  // namespace detail

inline std::vector<SetPartition> enumerate_nc(std::size_t n) {
    detail::check_size(n);
    std::vector<SetPartition> out;
    for (const auto& bs : detail::nc_blocks(n)) out.push_back(SetPartition{n, bs});
    return out;
}

// Non-crossing partitions with the first and last element in one block.
inline std::vector<SetPartition> enumerate_irreducible_nc(std::size_t n) {
    std::vector<SetPartition> out;
    for (auto& p : enumerate_nc(n))
        if (p.blocks.front().back() == n - 1) out.push_back(std::move(p));
    return out;
}

// Partitions into intervals: one per subset of the n-1 cut points.
inline std::vector<SetPartition> enumerate_interval(std::size_t n) {
    detail::check_size(n);
    std::vector<SetPartition> out;
    for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
        SetPartition p{n, {}};
        Block cur;
        for (std::size_t i = 0; i < n; ++i) {
            cur.push_back(i);
            if (i + 1 == n || (cuts >> i & 1)) {
                p.blocks.push_back(std::move(cur));
                cur.clear();
            }
        }
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// parent[b] is the innermost block enclosing block b (min W < min V and
// max V < max W), or -1 for an outermost block.
struct NestingForest {
    std::vector<std::ptrdiff_t> parent;
    std::vector<std::vector<std::size_t>> children;

    std::size_t size() const noexcept { return parent.size(); }
};

inline NestingForest nesting_forest(const SetPartition& p) {
    if (!is_noncrossing(p)) throw DomainError("nesting forest of a crossing partition");
    const std::size_t s = p.blocks.size();
    NestingForest f{std::vector<std::ptrdiff_t>(s, -1), std::vector<std::vector<std::size_t>>(s)};
    for (std::size_t v = 0; v < s; ++v) {
        const auto& V = p.blocks[v];
        std::size_t best_span = SIZE_MAX;
        for (std::size_t w = 0; w < s; ++w) {
            const auto& W = p.blocks[w];
            if (W.front() < V.front() && V.back() < W.back()) {
                const std::size_t span = W.back() - W.front();
                if (span < best_span) {
                    best_span = span;
                    f.parent[v] = static_cast<std::ptrdiff_t>(w);
                }
            }
        }
    }
    for (std::size_t v = 0; v < s; ++v)
        if (f.parent[v] >= 0) f.children[static_cast<std::size_t>(f.parent[v])].push_back(v);
    return f;
}

// Product over blocks of the size of the subtree rooted at the block.
inline Scalar tree_factorial(const SetPartition& p) {
    const NestingForest f = nesting_forest(p);
    std::vector<std::size_t> subtree(f.size(), 1);
    // Children have strictly larger minima than their parent, and blocks are
    // ordered by minimum, so a reverse sweep finishes children first.
    for (std::size_t v = f.size(); v-- > 0;)
        if (f.parent[v] >= 0) subtree[static_cast<std::size_t>(f.parent[v])] += subtree[v];
    Scalar prod = 1;
    for (std::size_t s : subtree) prod *= static_cast<unsigned long>(s);
    return prod;
}

// Number of total orders of the blocks in which every block comes after
// the blocks enclosing it (outer blocks first).
inline std::uint64_t monotone_labelling_count(const SetPartition& p) {
    const NestingForest f = nesting_forest(p);
    const std::size_t s = f.size();
    if (s > 20) throw DomainError("too many blocks for labelling count");
    std::vector<std::uint64_t> ways(std::size_t{1} << s, 0);
    ways[0] = 1;
    for (std::size_t mask = 0; mask < ways.size(); ++mask) {
        if (ways[mask] == 0) continue;
        for (std::size_t v = 0; v < s; ++v) {
            if (mask >> v & 1) continue;
            const auto par = f.parent[v];
            if (par >= 0 && !(mask >> par & 1)) continue;
            ways[mask | (std::size_t{1} << v)] += ways[mask];
        }
    }
    return ways.back();
}

// A non-crossing partition with a monotone labelling: order[i] is the index
// (into partition.blocks) of the block carrying label i+1.
struct MonotonePartition {
    SetPartition partition;
    std::vector<std::size_t> order;

    std::vector<Block> labelled_blocks() const {
        std::vector<Block> out;
        for (std::size_t b : order) out.push_back(partition.blocks[b]);
        return out;
    }
};

// All monotone partitions of [n] with q blocks.
inline std::vector<MonotonePartition> enumerate_monotone(std::size_t n, std::size_t q) {
    detail::check_size(n);
    if (q < 1 || q > n) throw DomainError("block count out of range");
    std::vector<MonotonePartition> out;
    for (const auto& p : enumerate_nc(n)) {
        if (p.block_count() != q) continue;
        const NestingForest f = nesting_forest(p);
        std::vector<std::size_t> order;
        std::vector<bool> used(q, false);
        std::function<void()> go = [&] {
            if (order.size() == q) {
                out.push_back({p, order});
                return;
            }
            for (std::size_t v = 0; v < q; ++v) {
                if (used[v]) continue;
                const auto par = f.parent[v];
                if (par >= 0 && !used[static_cast<std::size_t>(par)]) continue;
                used[v] = true;
                order.push_back(v);
                go();
                order.pop_back();
                used[v] = false;
            }
        };
        go();
    }
    return out;
}

enum class PartitionFamily { noncrossing, irreducible, interval, monotone };

enum class PartitionWeight {
    one,
    inverse_tree_factorial,             // 1 / tau(pi)!
    alternating,                        // (-1)^{|pi|-1}
    alternating_inverse_tree_factorial  // (-1)^{|pi|-1} / tau(pi)!
};

inline Scalar partition_weight(const SetPartition& p, PartitionWeight w) {
    const bool odd = (p.block_count() - 1) % 2 == 1;
    switch (w) {
        case PartitionWeight::one: return Scalar(1);
        case PartitionWeight::inverse_tree_factorial: return Scalar(1) / tree_factorial(p);
        case PartitionWeight::alternating: return Scalar(odd ? -1 : 1);
        case PartitionWeight::alternating_inverse_tree_factorial:
            return Scalar(odd ? -1 : 1) / tree_factorial(p);
    }
    return Scalar(0);
}

// The product over blocks B of table(a_B).
inline Scalar block_product(const std::function<Scalar(const Word&)>& table, const Word& w,
                            const SetPartition& p) {
    Scalar prod = 1;
    for (const auto& b : p.blocks) {
        Word sub;
        for (std::size_t x : b) sub.push_back(w[x]);
        prod *= table(sub);
        if (prod == 0) break;
    }
    return prod;
}

// sum over the family of weight(pi) * prod_{B in pi} table(a_B). The
// monotone family runs over labelled partitions of every block count s,
// each contributing with the extra factor 1/s!.
inline Scalar partition_sum(const std::function<Scalar(const Word&)>& table, const Word& w,
                            PartitionFamily family, PartitionWeight weight) {
    const std::size_t n = w.degree();
    Scalar total = 0;
    auto accumulate = [&](const std::vector<SetPartition>& ps) {
        for (const auto& p : ps) total += partition_weight(p, weight) * block_product(table, w, p);
    };
    switch (family) {
        case PartitionFamily::noncrossing: accumulate(enumerate_nc(n)); break;
        case PartitionFamily::irreducible: accumulate(enumerate_irreducible_nc(n)); break;
        case PartitionFamily::interval: accumulate(enumerate_interval(n)); break;
        case PartitionFamily::monotone:
            for (std::size_t s = 1; s <= n; ++s) {
                const Scalar inv = Scalar(1) / factorial(static_cast<unsigned>(s));
                for (const auto& m : enumerate_monotone(n, s))
                    total += inv * partition_weight(m.partition, weight) * block_product(table, w, m.partition);
            }
            break;
    }
    return total;
}

// "{1,4}{2,3}"
inline std::string to_string(const SetPartition& p) {
    std::string s;
    for (const auto& b : p.blocks) {
        s.push_back('{');
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) s.push_back(',');
            s += std::to_string(b[i] + 1);
        }
        s.push_back('}');
    }
    return s;
}

// Blocks in label order: "{1,3} < {2}".
inline std::string to_string(const MonotonePartition& m) {
    std::string s;
    for (const auto& b : m.labelled_blocks()) {
        if (!s.empty()) s += " < ";
        s += to_string(SetPartition{m.partition.n, {b}});
    }
    return s;
}

// Nested rendering of the forest: "{1,4}[{2,3}]{5}".
inline std::string forest_string(const SetPartition& p) {
    const NestingForest f = nesting_forest(p);
    std::function<std::string(std::size_t)> render = [&](std::size_t v) {
        std::string s = to_string(SetPartition{p.n, {p.blocks[v]}});
        if (!f.children[v].empty()) {
            s.push_back('[');
            for (std::size_t c : f.children[v]) s += render(c);
            s.push_back(']');
        }
        return s;
    };
    std::string out;
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f.parent[v] < 0) out += render(v);
    return out;
}

}  // namespace nccum
