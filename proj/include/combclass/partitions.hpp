#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace combclass {

using Label = int;

/// A nonempty block of labels, kept sorted ascending.
class Block {
  public:
    explicit Block(std::vector<Label> labels) : labels_(std::move(labels))
    {
        if (labels_.empty())
            throw std::invalid_argument("Block: empty");
        std::sort(labels_.begin(), labels_.end());
        if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
            throw std::invalid_argument("Block: duplicate label");
        if (labels_.front() <= 0)
            throw std::invalid_argument("Block: labels must be positive");
    }

    Block(std::initializer_list<Label> labels) : Block(std::vector<Label>(labels)) {}

    Label min() const { return labels_.front(); }
    std::size_t size() const { return labels_.size(); }
    const std::vector<Label> &labels() const { return labels_; }

    bool operator==(const Block &) const = default;
    auto operator<=>(const Block &) const = default;

  private:
    std::vector<Label> labels_;
};

namespace detail {

// Collects all labels of a run of blocks, throwing on overlap.
inline std::vector<Label> merged_support(const std::vector<Block> &blocks)
{
    std::vector<Label> all;
    for (const Block &b : blocks)
        all.insert(all.end(), b.labels().begin(), b.labels().end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("blocks overlap");
    return all;
}

inline void require_standard(const std::vector<Label> &support)
{
    for (std::size_t i = 0; i < support.size(); ++i)
        if (support[i] != static_cast<Label>(i) + 1)
            throw std::invalid_argument("labels must be exactly {1..n}");
}

} // namespace detail

/// A sequence of disjoint nonempty blocks covering {1..n}.
class OrderedPartition {
  public:
    explicit OrderedPartition(std::vector<Block> blocks) : blocks_(std::move(blocks))
    {
        detail::require_standard(detail::merged_support(blocks_));
    }

    std::size_t size() const
    {
        std::size_t n = 0;
        for (const Block &b : blocks_)
            n += b.size();
        return n;
    }
    const std::vector<Block> &blocks() const { return blocks_; }

    bool operator==(const OrderedPartition &) const = default;

  private:
    std::vector<Block> blocks_;
};

/// A necklace of disjoint nonempty blocks, stored in its canonical rotation:
/// the block containing the minimum label of the support comes first.
class CyclicPartition {
  public:
    explicit CyclicPartition(std::vector<Block> blocks) : blocks_(std::move(blocks))
    {
        if (blocks_.empty())
            throw std::invalid_argument("CyclicPartition: empty");
        detail::merged_support(blocks_);
        canonicalize();
    }

    Label min() const { return min_; }
    const std::vector<Block> &blocks() const { return blocks_; }
    std::vector<Label> support() const { return detail::merged_support(blocks_); }

    bool operator==(const CyclicPartition &) const = default;
    auto operator<=>(const CyclicPartition &) const = default;

  private:
    void canonicalize()
    {
        std::size_t at = 0;
        min_ = blocks_[0].min();
        for (std::size_t i = 1; i < blocks_.size(); ++i)
            if (blocks_[i].min() < min_) {
                min_ = blocks_[i].min();
                at = i;
            }
        std::rotate(blocks_.begin(), blocks_.begin() + at, blocks_.end());
    }

    std::vector<Block> blocks_;
    Label min_ = 0;
};

/// A set of cyclic partitions with pairwise disjoint supports covering
/// {1..n}; stored sorted by ascending minimum label.
class SetOfCycles {
  public:
    explicit SetOfCycles(std::vector<CyclicPartition> cycles) : cycles_(std::move(cycles))
    {
        std::vector<Label> all;
        for (const CyclicPartition &c : cycles_) {
            auto s = c.support();
            all.insert(all.end(), s.begin(), s.end());
        }
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw std::invalid_argument("SetOfCycles: overlapping supports");
        detail::require_standard(all);
        std::sort(cycles_.begin(), cycles_.end(),
                  [](const CyclicPartition &a, const CyclicPartition &b) {
                      return a.min() < b.min();
                  });
    }

    std::size_t size() const
    {
        std::size_t n = 0;
        for (const CyclicPartition &c : cycles_)
            n += c.support().size();
        return n;
    }
    const std::vector<CyclicPartition> &cycles() const { return cycles_; }

    bool operator==(const SetOfCycles &) const = default;

  private:
    std::vector<CyclicPartition> cycles_;
};

/// Set-of-cycles to ordered partition: rotate each cycle so the block with
/// the cycle minimum is first (the stored form already is), then concatenate
/// the cycles in strictly decreasing order of their minima.
inline OrderedPartition stol(const SetOfCycles &c)
{
    std::vector<Block> out;
    const auto &cycles = c.cycles();
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it)
        out.insert(out.end(), it->blocks().begin(), it->blocks().end());
    return OrderedPartition(std::move(out));
}

/// The factor cut points of an ordered partition: 1-based positions where a
/// new prefix-minimum record of the block minima appears (the maximal index
/// chain), followed by the sentinel k+1. A record block starts a factor:
/// every label to its left is larger, and no smaller label occurs inside the
/// factor, so the chain of records is the maximal one.
inline std::vector<int> factor_indices(const OrderedPartition &l)
{
    std::vector<int> cuts;
    Label running_min = 0;
    const auto &blocks = l.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i == 0 || blocks[i].min() < running_min) {
            running_min = blocks[i].min();
            cuts.push_back(static_cast<int>(i) + 1);
        }
    }
    cuts.push_back(static_cast<int>(blocks.size()) + 1);
    return cuts;
}

/// Ordered partition to set-of-cycles: cut at the factor indices, close each
/// segment into a necklace.
inline SetOfCycles ltos(const OrderedPartition &l)
{
    const std::vector<int> cuts = factor_indices(l);
    std::vector<CyclicPartition> cycles;
    const auto &blocks = l.blocks();
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
        std::vector<Block> seg(blocks.begin() + (cuts[j] - 1),
                               blocks.begin() + (cuts[j + 1] - 1));
        cycles.emplace_back(std::move(seg));
    }
    return SetOfCycles(std::move(cycles));
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration. All streams are deterministic:
//   - set partitions follow restricted-growth strings in lexicographic order;
//   - ordered partitions follow (set partition, block-index permutation)
//     lexicographically;
//   - cyclic partitions keep the block containing the support minimum first
//     and permute the remaining blocks lexicographically;
//   - sets of cycles pick the support of the cycle containing the smallest
//     free label by ascending bitmask over the remaining labels.
// ---------------------------------------------------------------------------

/// A set partition in canonical form: blocks sorted by ascending minimum.
using SetPartition = std::vector<Block>;

// Set partitions of an arbitrary label set via restricted-growth strings.
// Block i collects the positions assigned value i; blocks come out sorted by
// first occurrence, which is the ascending-minimum canonical order.
template <typename F>
void for_each_set_partition_of(const std::vector<Label> &labels, F &&fn)
{
    const std::size_t n = labels.size();
    if (n == 0) {
        fn(SetPartition{});
        return;
    }
    std::vector<int> rgs(n, 0);
    while (true) {
        int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
        SetPartition blocks;
        blocks.reserve(k);
        for (int b = 0; b < k; ++b) {
            std::vector<Label> members;
            for (std::size_t i = 0; i < n; ++i)
                if (rgs[i] == b)
                    members.push_back(labels[i]);
            blocks.emplace_back(std::move(members));
        }
        fn(std::move(blocks));
        // next RGS in lexicographic order
        int i = static_cast<int>(n) - 1;
        while (i > 0) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j)
                prefix_max = std::max(prefix_max, rgs[j]);
            if (rgs[i] <= prefix_max) {
                ++rgs[i];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                break;
            }
            --i;
        }
        if (i == 0)
            return;
    }
}

template <typename F>
void for_each_ordered_partition_of(const std::vector<Label> &labels, F &&fn)
{
    for_each_set_partition_of(labels, [&](const SetPartition &blocks) {
        std::vector<int> idx(blocks.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = static_cast<int>(i);
        do {
            std::vector<Block> seq;
            seq.reserve(idx.size());
            for (int i : idx)
                seq.push_back(blocks[i]);
            fn(std::move(seq));
        } while (std::next_permutation(idx.begin(), idx.end()));
    });
}

// Cyclic partitions of an arbitrary label set: the block containing the
// support minimum is pinned first; each arrangement of the others is a
// distinct necklace (blocks are pairwise distinct, so rotations act freely).
template <typename F>
void for_each_cyclic_partition_of(const std::vector<Label> &labels, F &&fn)
{
    if (labels.empty())
        return;
    for_each_set_partition_of(labels, [&](const SetPartition &blocks) {
        std::vector<int> idx;
        for (std::size_t i = 1; i < blocks.size(); ++i)
            idx.push_back(static_cast<int>(i));
        do {
            std::vector<Block> seq;
            seq.reserve(blocks.size());
            seq.push_back(blocks[0]);
            for (int i : idx)
                seq.push_back(blocks[i]);
            fn(CyclicPartition(std::move(seq)));
        } while (std::next_permutation(idx.begin(), idx.end()));
    });
}

namespace detail {

// Subsets of `pool` that contain pool[0], by ascending bitmask over the rest.
template <typename F>
void for_each_subset_with_min(const std::vector<Label> &pool, F &&fn)
{
    const std::size_t m = pool.size() - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        std::vector<Label> in{pool[0]};
        std::vector<Label> out;
        for (std::size_t i = 0; i < m; ++i)
            (mask >> i & 1u ? in : out).push_back(pool[i + 1]);
        fn(in, out);
    }
}

template <typename F>
void for_each_soc_rec(const std::vector<Label> &pool,
                      std::vector<CyclicPartition> &acc, F &&fn)
{
    if (pool.empty()) {
        fn(SetOfCycles(acc));
        return;
    }
    for_each_subset_with_min(pool, [&](const std::vector<Label> &in,
                                       const std::vector<Label> &out) {
        for_each_cyclic_partition_of(in, [&](CyclicPartition cyc) {
            acc.push_back(std::move(cyc));
            for_each_soc_rec(out, acc, fn);
            acc.pop_back();
        });
    });
}

inline std::vector<Label> iota_labels(int n)
{
    std::vector<Label> labels(n);
    for (int i = 0; i < n; ++i)
        labels[i] = i + 1;
    return labels;
}

} // namespace detail

template <typename F> void for_each_set_partition(int n, F &&fn)
{
    for_each_set_partition_of(detail::iota_labels(n), std::forward<F>(fn));
}

template <typename F> void for_each_ordered_partition(int n, F &&fn)
{
    for_each_ordered_partition_of(detail::iota_labels(n), [&](std::vector<Block> seq) {
        fn(OrderedPartition(std::move(seq)));
    });
}

template <typename F> void for_each_cyclic_partition(int n, F &&fn)
{
    for_each_cyclic_partition_of(detail::iota_labels(n), std::forward<F>(fn));
}

template <typename F> void for_each_set_of_cycles(int n, F &&fn)
{
    std::vector<CyclicPartition> acc;
    detail::for_each_soc_rec(detail::iota_labels(n), acc, std::forward<F>(fn));
}

inline std::vector<SetPartition> enumerate_set_partitions(int n)
{
    std::vector<SetPartition> out;
    for_each_set_partition(n, [&](SetPartition p) { out.push_back(std::move(p)); });
    return out;
}

inline std::vector<OrderedPartition> enumerate_ordered_partitions(int n)
{
    std::vector<OrderedPartition> out;
    for_each_ordered_partition(n, [&](OrderedPartition p) { out.push_back(std::move(p)); });
    return out;
}

inline std::vector<CyclicPartition> enumerate_cyclic_partitions(int n)
{
    std::vector<CyclicPartition> out;
    for_each_cyclic_partition(n, [&](CyclicPartition p) { out.push_back(std::move(p)); });
    return out;
}

inline std::vector<SetOfCycles> enumerate_sets_of_cycles(int n)
{
    std::vector<SetOfCycles> out;
    for_each_set_of_cycles(n, [&](SetOfCycles p) { out.push_back(std::move(p)); });
    return out;
}

} // namespace combclass
