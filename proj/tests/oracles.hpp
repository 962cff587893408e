// Test-only brute-force oracles. Everything here counts structures by
// exhausting raw encodings (functions, permutations, compositions) and never
// calls the enumeration or series code it is used to check.
#pragma once

#include "combclass/bigint.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracles {

using combclass::Bigint;

// Ordered set partitions of {1..n} = surjections onto {1..k}: walk every
// function [n] -> [k] and keep the surjective ones.
inline std::vector<std::vector<std::vector<int>>> ordered_partitions_bf(int n)
{
    std::vector<std::vector<std::vector<int>>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (int k = 1; k <= n; ++k) {
        std::vector<int> f(n, 0);
        while (true) {
            std::vector<std::vector<int>> blocks(k);
            for (int i = 0; i < n; ++i)
                blocks[f[i]].push_back(i + 1);
            if (std::none_of(blocks.begin(), blocks.end(),
                             [](const auto &b) { return b.empty(); }))
                out.push_back(blocks);
            int i = n - 1;
            while (i >= 0 && f[i] == k - 1)
                f[i--] = 0;
            if (i < 0)
                break;
            ++f[i];
        }
    }
    return out;
}

inline std::size_t fubini_bf(int n) { return ordered_partitions_bf(n).size(); }

// Set partitions: ordered partitions modulo block order.
inline std::size_t bell_bf(int n)
{
    std::set<std::set<std::vector<int>>> seen;
    for (auto blocks : ordered_partitions_bf(n))
        seen.insert(std::set<std::vector<int>>(blocks.begin(), blocks.end()));
    return seen.size();
}

// Cyclic partitions: ordered partitions modulo rotation, canonicalized by
// rotating the block containing 1 to the front.
inline std::size_t cyclic_partitions_bf(int n)
{
    std::set<std::vector<std::vector<int>>> seen;
    for (auto blocks : ordered_partitions_bf(n)) {
        std::size_t at = 0;
        while (std::find(blocks[at].begin(), blocks[at].end(), 1) == blocks[at].end())
            ++at;
        std::rotate(blocks.begin(), blocks.begin() + at, blocks.end());
        seen.insert(blocks);
    }
    return seen.size();
}

// Permutations of {1..n} with exactly k cycles, counted one by one.
inline std::size_t stirling1_bf(int n, int k)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    do {
        std::vector<bool> seen(n, false);
        int cycles = 0;
        for (int i = 0; i < n; ++i) {
            if (seen[i])
                continue;
            ++cycles;
            for (int j = i; !seen[j]; j = perm[j])
                seen[j] = true;
        }
        if (cycles == k)
            ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

inline Bigint catalan(int n)
{
    return combclass::binomial(2 * n, n) / (n + 1);
}

} // namespace oracles
