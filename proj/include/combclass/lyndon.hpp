#pragma once

#include "combclass/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace combclass {

/// A word over a totally ordered alphabet. `Less` must be a strict total
/// order on the letters present.
template <typename Letter> using Word = std::vector<Letter>;

/// True iff w is strictly smaller than every nontrivial rotation of itself
/// (equivalently: aperiodic and minimal in its conjugacy class).
template <typename Letter, typename Less = std::less<Letter>>
bool is_lyndon(const Word<Letter> &w, Less less = Less())
{
    if (w.empty())
        throw std::invalid_argument("is_lyndon: empty word");
    const std::size_t n = w.size();
    auto lex_less = [&](std::size_t rot) {
        // w < rotation starting at rot?
        for (std::size_t i = 0; i < n; ++i) {
            const Letter &a = w[i];
            const Letter &b = w[(rot + i) % n];
            if (less(a, b))
                return true;
            if (less(b, a))
                return false;
        }
        return false; // equal => periodic => not Lyndon
    };
    for (std::size_t rot = 1; rot < n; ++rot)
        if (!lex_less(rot))
            return false;
    return true;
}

/// Chen-Fox-Lyndon factorization by Duval's linear scan: the unique way to
/// write w as a weakly decreasing concatenation of Lyndon words.
template <typename Letter, typename Less = std::less<Letter>>
std::vector<Word<Letter>> cfl_factorize(const Word<Letter> &w, Less less = Less())
{
    std::vector<Word<Letter>> factors;
    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && !less(w[j], w[k])) {
            // w[k] <= w[j]: still extending a (power of a) Lyndon prefix
            k = less(w[k], w[j]) ? i : k + 1;
            ++j;
        }
        const std::size_t len = j - k;
        while (i <= k) {
            factors.emplace_back(w.begin() + i, w.begin() + i + len);
            i += len;
        }
    }
    return factors;
}

/// The ltos map computed through word combinatorics: write down the block
/// minima, factorize that word into Lyndon factors, close each factor into a
/// necklace and put back the block each minimum stands for. Agrees with
/// ltos() exactly.
inline SetOfCycles ltos_via_lyndon(const OrderedPartition &l)
{
    Word<Label> minima;
    std::map<Label, const Block *> by_min;
    for (const Block &b : l.blocks()) {
        minima.push_back(b.min());
        by_min[b.min()] = &b;
    }
    std::vector<CyclicPartition> cycles;
    for (const Word<Label> &factor : cfl_factorize(minima)) {
        std::vector<Block> blocks;
        blocks.reserve(factor.size());
        for (Label m : factor)
            blocks.push_back(*by_min.at(m));
        cycles.emplace_back(std::move(blocks));
    }
    return SetOfCycles(std::move(cycles));
}

} // namespace combclass
