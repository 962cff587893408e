#include "combclass/lyndon.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace combclass;

namespace {

Word<char> wd(const char *s) { return Word<char>(s, s + std::char_traits<char>::length(s)); }

std::vector<Word<int>> binary_words(int len)
{
    std::vector<Word<int>> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << len); ++bits) {
        Word<int> w(len);
        for (int i = 0; i < len; ++i)
            w[i] = static_cast<int>(bits >> i & 1u);
        out.push_back(std::move(w));
    }
    return out;
}

bool weakly_decreasing(const std::vector<Word<int>> &factors)
{
    for (std::size_t i = 1; i < factors.size(); ++i)
        if (std::lexicographical_compare(factors[i - 1].begin(), factors[i - 1].end(),
                                         factors[i].begin(), factors[i].end()))
            return false;
    return true;
}

// All ways to cut w into factors; used to brute-check uniqueness.
void all_factorizations(const Word<int> &w, std::size_t from,
                        std::vector<Word<int>> &acc,
                        std::vector<std::vector<Word<int>>> &out)
{
    if (from == w.size()) {
        out.push_back(acc);
        return;
    }
    for (std::size_t to = from + 1; to <= w.size(); ++to) {
        acc.emplace_back(w.begin() + from, w.begin() + to);
        all_factorizations(w, to, acc, out);
        acc.pop_back();
    }
}

} // namespace

TEST_CASE("is_lyndon", "[lyndon]")
{
    CHECK(is_lyndon(wd("ababb")));
    CHECK(is_lyndon(wd("a")));
    CHECK_FALSE(is_lyndon(wd("aa")));
    CHECK_FALSE(is_lyndon(wd("ba")));
    CHECK(is_lyndon(wd("aaab")));
    CHECK_THROWS_AS(is_lyndon(Word<char>{}), std::invalid_argument);
}

TEST_CASE("factorization of the letter example", "[lyndon]")
{
    const auto factors = cfl_factorize(wd("ababbababaaababa"));
    REQUIRE(factors.size() == 5);
    CHECK(factors[0] == wd("ababb"));
    CHECK(factors[1] == wd("ab"));
    CHECK(factors[2] == wd("ab"));
    CHECK(factors[3] == wd("aaabab"));
    CHECK(factors[4] == wd("a"));
}

TEST_CASE("factorization over an integer alphabet", "[lyndon]")
{
    const auto factors = cfl_factorize(Word<int>{8, 2, 10, 11, 1, 7, 6});
    REQUIRE(factors.size() == 3);
    CHECK(factors[0] == Word<int>{8});
    CHECK(factors[1] == Word<int>{2, 10, 11});
    CHECK(factors[2] == Word<int>{1, 7, 6});

    CHECK(cfl_factorize(Word<int>{5}) == std::vector<Word<int>>{{5}});
    CHECK(cfl_factorize(Word<int>{}).empty());
}

TEST_CASE("binary factorizations are Lyndon, decreasing, lossless", "[lyndon][property]")
{
    for (int len = 1; len <= 12; ++len)
        for (const Word<int> &w : binary_words(len)) {
            const auto factors = cfl_factorize(w);
            Word<int> cat;
            for (const auto &f : factors) {
                REQUIRE(is_lyndon(f));
                cat.insert(cat.end(), f.begin(), f.end());
            }
            REQUIRE(weakly_decreasing(factors));
            REQUIRE(cat == w);
        }
}

TEST_CASE("the factorization is unique", "[lyndon][property]")
{
    for (int len = 1; len <= 8; ++len)
        for (const Word<int> &w : binary_words(len)) {
            std::vector<std::vector<Word<int>>> candidates;
            std::vector<Word<int>> acc;
            all_factorizations(w, 0, acc, candidates);
            std::size_t valid = 0;
            for (const auto &factors : candidates) {
                bool ok = weakly_decreasing(factors);
                for (const auto &f : factors)
                    ok = ok && is_lyndon(f);
                valid += ok;
            }
            REQUIRE(valid == 1);
        }
}

TEST_CASE("word route equals block route", "[lyndon]")
{
    const OrderedPartition example({Block{8, 12}, Block{2, 5}, Block{10}, Block{11},
                                    Block{1, 3, 4}, Block{7, 9}, Block{6}});
    CHECK(ltos_via_lyndon(example) ==
          SetOfCycles({CyclicPartition({Block{1, 3, 4}, Block{7, 9}, Block{6}}),
                       CyclicPartition({Block{2, 5}, Block{10}, Block{11}}),
                       CyclicPartition({Block{8, 12}})}));
    CHECK(ltos_via_lyndon(OrderedPartition({Block{1, 2, 3, 4}})) ==
          ltos(OrderedPartition({Block{1, 2, 3, 4}})));

    for (int n = 1; n <= 6; ++n)
        for_each_ordered_partition(n, [&](const OrderedPartition &l) {
            REQUIRE(ltos_via_lyndon(l) == ltos(l));
        });

    // larger randomized instances
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Label> labels(12);
        for (int i = 0; i < 12; ++i)
            labels[i] = i + 1;
        std::shuffle(labels.begin(), labels.end(), rng);
        std::vector<Block> blocks;
        std::size_t i = 0;
        while (i < labels.size()) {
            std::uniform_int_distribution<std::size_t> len(1, labels.size() - i);
            const std::size_t k = len(rng);
            blocks.emplace_back(std::vector<Label>(labels.begin() + i, labels.begin() + i + k));
            i += k;
        }
        const OrderedPartition l(std::move(blocks));
        REQUIRE(ltos_via_lyndon(l) == ltos(l));
    }
}

TEST_CASE("conjugation preserves periods", "[lyndon][property]")
{
    for (int len = 1; len <= 5; ++len)
        for (int k = 1; len * k <= 10; ++k)
            for (const Word<int> &u : binary_words(len)) {
                Word<int> uk;
                for (int rep = 0; rep < k; ++rep)
                    uk.insert(uk.end(), u.begin(), u.end());
                for (std::size_t rot = 0; rot < uk.size(); ++rot) {
                    Word<int> conj(uk.begin() + rot, uk.end());
                    conj.insert(conj.end(), uk.begin(), uk.begin() + rot);
                    Word<int> v(len);
                    for (int i = 0; i < len; ++i)
                        v[i] = uk[(rot + i) % uk.size()];
                    Word<int> vk;
                    for (int rep = 0; rep < k; ++rep)
                        vk.insert(vk.end(), v.begin(), v.end());
                    REQUIRE(conj == vk);
                }
            }
}
