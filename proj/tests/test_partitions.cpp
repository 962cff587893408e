#include "combclass/partitions.hpp"

#include "combclass/egf.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace combclass;

namespace {

// The worked example used throughout: three cycles over {1..12}.
SetOfCycles example_cycles()
{
    return SetOfCycles({
        CyclicPartition({Block{11}, Block{2, 5}, Block{10}}),
        CyclicPartition({Block{6}, Block{1, 3, 4}, Block{7, 9}}),
        CyclicPartition({Block{8, 12}}),
    });
}

OrderedPartition example_list()
{
    return OrderedPartition({Block{8, 12}, Block{2, 5}, Block{10}, Block{11},
                             Block{1, 3, 4}, Block{7, 9}, Block{6}});
}

} // namespace

TEST_CASE("blocks are canonical and validated", "[partitions]")
{
    CHECK(Block({3, 1, 2}).labels() == std::vector<Label>{1, 2, 3});
    CHECK(Block({7}).min() == 7);
    CHECK_THROWS_AS(Block(std::vector<Label>{}), std::invalid_argument);
    CHECK_THROWS_AS(Block({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Block({0, 2}), std::invalid_argument);
}

TEST_CASE("cyclic partitions store their canonical rotation", "[partitions]")
{
    const CyclicPartition c({Block{11}, Block{2, 5}, Block{10}});
    CHECK(c.blocks() == std::vector<Block>{Block{2, 5}, Block{10}, Block{11}});
    CHECK(c.min() == 2);
    // any rotation of the same necklace normalizes to the same object
    CHECK(c == CyclicPartition({Block{10}, Block{11}, Block{2, 5}}));
    CHECK_THROWS_AS(CyclicPartition({Block{1, 2}, Block{2, 3}}), std::invalid_argument);
}

TEST_CASE("stol matches the worked example", "[partitions]")
{
    CHECK(stol(example_cycles()) == example_list());
    CHECK(stol(SetOfCycles({CyclicPartition({Block{1, 2, 3}})})) ==
          OrderedPartition({Block{1, 2, 3}}));
    CHECK(stol(SetOfCycles({CyclicPartition({Block{1}}), CyclicPartition({Block{2}}),
                            CyclicPartition({Block{3}})})) ==
          OrderedPartition({Block{3}, Block{2}, Block{1}}));
}

TEST_CASE("set of cycles rejects overlapping supports", "[partitions]")
{
    CHECK_THROWS_AS(SetOfCycles({CyclicPartition({Block{1, 2}}),
                                 CyclicPartition({Block{2, 3}})}),
                    std::invalid_argument);
}

TEST_CASE("factor indices are the prefix-minimum records", "[partitions]")
{
    CHECK(factor_indices(example_list()) == std::vector<int>{1, 2, 5, 8});
    CHECK(factor_indices(OrderedPartition({Block{1, 2}})) == std::vector<int>{1, 2});
    CHECK(factor_indices(OrderedPartition({Block{1}, Block{2}, Block{3}})) ==
          std::vector<int>{1, 4});
}

TEST_CASE("ltos matches the worked example", "[partitions]")
{
    CHECK(ltos(example_list()) == example_cycles());
    CHECK(ltos(OrderedPartition({Block{1, 2, 3}})) ==
          SetOfCycles({CyclicPartition({Block{1, 2, 3}})}));
    CHECK(ltos(OrderedPartition({Block{3}, Block{2}, Block{1}})) ==
          SetOfCycles({CyclicPartition({Block{1}}), CyclicPartition({Block{2}}),
                       CyclicPartition({Block{3}})}));
}

TEST_CASE("stol and ltos are mutually inverse", "[partitions][property]")
{
    for (int n = 0; n <= 6; ++n) {
        for_each_ordered_partition(n, [&](const OrderedPartition &l) {
            REQUIRE(stol(ltos(l)) == l);
        });
        for_each_set_of_cycles(n, [&](const SetOfCycles &c) {
            REQUIRE(ltos(stol(c)) == c);
        });
    }
}

TEST_CASE("stol preserves blocks and labels", "[partitions][property]")
{
    for (int n = 1; n <= 5; ++n)
        for_each_set_of_cycles(n, [&](const SetOfCycles &c) {
            std::multiset<Block> before, after;
            for (const CyclicPartition &cyc : c.cycles())
                for (const Block &b : cyc.blocks())
                    before.insert(b);
            const OrderedPartition l = stol(c);
            for (const Block &b : l.blocks())
                after.insert(b);
            REQUIRE(before == after);
            REQUIRE(l.size() == static_cast<std::size_t>(n));
        });
}

TEST_CASE("set partition stream", "[partitions]")
{
    CHECK(enumerate_set_partitions(3).size() == 5);
    CHECK(enumerate_set_partitions(0).size() == 1);
    for (int n = 0; n <= 6; ++n) {
        const auto all = enumerate_set_partitions(n);
        CHECK(all.size() == oracles::bell_bf(n));
        CHECK(std::set<SetPartition>(all.begin(), all.end()).size() == all.size());
    }
}

TEST_CASE("ordered partition stream", "[partitions]")
{
    CHECK(enumerate_ordered_partitions(3).size() == 13);
    for (int n = 0; n <= 6; ++n) {
        const auto all = enumerate_ordered_partitions(n);
        CHECK(all.size() == oracles::fubini_bf(n));
        std::set<std::vector<Block>> seen;
        for (const OrderedPartition &p : all)
            seen.insert(p.blocks());
        CHECK(seen.size() == all.size());
    }
}

TEST_CASE("cyclic partition stream", "[partitions]")
{
    const auto two = enumerate_cyclic_partitions(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == CyclicPartition({Block{1, 2}}));
    CHECK(two[1] == CyclicPartition({Block{1}, Block{2}}));
    for (int n = 1; n <= 6; ++n) {
        const auto all = enumerate_cyclic_partitions(n);
        CHECK(all.size() == oracles::cyclic_partitions_bf(n));
        std::set<CyclicPartition> seen(all.begin(), all.end());
        CHECK(seen.size() == all.size());
        for (const CyclicPartition &c : all)
            CHECK(CyclicPartition(c.blocks()) == c);
    }
}

TEST_CASE("set-of-cycles stream has Fubini cardinality", "[partitions]")
{
    const CountSeq fubini = egf_seq(CountSeq::nonempty_sets(6));
    for (int n = 0; n <= 6; ++n) {
        std::size_t count = 0;
        for_each_set_of_cycles(n, [&](const SetOfCycles &) { ++count; });
        CHECK(Bigint(count) == fubini[n]);
    }
}
