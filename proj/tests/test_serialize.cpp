#include "combclass/serialize.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace combclass;

TEST_CASE("count sequences travel as decimal strings", "[serialize]")
{
    const CountSeq r = solve_catalan_class(3);
    CHECK(json_of(r).dump() == R"(["1","1","4","30"])");
    CHECK(parse_count_seq(json_of(r)) == r);

    const CountSeq big = solve_catalan_class(12);
    CHECK(parse_count_seq(json_of(big)) == big);
    CHECK(json_of(big)[12].get<std::string>() == "99638080819200");

    CHECK_THROWS_AS(parse_count_seq(Json::array()), std::invalid_argument);
}

TEST_CASE("partition forms", "[serialize]")
{
    CHECK(json_of(OrderedPartition({Block{3}, Block{1, 2}})).dump() == R"([[3],[1,2]])");

    const CyclicPartition c({Block{2, 3}, Block{1}});
    CHECK(json_of(c).dump() == R"({"cyc":[[1],[2,3]]})");
    CHECK(parse_cyclic_partition(json_of(c)) == c);

    const SetOfCycles soc({CyclicPartition({Block{1, 3}}), CyclicPartition({Block{2}})});
    CHECK(parse_set_of_cycles(json_of(soc)) == soc);
}

TEST_CASE("structure round trips through JSON", "[serialize][property]")
{
    for_each_ordered_partition(4, [&](const OrderedPartition &p) {
        REQUIRE(parse_ordered_partition(json_of(p)) == p);
    });
    for_each_set_of_cycles(4, [&](const SetOfCycles &c) {
        REQUIRE(parse_set_of_cycles(json_of(c)) == c);
    });
    for_each_R(3, [&](const PlaneTreeR &t) {
        REQUIRE(parse_plane_tree(json_of(t)) == t);
    });
    for_each_forest(3, [&](const Forest &f) {
        REQUIRE(parse_forest(json_of(f)) == f);
    });
    for_each_jewellery(3, [&](const JewelleryBox &j) {
        REQUIRE(parse_jewellery(json_of(j)) == j);
    });
    for_each_windmill(4, [&](const Windmill &w) {
        REQUIRE(parse_windmill(json_of(w)) == w);
    });
    for_each_nested(4, [&](const NestedDiscs &d) {
        REQUIRE(parse_nested(json_of(d)) == d);
    });
}

TEST_CASE("tree JSON shape", "[serialize]")
{
    const RootedTreeRr t{4, {RootedTreeRr{3, {}}}};
    CHECK(json_of(t).dump() == R"({"children":[{"children":[],"label":3}],"label":4})");

    const PlaneTreeR root({RootedTreeRr{1, {}}});
    CHECK(json_of(root)["label"].is_null());
    CHECK(parse_plane_tree(json_of(root)) == root);
    CHECK_THROWS_AS(parse_plane_tree(json_of(t)), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree(json_of(root)), std::invalid_argument);
}

TEST_CASE("windmill JSON carries the cyclic tag", "[serialize]")
{
    const Windmill w(1, {Windmill(2), Windmill(3)});
    const Json j = json_of(w);
    CHECK(j["cyclic"] == true);
    CHECK(parse_windmill(j) == w);
}

TEST_CASE("generic atoms keep their payloads", "[serialize]")
{
    const GenericAtom a{Json{{"name", "alpha"}}, {2, 5}};
    const GenericAtom b{Json{{"name", "beta"}}, {1}};
    const GenericAtom c{Json{{"name", "gamma"}}, {3, 4}};
    const AtomJewellery<GenericAtom> j({AtomNecklace<GenericAtom>({a, b}),
                                        AtomNecklace<GenericAtom>({c})});

    const AtomSequence<GenericAtom> seq = jtoseq(j);
    CHECK(seqtoj(seq) == j);

    const Json dumped = json_of(seq);
    const AtomSequence<GenericAtom> reparsed = parse_generic_sequence(dumped);
    CHECK(reparsed == seq);
    CHECK(json_of(seqtoj(reparsed)) == json_of(j));
}
