#include "combclass/egf.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace combclass;

namespace {

CountSeq seq_of(std::vector<long long> values)
{
    std::vector<Bigint> counts(values.begin(), values.end());
    return CountSeq(std::move(counts));
}

} // namespace

TEST_CASE("egf_add is the componentwise sum", "[egf]")
{
    CHECK(egf_add(seq_of({1, 0, 0}), seq_of({0, 1, 0})) == seq_of({1, 1, 0}));
    CHECK(egf_add(CountSeq::zero(4), seq_of({1, 2, 3, 4, 5})) == seq_of({1, 2, 3, 4, 5}));

    const CountSeq bell = egf_exp(CountSeq::nonempty_sets(3));
    const CountSeq fubini = egf_seq(CountSeq::nonempty_sets(3));
    CHECK(egf_add(bell, fubini)[3] == 5 + 13);

    CHECK_THROWS_AS(egf_add(CountSeq::zero(3), CountSeq::zero(4)), std::invalid_argument);
}

TEST_CASE("egf_mul is a binomial convolution", "[egf]")
{
    const CountSeq any = seq_of({3, 1, 4, 1, 5});
    CHECK(egf_mul(CountSeq::unit(4), any) == any);

    // Set(X) * Set(X) = Set over a doubled alphabet: counts are 2^n
    const CountSeq ones = egf_exp(CountSeq::atom(8));
    const CountSeq sq = egf_mul(ones, ones);
    for (int n = 0; n <= 8; ++n)
        CHECK(sq[n] == int_pow(2, n));

    CHECK_THROWS_AS(egf_mul(CountSeq::zero(2), CountSeq::zero(3)), std::invalid_argument);
}

TEST_CASE("point shifts degrees and multiplies by n", "[egf]")
{
    CHECK(point(seq_of({1, 1, 4, 30, 336, 5040, 95040})) ==
          seq_of({0, 1, 2, 12, 120, 1680, 30240}));
    CHECK(point(CountSeq::zero(5)) == CountSeq::zero(5));
    CHECK(point(seq_of({1, 0, 0})) == seq_of({0, 1, 0}));
}

TEST_CASE("egf_seq solves B = 1 + A*B", "[egf]")
{
    CHECK(egf_seq(CountSeq::nonempty_sets(8)) ==
          seq_of({1, 1, 3, 13, 75, 541, 4683, 47293, 545835}));
    const CountSeq perms = egf_seq(CountSeq::atom(6));
    for (int n = 0; n <= 6; ++n)
        CHECK(perms[n] == factorial(n));
    CHECK(egf_seq(CountSeq::zero(4)) == CountSeq::unit(4));
    CHECK_THROWS_AS(egf_seq(CountSeq::unit(3)), std::invalid_argument);
}

TEST_CASE("egf_exp builds labelled sets", "[egf]")
{
    CHECK(egf_exp(CountSeq::nonempty_sets(8)) ==
          seq_of({1, 1, 2, 5, 15, 52, 203, 877, 4140}));
    const CountSeq sets = egf_exp(CountSeq::atom(6));
    for (int n = 0; n <= 6; ++n)
        CHECK(sets[n] == 1);
    CHECK(egf_exp(CountSeq::zero(4)) == CountSeq::unit(4));
    CHECK_THROWS_AS(egf_exp(CountSeq::unit(3)), std::invalid_argument);
}

TEST_CASE("egf_log builds labelled cycles", "[egf]")
{
    const CountSeq cycles = egf_log(CountSeq::atom(5));
    CHECK(cycles == seq_of({0, 1, 1, 2, 6, 24}));

    // necklaces of rooted trees: counts (2n-1)!/n!
    const CountSeq necklaces = egf_log(point(solve_catalan_class(6)));
    CHECK(necklaces == seq_of({0, 1, 3, 20, 210, 3024, 55440}));

    // cyclic set partitions against the surjection-based oracle
    const CountSeq cp = egf_log(CountSeq::nonempty_sets(6));
    for (int n = 1; n <= 6; ++n)
        CHECK(cp[n] == Bigint(oracles::cyclic_partitions_bf(n)));

    CHECK_THROWS_AS(egf_log(CountSeq::unit(3)), std::invalid_argument);
}

TEST_CASE("exp of log equals seq", "[egf][property]")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Bigint> c(13, Bigint(0));
        for (int n = 1; n <= 12; ++n)
            c[n] = static_cast<int>(rng() % 9);
        const CountSeq a(std::move(c));
        CHECK(egf_exp(egf_log(a)) == egf_seq(a));
    }
    const CountSeq a = point(solve_catalan_class(12));
    CHECK(egf_exp(egf_log(a)) == egf_seq(a));
}

TEST_CASE("catalan class fixed point", "[egf]")
{
    CHECK(solve_catalan_class(7) ==
          seq_of({1, 1, 4, 30, 336, 5040, 95040, 2162160}));
    CHECK(solve_catalan_class(0) == seq_of({1}));
    CHECK(solve_catalan_class(2)[2] == 4); // 4!/3!

    const CountSeq r = solve_catalan_class(12);
    for (int n = 0; n <= 12; ++n) {
        CHECK(r[n] == factorial(2 * n) / factorial(n + 1));
        if (n >= 1)
            CHECK(point(r)[n] == factorial(n) * oracles::catalan(n - 1));
    }
    CHECK(r[10] == Bigint("60949324800"));
    CHECK(r[12] == Bigint("99638080819200"));
}

TEST_CASE("windmill fixed point", "[egf]")
{
    const CountSeq w = solve_windmill(9);
    CHECK(w.counts() == std::vector<Bigint>{0, 1, 2, 9, 68, 730, 10164, 173838,
                                            3524688, 82627200});
    CHECK(solve_windmill(0) == seq_of({0}));
    CHECK(solve_windmill(3)[3] == 9);
}

TEST_CASE("windmill closed form by Stirling numbers", "[egf]")
{
    const Stirling1Table table = stirling1(12);
    CHECK(windmill_stirling(1, table) == 1);
    CHECK(windmill_stirling(3, table) == 9); // 1!*3*s[2][1] + 2!*3*s[2][2] = 3 + 6
    CHECK(factorial(1) * binomial(3, 1) * table.at(2, 1) == 3);
    CHECK(factorial(2) * binomial(3, 2) * table.at(2, 2) == 6);
    CHECK(windmill_stirling(5, table) == 730);
    CHECK_THROWS_AS(windmill_stirling(0, table), std::invalid_argument);
    CHECK_THROWS_AS(windmill_stirling(14, table), std::invalid_argument);

    const CountSeq w = solve_windmill(12);
    for (int n = 1; n <= 12; ++n)
        CHECK(w[n] == windmill_stirling(n, table));
}

TEST_CASE("nested-disc fixed point", "[egf]")
{
    const CountSeq p = solve_npt(8);
    CHECK(p.counts() == std::vector<Bigint>{0, 1, 2, 9, 64, 625, 7776, 117649, 2097152});
    const CountSeq q = solve_npt(12);
    for (int n = 1; n <= 12; ++n)
        CHECK(q[n] == int_pow(n, n - 1));
}

TEST_CASE("stirling triangle", "[egf]")
{
    const Stirling1Table table(6);
    for (int n = 0; n <= 6; ++n) {
        CHECK(table.at(n, n) == 1);
        Bigint row_sum = 0;
        for (int k = 0; k <= n; ++k)
            row_sum += table.at(n, k);
        CHECK(row_sum == factorial(n));
    }
    CHECK(table.at(3, 1) == Bigint(oracles::stirling1_bf(3, 1)));
    CHECK(table.at(4, 2) == Bigint(oracles::stirling1_bf(4, 2)));
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(table.at(n, k) == Bigint(oracles::stirling1_bf(n, k)));
}

TEST_CASE("count sequences reject negative entries", "[egf]")
{
    CHECK_THROWS_AS(CountSeq({Bigint(1), Bigint(-2)}), std::invalid_argument);
    CHECK_THROWS_AS(CountSeq(std::vector<Bigint>{}), std::invalid_argument);
}
