#pragma once

#include "combclass/class_expr.hpp"
#include "combclass/egf.hpp"
#include "combclass/lyndon.hpp"
#include "combclass/partitions.hpp"
#include "combclass/seqcyc.hpp"
#include "combclass/trees.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace combclass {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail; // filled in on failure, or with a short summary
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool all_ok() const
    {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult &c) { return c.ok; });
    }
};

namespace verify_detail {

inline void check(VerifyReport &r, const std::string &name, bool ok,
                  const std::string &detail = "")
{
    r.checks.push_back({name, ok, detail});
}

template <typename T> std::string count_mismatch(const char *what, int n, T got, T want)
{
    std::ostringstream os;
    os << what << " at n=" << n << ": got " << got << ", want " << want;
    return os.str();
}

// A deterministic random ordered partition of {1..n}.
inline OrderedPartition random_ordered_partition(int n, std::mt19937_64 &rng)
{
    std::vector<Label> labels = detail::iota_labels(n);
    std::shuffle(labels.begin(), labels.end(), rng);
    std::vector<Block> blocks;
    std::size_t i = 0;
    while (i < labels.size()) {
        std::uniform_int_distribution<std::size_t> len(1, labels.size() - i);
        std::size_t k = len(rng);
        blocks.emplace_back(std::vector<Label>(labels.begin() + i, labels.begin() + i + k));
        i += k;
    }
    return OrderedPartition(std::move(blocks));
}

} // namespace verify_detail

inline void verify_egf(VerifyReport &r, int order_cap)
{
    using verify_detail::check;
    const int N = std::min(order_cap, 12);

    // exp(log(.)) == seq(.) for assorted series with no degree-0 element
    {
        bool ok = true;
        std::string detail;
        std::vector<CountSeq> inputs = {CountSeq::atom(N), CountSeq::nonempty_sets(N),
                                        point(solve_catalan_class(N))};
        std::mt19937_64 rng(12);
        for (int t = 0; t < 5; ++t) {
            std::vector<Bigint> c(N + 1);
            for (int i = 1; i <= N; ++i)
                c[i] = static_cast<int>(rng() % 7);
            inputs.emplace_back(std::move(c));
        }
        for (const CountSeq &a : inputs)
            if (egf_exp(egf_log(a)) != egf_seq(a)) {
                ok = false;
                detail = "exp(log(a)) differs from seq(a)";
                break;
            }
        check(r, "egf: exp(log(a)) == seq(a)", ok, detail);
    }

    // closed forms
    {
        const CountSeq R = solve_catalan_class(N);
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= N && ok; ++n)
            if (R[n] != factorial(2 * n) / factorial(n + 1)) {
                ok = false;
                detail = verify_detail::count_mismatch("R_n", n, to_decimal(R[n]),
                                                       to_decimal(factorial(2 * n) / factorial(n + 1)));
            }
        check(r, "egf: catalan class matches (2n)!/(n+1)!", ok, detail);

        const CountSeq Rp = point(R);
        ok = true;
        for (int n = 1; n <= N && ok; ++n) {
            const Bigint want = factorial(n) * (factorial(2 * (n - 1)) /
                                                (factorial(n - 1) * factorial(n)));
            if (Rp[n] != want)
                ok = false;
        }
        check(r, "egf: pointed class matches n!*Catalan(n-1)", ok);

        const CountSeq Nn = egf_log(Rp);
        ok = true;
        for (int n = 1; n <= N && ok; ++n)
            if (Nn[n] != factorial(2 * n - 1) / factorial(n))
                ok = false;
        check(r, "egf: necklace series matches (2n-1)!/n!", ok);

        const Stirling1Table table(N);
        const CountSeq W = solve_windmill(N);
        ok = true;
        for (int n = 1; n <= N && ok; ++n)
            if (W[n] != windmill_stirling(n, table))
                ok = false;
        check(r, "egf: windmill fixed point matches Stirling closed form", ok);

        const CountSeq Npt = solve_npt(N);
        ok = true;
        for (int n = 1; n <= N && ok; ++n)
            if (Npt[n] != int_pow(n, n - 1))
                ok = false;
        check(r, "egf: nested-disc fixed point matches n^(n-1)", ok);
    }

    // series identity behind the set-of-cycles/sequence isomorphism
    check(r, "egf: Set(Cyc(Set(X)+)) == Seq(Set(X)+) to order " + std::to_string(N),
          eval_class_expr("Set(Cyc(Set(X)+))", N) == eval_class_expr("Seq(Set(X)+)", N));

    r.notes.push_back(
        "necklace counts: the degree-n count of cycles of rooted trees is "
        "(2n-1)!/n!, i.e. A006963(n+1); the classical sequence is indexed "
        "one step ahead of the series degree.");
}

inline void verify_partitions(VerifyReport &r, int max_n)
{
    using verify_detail::check;
    const int cap = std::min(max_n, 7);

    bool rt_ok = true;
    bool card_ok = true;
    bool dup_ok = true;
    std::string rt_detail, card_detail;
    for (int n = 0; n <= cap; ++n) {
        const CountSeq fubini = egf_seq(CountSeq::nonempty_sets(n > 0 ? n : 1));
        std::size_t ops = 0, socs = 0;
        for_each_ordered_partition(n, [&](const OrderedPartition &l) {
            ++ops;
            if (stol(ltos(l)) != l)
                rt_ok = false;
        });
        for_each_set_of_cycles(n, [&](const SetOfCycles &c) {
            ++socs;
            if (ltos(stol(c)) != c)
                rt_ok = false;
            // multiset of blocks must be preserved by stol
            std::multiset<Block> before, after;
            for (const auto &cyc : c.cycles())
                for (const Block &b : cyc.blocks())
                    before.insert(b);
            const OrderedPartition l = stol(c);
            for (const Block &b : l.blocks())
                after.insert(b);
            if (before != after)
                rt_ok = false;
        });
        const Bigint want = fubini[n > 0 ? n : 0];
        if (Bigint(ops) != want || Bigint(socs) != want) {
            card_ok = false;
            card_detail = verify_detail::count_mismatch("ordered/soc count", n,
                                                        std::to_string(ops) + "/" + std::to_string(socs),
                                                        to_decimal(want));
        }
        // duplicate-free set partition stream
        std::size_t sps = 0;
        std::set<SetPartition> sp_seen;
        for_each_set_partition(n, [&](const SetPartition &p) {
            ++sps;
            sp_seen.insert(p);
        });
        if (sp_seen.size() != sps)
            dup_ok = false;
        const CountSeq bell = egf_exp(CountSeq::nonempty_sets(n > 0 ? n : 1));
        if (Bigint(sps) != bell[n > 0 ? n : 0])
            card_ok = false;
    }
    check(r, "partitions: ltos/stol round trips up to n=" + std::to_string(cap), rt_ok,
          rt_detail);
    check(r, "partitions: stream cardinalities match Bell/Fubini", card_ok, card_detail);
    check(r, "partitions: streams are duplicate-free", dup_ok);

    // cyclic partitions: brute-force stream against the log series
    {
        const int cp_cap = std::min(cap, 6);
        bool ok = true;
        std::string detail;
        const CountSeq cp = egf_log(CountSeq::nonempty_sets(std::max(cp_cap, 1)));
        for (int n = 1; n <= cp_cap; ++n) {
            std::size_t found = 0;
            for_each_cyclic_partition(n, [&](const CyclicPartition &) { ++found; });
            if (Bigint(found) != cp[n]) {
                ok = false;
                detail = verify_detail::count_mismatch("cyclic partitions", n,
                                                       std::to_string(found), to_decimal(cp[n]));
            }
        }
        check(r, "partitions: cyclic-partition oracle matches log series", ok, detail);
        r.notes.push_back(
            "cyclic partitions: the count sequence is 1, 2, 6, 26, 150, 1082, ... "
            "(log(1/(2-e^x))); the Fubini numbers 1, 1, 3, 13, 75, ... sometimes "
            "quoted for this class belong to ordered partitions, not necklaces.");
    }
}

inline void verify_lyndon(VerifyReport &r, int max_n, std::uint64_t seed)
{
    using verify_detail::check;

    // every binary word: factors Lyndon, weakly decreasing, concatenation
    {
        bool ok = true;
        const int len_cap = std::min(max_n + 5, 12);
        for (int len = 1; len <= len_cap && ok; ++len) {
            for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << len); ++bits) {
                Word<int> w(len);
                for (int i = 0; i < len; ++i)
                    w[i] = static_cast<int>(bits >> i & 1u);
                auto factors = cfl_factorize(w);
                Word<int> cat;
                for (std::size_t i = 0; i < factors.size(); ++i) {
                    if (!is_lyndon(factors[i]))
                        ok = false;
                    if (i > 0 && std::lexicographical_compare(factors[i - 1].begin(),
                                                              factors[i - 1].end(),
                                                              factors[i].begin(),
                                                              factors[i].end()))
                        ok = false; // strictly increasing step: not weakly decreasing
                    cat.insert(cat.end(), factors[i].begin(), factors[i].end());
                }
                if (cat != w)
                    ok = false;
            }
        }
        check(r, "lyndon: binary factorizations are Lyndon, weakly decreasing, lossless", ok);
    }

    // the word-level route equals the block-level route
    {
        bool ok = true;
        const int cap = std::min(max_n, 7);
        for (int n = 1; n <= cap && ok; ++n)
            for_each_ordered_partition(n, [&](const OrderedPartition &l) {
                if (ltos_via_lyndon(l) != ltos(l))
                    ok = false;
            });
        std::mt19937_64 rng(seed);
        for (int t = 0; t < 1000 && ok; ++t) {
            OrderedPartition l = verify_detail::random_ordered_partition(12, rng);
            if (ltos_via_lyndon(l) != ltos(l))
                ok = false;
        }
        check(r, "lyndon: word factorization agrees with ltos", ok);
    }

    // conjugation preserves periods
    {
        bool ok = true;
        for (int len = 1; len <= 5 && ok; ++len)
            for (int k = 1; len * k <= 10 && ok; ++k)
                for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << len); ++bits) {
                    Word<int> u(len);
                    for (int i = 0; i < len; ++i)
                        u[i] = static_cast<int>(bits >> i & 1u);
                    Word<int> pw;
                    for (int rep = 0; rep < k; ++rep)
                        pw.insert(pw.end(), u.begin(), u.end());
                    for (std::size_t rot = 0; rot < pw.size(); ++rot) {
                        Word<int> conj(pw.begin() + rot, pw.end());
                        conj.insert(conj.end(), pw.begin(), pw.begin() + rot);
                        // must equal v^k for v = the same rotation of u
                        Word<int> v(len);
                        for (int i = 0; i < len; ++i)
                            v[i] = pw[(rot + i) % pw.size()];
                        Word<int> vk;
                        for (int rep = 0; rep < k; ++rep)
                            vk.insert(vk.end(), v.begin(), v.end());
                        if (conj != vk)
                            ok = false;
                    }
                }
        check(r, "lyndon: conjugation preserves periods", ok);
    }
}

inline void verify_seqcyc(VerifyReport &r, int max_n)
{
    using verify_detail::check;
    const int cap = std::min(max_n, 6);
    bool rt_ok = true, label_ok = true;
    for (int n = 1; n <= cap; ++n) {
        for_each_jewellery(n, [&](const JewelleryBox &j) {
            if (seqtoj(jtoseq(j)) != j)
                rt_ok = false;
            // the label sets seen by jtoset equal the blocks of the induced
            // partition of jtoseq
            std::multiset<Block> a, b;
            const SetOfCycles cycles = jtoset(j);
            for (const auto &cyc : cycles.cycles())
                for (const Block &blk : cyc.blocks())
                    a.insert(blk);
            const OrderedPartition pi = induced_partition(jtoseq(j));
            for (const Block &blk : pi.blocks())
                b.insert(blk);
            if (a != b)
                label_ok = false;
        });
        for_each_forest(n, [&](const Forest &f) {
            if (jtoseq(seqtoj(f.sequence())) != f.sequence())
                rt_ok = false;
        });
    }
    check(r, "seqcyc: seqtoj/jtoseq round trips up to n=" + std::to_string(cap), rt_ok);
    check(r, "seqcyc: label sets preserved across the isomorphism", label_ok);
}

inline void verify_trees(VerifyReport &r, int max_n)
{
    using verify_detail::check;
    const int cap = std::min(max_n, 5);

    bool rt_ok = true, card_ok = true, canon_ok = true;
    std::string card_detail;
    for (int n = 0; n <= cap; ++n) {
        std::size_t rs = 0, fs = 0, js = 0;
        for_each_R(n, [&](const PlaneTreeR &t) {
            ++rs;
            if (ftor(rtof(t)) != t)
                rt_ok = false;
            // across the whole chain R -> F -> J -> F -> R
            if (ftor(jtof(ftoj(rtof(t)))) != t)
                rt_ok = false;
        });
        for_each_forest(n, [&](const Forest &f) {
            ++fs;
            if (rtof(ftor(f)) != f)
                rt_ok = false;
            if (jtof(ftoj(f)) != f)
                rt_ok = false;
        });
        for_each_jewellery(n, [&](const JewelleryBox &j) {
            ++js;
            if (ftoj(jtof(j)) != j)
                rt_ok = false;
            if (JewelleryBox(j.necklaces()) != j)
                canon_ok = false;
        });
        if (rs != fs || fs != js) {
            card_ok = false;
            card_detail = "J/F/R cardinalities differ at n=" + std::to_string(n);
        }
        const CountSeq R = solve_catalan_class(std::max(n, 1));
        if (Bigint(rs) != R[n]) {
            card_ok = false;
            card_detail = "R count differs from series at n=" + std::to_string(n);
        }
    }
    check(r, "trees: jewellery/forest/tree round trips up to n=" + std::to_string(cap),
          rt_ok);
    check(r, "trees: card(J_n) == card(F_n) == card(R_n) == series", card_ok, card_detail);
    check(r, "trees: enumerated jewelleries are canonical", canon_ok);

    // root insertion reaches every rooted tree exactly once
    {
        bool ok = true;
        const int rr_cap = std::min(cap, 5);
        for (int n = 1; n <= rr_cap && ok; ++n) {
            std::set<std::string> seen;
            std::size_t produced = 0;
            for_each_R(n - 1, [&](const PlaneTreeR &t) {
                for (Label root = 1; root <= n; ++root) {
                    RootedTreeRr rr = relabel_root_insert(t, root);
                    std::ostringstream os;
                    os << "w" << root;
                    std::function<void(const RootedTreeRr &)> dump =
                        [&](const RootedTreeRr &x) {
                            os << '(' << x.label;
                            for (const auto &c : x.children)
                                dump(c);
                            os << ')';
                        };
                    dump(rr);
                    seen.insert(os.str());
                    ++produced;
                }
            });
            const Bigint want = factorial(2 * n - 2) / factorial(n - 1);
            if (Bigint(produced) != want || seen.size() != produced)
                ok = false;
        }
        check(r, "trees: root insertion is a bijection onto rooted trees", ok);
    }

    // windmills and nested discs against their series
    {
        const int wm_cap = std::min(max_n, 6);
        const Stirling1Table table(std::max(wm_cap, 1));
        const CountSeq W = solve_windmill(std::max(wm_cap, 1));
        const CountSeq Npt = solve_npt(std::max(wm_cap, 1));
        bool w_ok = true, n_ok = true, w_canon = true;
        for (int n = 1; n <= wm_cap; ++n) {
            std::size_t ws = 0, ns = 0;
            for_each_windmill(n, [&](const Windmill &w) {
                ++ws;
                if (Windmill(w.label(), w.children()) != w)
                    w_canon = false;
            });
            for_each_nested(n, [&](const NestedDiscs &) { ++ns; });
            if (Bigint(ws) != W[n] || W[n] != windmill_stirling(n, table))
                w_ok = false;
            if (Bigint(ns) != Npt[n] || Npt[n] != int_pow(n, n - 1))
                n_ok = false;
        }
        check(r, "trees: windmill enumeration == fixed point == Stirling form", w_ok);
        check(r, "trees: windmill canonical rotations are stable", w_canon);
        check(r, "trees: nested-disc enumeration == n^(n-1)", n_ok);
    }
}

/// Run one of the named suites ("egf", "partitions", "lyndon", "seqcyc",
/// "trees") or "all".
inline VerifyReport run_verify(const std::string &suite, int max_n, std::uint64_t seed)
{
    VerifyReport r;
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "egf") {
        verify_egf(r, std::max(max_n, 10));
        known = true;
    }
    if (all || suite == "partitions") {
        verify_partitions(r, max_n);
        known = true;
    }
    if (all || suite == "lyndon") {
        verify_lyndon(r, max_n, seed);
        known = true;
    }
    if (all || suite == "seqcyc") {
        verify_seqcyc(r, std::min(max_n, 5));
        known = true;
    }
    if (all || suite == "trees") {
        verify_trees(r, max_n);
        known = true;
    }
    if (!known)
        throw std::invalid_argument("unknown suite '" + suite + "'");
    return r;
}

} // namespace combclass
