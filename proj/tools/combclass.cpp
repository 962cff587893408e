#include "combclass/combclass.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

namespace cc = combclass;

namespace {

std::string lowercase(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string canonical_class(const std::string &raw)
{
    std::string name = lowercase(raw);
    if (name == "w")
        name = "windmill";
    if (name == "npt")
        name = "nested";
    return name;
}

// Degree caps for exhaustive enumeration; COMBCLASS_MAX_N overrides, --force
// lifts them entirely.
int default_cap(const std::string &cls)
{
    if (const char *env = std::getenv("COMBCLASS_MAX_N"))
        return std::atoi(env);
    if (cls == "sp" || cls == "op" || cls == "cp" || cls == "soc")
        return 8;
    return 6;
}

cc::Bigint class_count(const std::string &cls, int n)
{
    const int order = std::max(n, 1);
    if (cls == "sp")
        return cc::egf_exp(cc::CountSeq::nonempty_sets(order))[n];
    if (cls == "op")
        return cc::egf_seq(cc::CountSeq::nonempty_sets(order))[n];
    if (cls == "cp")
        return cc::egf_log(cc::CountSeq::nonempty_sets(order))[n];
    if (cls == "soc")
        return cc::egf_exp(cc::egf_log(cc::CountSeq::nonempty_sets(order)))[n];
    if (cls == "r" || cls == "forest")
        return cc::solve_catalan_class(order)[n];
    if (cls == "rr")
        return cc::point(cc::solve_catalan_class(order))[n];
    if (cls == "necklace")
        return cc::egf_log(cc::point(cc::solve_catalan_class(order)))[n];
    if (cls == "jewellery")
        return cc::egf_exp(cc::egf_log(cc::point(cc::solve_catalan_class(order))))[n];
    if (cls == "windmill")
        return cc::solve_windmill(order)[n];
    if (cls == "nested")
        return cc::solve_npt(order)[n];
    throw CLI::ValidationError("unknown class '" + cls + "'");
}

void stream_class(const std::string &cls, int n, const std::function<void(cc::Json)> &emit)
{
    if (cls == "sp")
        cc::for_each_set_partition(n, [&](const cc::SetPartition &p) { emit(cc::json_of(p)); });
    else if (cls == "op")
        cc::for_each_ordered_partition(n, [&](const cc::OrderedPartition &p) { emit(cc::json_of(p)); });
    else if (cls == "cp")
        cc::for_each_cyclic_partition(n, [&](const cc::CyclicPartition &p) { emit(cc::json_of(p)); });
    else if (cls == "soc")
        cc::for_each_set_of_cycles(n, [&](const cc::SetOfCycles &p) { emit(cc::json_of(p)); });
    else if (cls == "r")
        cc::for_each_R(n, [&](const cc::PlaneTreeR &t) { emit(cc::json_of(t)); });
    else if (cls == "rr")
        cc::for_each_Rr(n, [&](const cc::RootedTreeRr &t) { emit(cc::json_of(t)); });
    else if (cls == "forest")
        cc::for_each_forest(n, [&](const cc::Forest &f) { emit(cc::json_of(f)); });
    else if (cls == "necklace")
        cc::for_each_necklace(n, [&](const cc::TreeNecklace &x) { emit(cc::json_of(x)); });
    else if (cls == "jewellery")
        cc::for_each_jewellery(n, [&](const cc::JewelleryBox &x) { emit(cc::json_of(x)); });
    else if (cls == "windmill")
        cc::for_each_windmill(n, [&](const cc::Windmill &x) { emit(cc::json_of(x)); });
    else if (cls == "nested")
        cc::for_each_nested(n, [&](const cc::NestedDiscs &x) { emit(cc::json_of(x)); });
    else
        throw CLI::ValidationError("unknown class '" + cls + "'");
}

cc::Json map_structure(const std::string &bijection, const cc::Json &in)
{
    if (bijection == "stol")
        return cc::json_of(cc::stol(cc::parse_set_of_cycles(in)));
    if (bijection == "ltos")
        return cc::json_of(cc::ltos(cc::parse_ordered_partition(in)));
    if (bijection == "jtoseq")
        return cc::json_of(cc::jtoseq(cc::parse_generic_jewellery(in)));
    if (bijection == "seqtoj")
        return cc::json_of(cc::seqtoj(cc::parse_generic_sequence(in)));
    if (bijection == "rtof")
        return cc::json_of(cc::rtof(cc::parse_plane_tree(in)));
    if (bijection == "ftor")
        return cc::json_of(cc::ftor(cc::parse_forest(in)));
    if (bijection == "jtof")
        return cc::json_of(cc::jtof(cc::parse_jewellery(in)));
    if (bijection == "ftoj")
        return cc::json_of(cc::ftoj(cc::parse_forest(in)));
    throw CLI::ValidationError("unknown bijection '" + bijection + "'");
}

int run_verify_command(const std::string &suite, int max_n, std::uint64_t seed)
{
    const cc::VerifyReport report = cc::run_verify(suite, max_n, seed);
    for (const cc::CheckResult &c : report.checks) {
        std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.ok && !c.detail.empty())
            std::cout << " -- " << c.detail;
        std::cout << '\n';
    }
    for (const std::string &note : report.notes)
        std::cout << "[note] " << note << '\n';
    const std::size_t failed =
        static_cast<std::size_t>(std::count_if(report.checks.begin(), report.checks.end(),
                                               [](const cc::CheckResult &c) { return !c.ok; }));
    std::cout << report.checks.size() - failed << "/" << report.checks.size()
              << " checks passed\n";
    return report.all_ok() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"exact toolkit for labelled combinatorial classes"};
    app.require_subcommand(1);

    std::string cls, bijection, word, expr;
    std::string suite = "all";
    std::string format;
    int n = 0, order = 8, max_n = 5;
    bool force = false;
    std::uint64_t seed = 1;

    auto *count = app.add_subcommand("count", "exact number of structures of a class");
    count->add_option("class", cls, "sp|op|cp|soc|r|rr|forest|necklace|jewellery|windmill|nested")
        ->required();
    count->add_option("--n", n, "degree")->required()->check(CLI::NonNegativeNumber);
    count->add_option("--format", format, "plain|json (default plain)");

    auto *enumerate = app.add_subcommand("enumerate", "stream all structures of a class");
    enumerate->add_option("class", cls, "class name")->required();
    enumerate->add_option("--n", n, "degree")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--format", format, "jsonl|json (default jsonl)");
    enumerate->add_flag("--force", force, "lift the enumeration size cap");

    auto *map_cmd = app.add_subcommand("map", "apply a bijection to JSONL on stdin");
    map_cmd->add_option("bijection", bijection,
                        "stol|ltos|jtoseq|seqtoj|rtof|ftor|jtof|ftoj")
        ->required();
    map_cmd->add_option("--format", format, "jsonl|json (default jsonl)");

    auto *lyndon = app.add_subcommand("lyndon", "factorize a word into Lyndon factors");
    lyndon->add_option("word", word, "compact string (e.g. ababb) or JSON int array")
        ->required();
    lyndon->add_option("--format", format, "plain|json");

    auto *eval = app.add_subcommand("eval", "evaluate a class expression to counts");
    eval->add_option("expr", expr, "e.g. \"Set(Cyc(Set(X)+))\"")->required();
    eval->add_option("--order", order, "series truncation order (default 8)")
        ->check(CLI::NonNegativeNumber);
    eval->add_option("--format", format, "json|jsonl|plain (default json)");

    auto *verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--suite", suite, "egf|partitions|lyndon|seqcyc|trees|all");
    verify->add_option("--max-n,--n", max_n, "exhaustive size bound (default 5)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "seed for randomized round-trip sampling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        app.exit(e); // prints help/message
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) {
            const cc::Bigint value = class_count(canonical_class(cls), n);
            if (format == "json")
                std::cout << cc::Json(cc::to_decimal(value)).dump() << '\n';
            else
                std::cout << cc::to_decimal(value) << '\n';
            return 0;
        }
        if (enumerate->parsed()) {
            const std::string name = canonical_class(cls);
            const int cap = default_cap(name);
            if (!force && n > cap) {
                std::cerr << "error: degree " << n << " exceeds the cap " << cap
                          << " for '" << name << "'; pass --force or set COMBCLASS_MAX_N\n";
                return 2;
            }
            if (format == "json") {
                cc::Json arr = cc::Json::array();
                stream_class(name, n, [&](cc::Json j) { arr.push_back(std::move(j)); });
                std::cout << arr.dump() << '\n';
            } else {
                stream_class(name, n, [&](const cc::Json &j) { std::cout << j.dump() << '\n'; });
            }
            return 0;
        }
        if (map_cmd->parsed()) {
            if (format == "json") {
                cc::Json in = cc::Json::parse(std::cin);
                std::cout << map_structure(bijection, in).dump() << '\n';
            } else {
                std::string line;
                while (std::getline(std::cin, line)) {
                    if (line.empty())
                        continue;
                    std::cout << map_structure(bijection, cc::Json::parse(line)).dump()
                              << '\n';
                }
            }
            return 0;
        }
        if (lyndon->parsed()) {
            if (!word.empty() && word.front() == '[') {
                const cc::Json arr = cc::Json::parse(word);
                cc::Word<int> w = arr.get<std::vector<int>>();
                std::cout << cc::json_of(cc::cfl_factorize(w)).dump() << '\n';
            } else {
                cc::Word<char> w(word.begin(), word.end());
                const auto factors = cc::cfl_factorize(w);
                if (format == "json") {
                    // words are arrays of letters
                    cc::Json arr = cc::Json::array();
                    for (const auto &f : factors) {
                        cc::Json letters = cc::Json::array();
                        for (char ch : f)
                            letters.push_back(std::string(1, ch));
                        arr.push_back(letters);
                    }
                    std::cout << arr.dump() << '\n';
                } else {
                    for (std::size_t i = 0; i < factors.size(); ++i) {
                        if (i)
                            std::cout << '.';
                        std::cout << std::string(factors[i].begin(), factors[i].end());
                    }
                    std::cout << '\n';
                }
            }
            return 0;
        }
        if (eval->parsed()) {
            const cc::CountSeq s = cc::eval_class_expr(expr, order);
            if (format == "plain") {
                for (int i = 0; i <= s.order(); ++i)
                    std::cout << (i ? " " : "") << cc::to_decimal(s[i]);
                std::cout << '\n';
            } else if (format == "jsonl") {
                for (int i = 0; i <= s.order(); ++i)
                    std::cout << cc::to_decimal(s[i]) << '\n';
            } else {
                std::cout << cc::json_of(s).dump() << '\n';
            }
            return 0;
        }
        if (verify->parsed())
            return run_verify_command(suite, max_n, seed);
    } catch (const cc::ClassExprError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cc::Json::parse_error &e) {
        std::cerr << "error: malformed JSON input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
