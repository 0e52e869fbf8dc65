#include <gskit/search.hh>

#include "oracle.hh"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace gskit;

namespace
{
    auto oracle_kind(Kind k) -> oracle::Kind
    {
        return k == Kind::Strong ? oracle::Kind::Strong : oracle::Kind::Weak;
    }

    auto strings(const std::vector<Coloring> & cs) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (auto & c : cs)
            out.push_back(c.compact());
        return out;
    }

    auto as_set(const std::vector<Coloring> & cs) -> std::set<std::vector<int>>
    {
        std::set<std::vector<int>> out;
        for (auto & c : cs)
            out.emplace(c.colors().begin(), c.colors().end());
        return out;
    }
}

TEST_CASE("exists_partition examples")
{
    auto b2 = exists_partition(SearchConfig{Kind::Strong, 2, 4});
    REQUIRE(b2.witnesses.size() == 1);
    CHECK(b2.witnesses[0].compact() == "1221");
    CHECK(b2.exhausted);

    auto five = exists_partition(SearchConfig{Kind::Strong, 2, 5});
    CHECK(five.witnesses.empty());
    CHECK(five.exhausted);

    auto weak18 = exists_partition(SearchConfig{Kind::Weak, 3, 18});
    CHECK(weak18.witnesses.empty());
    CHECK(weak18.exhausted);

    for (auto mode : {SearchMode::FirstWitness, SearchMode::EnumerateAll}) {
        auto rainbow = exists_partition(SearchConfig{Kind::Strong, 3, 3, mode});
        CHECK(rainbow.witnesses.empty());
        CHECK(rainbow.exhausted);
    }

    // fewer integers than colors simply fails the all-colors test
    CHECK(exists_partition(SearchConfig{Kind::Weak, 4, 2}).witnesses.empty());
}

TEST_CASE("max_order examples")
{
    auto s3 = max_order(Kind::Strong, 3, 20);
    CHECK(s3.m_max == 9);
    CHECK(s3.confirmed);

    auto w2 = max_order(Kind::Weak, 2, 15);
    CHECK(w2.m_max == 8);
    CHECK(w2.confirmed);

    auto s4 = max_order(Kind::Strong, 4, 30);
    CHECK(s4.m_max == 24);
    CHECK(s4.confirmed);

    // the streak does not fit below the limit
    auto tight = max_order(Kind::Strong, 3, 12);
    CHECK(tight.m_max == 9);
    CHECK(! tight.confirmed);

    SearchOptions longer;
    longer.infeasibility_streak = 12;
    CHECK(! max_order(Kind::Strong, 3, 20, longer).confirmed);
    CHECK(max_order(Kind::Strong, 3, 20, longer).m_max == 9);
}

TEST_CASE("max_order agrees with per-order existence")
{
    for (auto kind : {Kind::Strong, Kind::Weak})
        for (int r = 1; r <= 4; ++r) {
            auto report = max_order(kind, r, 50);
            std::vector<int> expected;
            for (int n = 1; n <= 50; ++n)
                if (! exists_partition(SearchConfig{kind, r, n}).witnesses.empty())
                    expected.push_back(n);
            CHECK(report.feasible_orders == expected);
        }
}

TEST_CASE("enumerate_maximal examples")
{
    CHECK(strings(enumerate_maximal(Kind::Strong, 2)) == std::vector<std::string>{"1221"});
    CHECK(strings(enumerate_maximal(Kind::Strong, 3)) == std::vector<std::string>{"121313121", "122131221"});
    CHECK(strings(enumerate_maximal(Kind::Weak, 3)) == std::vector<std::string>{"12121312131313121"});
    CHECK(strings(enumerate_maximal(Kind::Weak, 2)) == std::vector<std::string>{"11212221"});
}

TEST_CASE("enumeration matches brute force on small instances")
{
    for (auto kind : {Kind::Strong, Kind::Weak})
        for (int r = 1; r <= 3; ++r)
            for (int n = 1; n <= 9; ++n) {
                CAPTURE(n);
                CAPTURE(r);
                auto report = exists_partition(SearchConfig{kind, r, n, SearchMode::EnumerateAll});
                CHECK(as_set(report.witnesses) == oracle::all_partitions(n, r, oracle_kind(kind)));
                for (auto & w : report.witnesses) {
                    CHECK(check_partition(w, kind).ok);
                    CHECK(is_canonical(w));
                }
                CHECK(std::is_sorted(report.witnesses.begin(), report.witnesses.end()));

                // every accepted raw coloring canonicalizes onto a witness
                oracle::for_each_coloring(n, r, [&](const std::vector<int> & raw) {
                    if (oracle::is_partition(raw, r, oracle_kind(kind)))
                        CHECK(as_set(report.witnesses).count(oracle::canonical(raw)) == 1);
                });
            }
}

TEST_CASE("split prefixes")
{
    SearchConfig cfg{Kind::Strong, 4, 24, SearchMode::EnumerateAll};

    auto whole = parallel_split(cfg, 0);
    REQUIRE(whole.tasks.size() == 1);
    CHECK(whole.tasks[0].prefix.empty());

    auto one = parallel_split(cfg, 1);
    REQUIRE(one.tasks.size() == 1);
    CHECK(one.tasks[0].prefix == std::vector<int>{1});

    auto five = parallel_split(cfg, 5);
    std::set<std::string> prefixes;
    for (auto & t : five.tasks)
        prefixes.insert(oracle::digits(t.prefix));
    CHECK(prefixes.count("12213") == 1);
    CHECK(prefixes.count("12131") == 1);

    // the tasks partition the tree: node counts and witnesses add up to the sequential run
    auto sequential = exists_partition(cfg);
    for (int depth : {0, 1, 3, 5, 8, 12, 24}) {
        auto plan = parallel_split(cfg, depth);
        std::uint64_t nodes = plan.trailing_nodes;
        std::vector<Coloring> found;
        for (auto & t : plan.tasks) {
            auto sub = run_subtree(cfg, t);
            nodes += t.split_nodes + sub.nodes_explored;
            found.insert(found.end(), sub.witnesses.begin(), sub.witnesses.end());
        }
        CAPTURE(depth);
        CHECK(nodes == sequential.nodes_explored);
        CHECK(found == sequential.witnesses);
    }
}

TEST_CASE("admissible prefixes are exactly the canonical prefixes without a bad sum")
{
    // n is large enough that the colors-still-fit pruning never applies at these depths
    for (auto kind : {Kind::Strong, Kind::Weak})
        for (int r = 2; r <= 4; ++r)
            for (int depth = 1; depth <= 8; ++depth) {
                SearchConfig cfg{kind, r, 40, SearchMode::EnumerateAll};
                std::set<std::vector<int>> produced;
                for (auto & t : parallel_split(cfg, depth).tasks)
                    produced.insert(t.prefix);

                std::set<std::vector<int>> expected;
                oracle::for_each_coloring(depth, r, [&](const std::vector<int> & raw) {
                    if (oracle::canonical(raw) == raw && oracle::bad_triples(raw, oracle_kind(kind)).empty())
                        expected.insert(raw);
                });
                CAPTURE(depth);
                CHECK(produced == expected);
            }
}

TEST_CASE("parallel results are identical to sequential ones")
{
    for (auto kind : {Kind::Strong, Kind::Weak})
        for (auto mode : {SearchMode::FirstWitness, SearchMode::EnumerateAll})
            for (int n : {9, 17, 24, 30}) {
                SearchConfig cfg{kind, 4, n, mode};
                auto reference = report_to_json(exists_partition(cfg));
                for (int workers : {2, 3, 8})
                    for (int depth : {1, 4, 9}) {
                        cfg.options.workers = workers;
                        cfg.options.split_depth = depth;
                        CHECK(report_to_json(exists_partition(cfg)) == reference);
                    }
            }

    SearchOptions parallel;
    parallel.workers = 4;
    parallel.split_depth = 6;
    CHECK(report_to_json(max_order(Kind::Weak, 4, 60, parallel)) == report_to_json(max_order(Kind::Weak, 4, 60)));
}

TEST_CASE("budgets mark the result inconclusive")
{
    SearchConfig cfg{Kind::Weak, 4, 44, SearchMode::EnumerateAll};
    cfg.options.node_budget = 10;
    auto report = exists_partition(cfg);
    CHECK(! report.exhausted);

    SearchOptions tiny;
    tiny.node_budget = 5;
    CHECK(! max_order(Kind::Strong, 4, 40, tiny).exhausted);
    CHECK(! max_order(Kind::Strong, 4, 40, tiny).confirmed);
    CHECK_THROWS_AS(enumerate_maximal(Kind::Strong, 4, tiny), PartialEnumeration);

    SearchConfig plenty{Kind::Strong, 2, 5};
    plenty.options.node_budget = 1000000;
    CHECK(exists_partition(plenty).exhausted);
}

TEST_CASE("report json")
{
    auto report = exists_partition(SearchConfig{Kind::Strong, 2, 4, SearchMode::EnumerateAll});
    CHECK(report_to_json(report) ==
        R"({"kind":"strong","r":2,"n":4,"witnesses":["1221"],"nodes":)" + std::to_string(report.nodes_explored) +
            R"(,"exhausted":true})");
}

TEST_CASE("argument validation")
{
    CHECK_THROWS_AS(exists_partition(SearchConfig{Kind::Strong, 0, 4}), std::invalid_argument);
    CHECK_THROWS_AS(exists_partition(SearchConfig{Kind::Strong, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(exists_partition(SearchConfig{Kind::Strong, 2, max_search_order + 1}), std::invalid_argument);
    CHECK_THROWS_AS(max_order(Kind::Strong, max_search_colors + 1, 10), std::invalid_argument);
}

TEST_CASE("orders beyond one machine word")
{
    // exercises the multi-word bitsets
    auto s5 = max_order(Kind::Strong, 5, 100);
    CHECK(s5.m_max == 49);
    CHECK(s5.confirmed);
    auto w5 = exists_partition(SearchConfig{Kind::Weak, 5, 89});
    REQUIRE(w5.witnesses.size() == 1);
    CHECK(check_partition(w5.witnesses[0], Kind::Weak).ok);
    auto s6 = exists_partition(SearchConfig{Kind::Strong, 6, 124, SearchMode::EnumerateAll});
    CHECK(s6.witnesses.size() >= 1);
    for (auto & w : s6.witnesses)
        CHECK(check_partition(w, Kind::Strong).ok);
    CHECK(exists_partition(SearchConfig{Kind::Strong, 6, 125}).witnesses.empty());
}
