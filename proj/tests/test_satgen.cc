#include <gskit/satgen.hh>
#include <gskit/search.hh>

#include "oracle.hh"

#include <doctest.h>

using namespace gskit;

namespace
{
    auto oracle_kind(Kind k) -> oracle::Kind
    {
        return k == Kind::Strong ? oracle::Kind::Strong : oracle::Kind::Weak;
    }

    /// Satisfiability by enumerating assignments. Only colorings need to be tried: the
    /// one-color clauses rule out every other assignment.
    auto brute_force_sat(const CnfDocument & doc) -> bool
    {
        bool sat = false;
        oracle::for_each_coloring(doc.n, doc.r, [&](const std::vector<int> & c) {
            if (! sat && satisfies(doc, induced_assignment(c, doc.r)))
                sat = true;
        });
        return sat;
    }
}

TEST_CASE("encode examples")
{
    auto rainbow = encode(3, 3, Kind::Strong, false);
    CHECK(rainbow.num_vars == 9);
    CHECK(! brute_force_sat(rainbow));

    auto b2 = encode(4, 2, Kind::Strong, false);
    CHECK(b2.num_vars == 8);
    CHECK(satisfies(b2, induced_assignment(parse_coloring("1221").colors(), 2)));
    CHECK(satisfies(b2, induced_assignment(parse_coloring("2112").colors(), 2)));
    CHECK(! satisfies(b2, induced_assignment(parse_coloring("1212").colors(), 2)));

    for (auto kind : {Kind::Strong, Kind::Weak}) {
        auto tiny = encode(1, 1, kind, true);
        CHECK(tiny.num_vars == 1);
        CHECK(satisfies(tiny, {false, true}));
        CHECK(! satisfies(tiny, {false, false}));
    }

    for (auto & doc : {encode(9, 3, Kind::Weak, true), encode(5, 4, Kind::Strong, false)})
        for (auto & clause : doc.clauses) {
            CHECK(! clause.empty());
            for (int lit : clause) {
                CHECK(lit != 0);
                CHECK(std::abs(lit) <= doc.num_vars);
            }
        }
}

TEST_CASE("variable map")
{
    auto doc = encode(5, 3, Kind::Strong, false);
    std::set<int> seen;
    for (int v = 1; v <= 5; ++v)
        for (int i = 1; i <= 3; ++i) {
            int x = doc.var(v, i);
            CHECK(x == (v - 1) * 3 + i);
            CHECK(doc.unvar(x) == std::pair{v, i});
            seen.insert(x);
        }
    CHECK(seen.size() == 15);
    CHECK(*seen.begin() == 1);
    CHECK(*seen.rbegin() == 15);
}

TEST_CASE("clause census")
{
    auto rainbow = clause_census(encode(3, 3, Kind::Strong, false));
    CHECK(rainbow.rainbow == 6);

    CHECK(clause_census(encode(4, 2, Kind::Strong, false)).rainbow == 0);

    auto nine = clause_census(encode(9, 3, Kind::Strong, false));
    REQUIRE(oracle::sum_pairs(9, false) == 20);
    REQUIRE(oracle::sum_pairs(9, true) == 16);
    CHECK(nine.one_color == 9 + 9 * 3);
    CHECK(nine.monochromatic == 60);
    CHECK(nine.rainbow == 96);
    CHECK(nine.color_used == 3);
    CHECK(nine.symmetry == 0);
    CHECK(nine.total() == 195);

    for (int n = 1; n <= 12; ++n)
        for (int r = 1; r <= 5; ++r)
            for (auto kind : {Kind::Strong, Kind::Weak}) {
                auto census = clause_census(encode(n, r, kind, true));
                std::uint64_t rr = static_cast<std::uint64_t>(r);
                CHECK(census.one_color == n + n * rr * (rr - 1) / 2);
                CHECK(census.monochromatic == oracle::sum_pairs(n, kind == Kind::Weak) * rr);
                CHECK(census.rainbow == oracle::sum_pairs(n, true) * rr * (rr - 1) * (rr - 2));
                CHECK(census.color_used == rr);
                CHECK(census.symmetry == 1 + static_cast<std::uint64_t>(n) * (rr - 1));
            }
}

TEST_CASE("encoding is equivalent to the verifier")
{
    for (auto kind : {Kind::Strong, Kind::Weak})
        for (int r = 1; r <= 3; ++r)
            for (int n = 1; n <= 6; ++n) {
                auto plain = encode(n, r, kind, false);
                auto sym = encode(n, r, kind, true);
                oracle::for_each_coloring(n, r, [&](const std::vector<int> & c) {
                    bool expected = oracle::is_partition(c, r, oracle_kind(kind));
                    auto assignment = induced_assignment(c, r);
                    CHECK(satisfies(plain, assignment) == expected);
                    CHECK(satisfies(sym, assignment) == (expected && oracle::canonical(c) == c));
                });
            }
}

TEST_CASE("symmetry clauses keep satisfiability")
{
    for (auto kind : {Kind::Strong, Kind::Weak})
        for (int r = 1; r <= 3; ++r)
            for (int n = 1; n <= 10; ++n) {
                bool with = brute_force_sat(encode(n, r, kind, true));
                bool without = brute_force_sat(encode(n, r, kind, false));
                bool searched = ! exists_partition(SearchConfig{kind, r, n}).witnesses.empty();
                CAPTURE(n);
                CHECK(with == without);
                CHECK(with == searched);
            }
}

TEST_CASE("decode")
{
    std::vector<int> model{1, -2, -3, 4, -5, 6, 7, -8};
    CHECK(decode(model, 4, 2).compact() == "1221");

    std::vector<int> none{-1, -2, -3, -4, -5, -6, -7, -8};
    CHECK_THROWS_AS(decode(none, 4, 2), DecodeError);
    std::vector<int> twice{1, 2, -3, 4, -5, 6, 7, -8};
    CHECK_THROWS_AS(decode(twice, 4, 2), DecodeError);
    std::vector<int> outside{1, 4, 6, 7, 9};
    CHECK_THROWS_AS(decode(outside, 4, 2), DecodeError);

    // the search stands in for a solver: its witnesses are models, and decode recovers them
    for (auto & [n, r, kind] : std::vector<std::tuple<int, int, Kind>>{{9, 3, Kind::Strong}, {17, 3, Kind::Weak}, {8, 2, Kind::Weak}}) {
        auto doc = encode(n, r, kind, true);
        auto report = exists_partition(SearchConfig{kind, r, n, SearchMode::EnumerateAll});
        REQUIRE(! report.witnesses.empty());
        for (auto & w : report.witnesses) {
            auto lits = model_of(w, r);
            std::vector<bool> assignment(static_cast<std::size_t>(doc.num_vars) + 1, false);
            for (int lit : lits)
                if (lit > 0)
                    assignment[static_cast<std::size_t>(lit)] = true;
            CHECK(satisfies(doc, assignment));
            auto back = decode(lits, n, r);
            CHECK(back == w);
            CHECK(check_partition(back, kind).ok);
        }
    }
}

TEST_CASE("solver output parsing")
{
    auto out = parse_solver_output("c comment\ns SATISFIABLE\nv 1 -2 -3 4\nv -5 6 7 -8 0\n");
    CHECK(out.satisfiable == true);
    CHECK(out.literals == std::vector<int>{1, -2, -3, 4, -5, 6, 7, -8});

    CHECK(parse_solver_output("s UNSATISFIABLE\n").satisfiable == false);
    CHECK(! parse_solver_output("v 1 0\n").satisfiable.has_value());
    CHECK_THROWS_AS(parse_solver_output("v 1 x 0\n"), DecodeError);
    CHECK_THROWS_AS(parse_solver_output("1 2 0\n"), DecodeError);
    CHECK_THROWS_AS(parse_solver_output("v 1 0 2\n"), DecodeError);
}

TEST_CASE("dimacs text")
{
    auto text = to_dimacs(encode(2, 1, Kind::Weak, false));
    CHECK(text ==
        "c gskit gallai-schur encoding\n"
        "c n=2 r=1 kind=weak symmetry=0\n"
        "c variable (v-1)*1+i is true iff integer v has color i\n"
        "p cnf 2 3\n"
        "1 0\n"
        "2 0\n"
        "1 2 0\n");
}
