#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tourney/cycles.hpp"
#include "tourney/fixtures.hpp"
#include "tourney/linalg.hpp"
#include "tourney/structure.hpp"
#include "tourney/tournament.hpp"

using namespace tourney;

TEST_CASE("scc on simple shapes") {
    CHECK(scc(fixtures::f1()).components == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(scc(add_sink(fixtures::f1())).components ==
          std::vector<std::vector<int>>{{0, 1, 2}, {3}});
    // Transitive: singletons in score-descending order.
    CHECK(scc(construct_transitive(4)).components ==
          std::vector<std::vector<int>>{{3}, {2}, {1}, {0}});
}

TEST_CASE("scc invariants, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Tournament& t : testutil::all_labeled(n)) {
            const auto d = scc(t);
            size_t total = 0;
            for (size_t a = 0; a < d.count(); ++a) {
                total += d.components[a].size();
                CHECK(d.components[a].size() != 2);
                CHECK(std::is_sorted(d.components[a].begin(), d.components[a].end()));
                CHECK(is_strong(subtournament(t, d.components[a])));
                for (size_t b = a + 1; b < d.count(); ++b)
                    for (int u : d.components[a])
                        for (int v : d.components[b]) CHECK(t.beats(u, v));
            }
            CHECK(total == static_cast<size_t>(n));
        }
}

TEST_CASE("recognizers") {
    CHECK(is_regular(construct_regular(7)));
    CHECK_FALSE(is_regular(construct_almost_regular(6)));
    CHECK(is_almost_regular(construct_almost_regular(6)));
    CHECK_FALSE(is_almost_regular(construct_regular(7)));  // odd order
    CHECK(is_strong(fixtures::f2()));
    CHECK(is_transitive(construct_transitive(6)));
    CHECK_FALSE(is_transitive(fixtures::f1()));
}

TEST_CASE("zero 3-cycles matches the arc-triple definition of transitive, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Tournament& t : testutil::all_labeled(n)) {
            bool by_arcs = true;
            for (int u = 0; u < n && by_arcs; ++u)
                for (int v = 0; v < n && by_arcs; ++v)
                    for (int w = 0; w < n && by_arcs; ++w)
                        if (u != v && v != w && u != w && t.beats(u, v) && t.beats(v, w) &&
                            !t.beats(u, w))
                            by_arcs = false;
            CHECK(is_transitive(t) == by_arcs);
        }
}

TEST_CASE("is_upset") {
    CHECK(is_upset(fixtures::f3()));
    CHECK(is_upset(fixtures::f4()));
    CHECK_FALSE(is_upset(construct_regular(5)));
    CHECK_FALSE(is_upset(construct_transitive(5)));
    for (int n = 3; n <= 32; ++n) CHECK(is_upset(construct_upset(n)));
    CHECK_THROWS_WITH_AS(is_upset(construct_transitive(2)),
                         doctest::Contains("OrderOutOfRange"), Error);
}

TEST_CASE("classify_singular_maximizer") {
    SUBCASE("sink over the regular 5-tournament") {
        const auto cls = classify_singular_maximizer(add_sink(construct_regular(5)), 5);
        CHECK(cls.tag == MaximizerTag::TrivialSink);
        REQUIRE(cls.base.has_value());
        CHECK(is_regular(*cls.base));
    }
    SUBCASE("source over the almost regular 6-tournament") {
        const auto cls = classify_singular_maximizer(add_source(construct_almost_regular(6)), 8);
        CHECK(cls.tag == MaximizerTag::TrivialSource);
        REQUIRE(cls.base.has_value());
        CHECK(is_almost_regular(*cls.base));
    }
    SUBCASE("the singular order-7 reference matrices are nontrivial") {
        const auto& s7 = fixtures::s7_maximizers();
        CHECK(classify_singular_maximizer(s7[1], 8).tag == MaximizerTag::Nontrivial);
        CHECK(classify_singular_maximizer(s7[2], 8).tag == MaximizerTag::Nontrivial);
        // The first reference matrix is nonsingular, so it is rejected.
        CHECK_THROWS_WITH_AS(classify_singular_maximizer(s7[0], 8),
                             doctest::Contains("NotSingular"), Error);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_WITH_AS(classify_singular_maximizer(fixtures::f1(), 1),
                             doctest::Contains("NotSingular"), Error);
        CHECK_THROWS_WITH_AS(classify_singular_maximizer(construct_transitive(4), 1),
                             doctest::Contains("NotMaximizer"), Error);
    }
}
