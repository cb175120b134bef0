#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "tourney/fixtures.hpp"
#include "tourney/linalg.hpp"
#include "tourney/structure.hpp"
#include "tourney/tournament.hpp"

using namespace tourney;

TEST_CASE("determinants of the published matrices") {
    CHECK(determinant(fixtures::f1()) == 1);
    CHECK(determinant(fixtures::f2()) == -1);
    CHECK(determinant(fixtures::f3()) == 1);
    CHECK(determinant(fixtures::f4()) == 1);
    // The first transcribed order-7 matrix is nonsingular; cross-checked
    // against cofactor expansion below and in the fixtures table.
    const auto& s7 = fixtures::s7_maximizers();
    CHECK(determinant(s7[0]) == 1);
    CHECK(determinant(s7[1]) == 0);
    CHECK(determinant(s7[2]) == 0);
    CHECK(static_cast<long long>(determinant(s7[0])) == testutil::cofactor_det(s7[0]));
    for (int n = 1; n <= 12; ++n) CHECK(determinant(construct_transitive(n)) == 0);
}

TEST_CASE("fraction-free elimination agrees with cofactor expansion, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const Tournament& t : testutil::all_labeled(n))
            CHECK(static_cast<long long>(determinant(t)) == testutil::cofactor_det(t));
}

TEST_CASE("determinant is invariant under relabeling") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const Tournament t = testutil::random_tournament(n, rng);
        const Tournament r = relabel(t, testutil::random_permutation(n, rng));
        CHECK(determinant(t) == determinant(r));
    }
}

TEST_CASE("is_singular") {
    CHECK(is_singular(Tournament{}));
    CHECK_FALSE(is_singular(fixtures::f1()));
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        const Tournament t = testutil::random_tournament(2 + rng() % 10, rng);
        CHECK(is_singular(add_sink(t)));
        CHECK(is_singular(add_source(t)));
    }
}

TEST_CASE("det_via_scc") {
    const Tournament sink = add_sink(fixtures::f1());
    CHECK(det_via_scc(sink, scc(sink)) == 0);

    CHECK(det_via_scc(fixtures::f2(), scc(fixtures::f2())) == determinant(fixtures::f2()));

    // Two 3-cycles, the first beating the second: det 1 * 1 = 1.
    Tournament pair;
    pair.n = 6;
    const Tournament& f1 = fixtures::f1();
    for (int i = 0; i < 3; ++i) {
        pair.rows[i] = f1.rows[i];
        pair.rows[3 + i] = f1.rows[i] << 3;
        for (int j = 3; j < 6; ++j) pair.rows[i] |= uint32_t{1} << j;
    }
    validate(pair);
    CHECK(det_via_scc(pair, scc(pair)) == 1);
    CHECK(determinant(pair) == 1);

    SccDecomposition bogus;
    bogus.components = {{0, 1}, {2, 3, 4, 5}};
    CHECK_THROWS_WITH_AS(det_via_scc(pair, bogus), doctest::Contains("DecompositionMismatch"),
                         Error);
}

TEST_CASE("SCC factorization, exhaustive n <= 6 and randomized n <= 12") {
    for (int n = 1; n <= 6; ++n)
        for (const Tournament& t : testutil::all_labeled(n))
            CHECK(determinant(t) == det_via_scc(t, scc(t)));
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10000; ++trial) {
        const Tournament t = testutil::random_tournament(2 + rng() % 11, rng);
        CHECK(determinant(t) == det_via_scc(t, scc(t)));
    }
}

TEST_CASE("singularity corollaries, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Tournament& t : testutil::all_labeled(n)) {
            const auto d = scc(t);
            bool any_singular = false;
            for (const auto& comp : d.components)
                any_singular |= is_singular(subtournament(t, comp));
            CHECK(is_singular(t) == any_singular);
            if (!is_singular(t))
                for (const auto& comp : d.components) CHECK(comp.size() >= 3);
        }
}

TEST_CASE("subtournament") {
    CHECK(subtournament(fixtures::f3(), {0, 1, 2, 3, 4}) == fixtures::f3());
    const Tournament cut = subtournament(fixtures::f3(), {0, 1, 2, 3});
    CHECK(score_vector(cut).sorted == std::vector<int>{1, 1, 2, 2});
    const Tournament arc = subtournament(fixtures::f1(), {0, 1});
    CHECK(arc.beats(0, 1));
    CHECK_THROWS_WITH_AS(subtournament(fixtures::f1(), {}), doctest::Contains("EmptySet"),
                         Error);
}

TEST_CASE("subdeterminant spectrum") {
    CHECK(subdeterminant_spectrum(fixtures::f1()) == std::set<long long>{0, 1});
    const auto f2_spec = subdeterminant_spectrum(fixtures::f2());
    for (long long v : f2_spec) CHECK((v >= -1 && v <= 1));
    CHECK(subdeterminant_spectrum(construct_transitive(4)) == std::set<long long>{0});
    CHECK_THROWS_WITH_AS(subdeterminant_spectrum(construct_transitive(13)),
                         doctest::Contains("OrderTooLarge"), Error);
}
