// fixtures.hpp -- the published reference matrices F1-F4 and the three
// order-7 singular maximizers

#pragma once

#include <array>
#include <string>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney::fixtures {

const Tournament& f1();  // unique class with scores (1,1,1)
const Tournament& f2();  // unique class with scores (1,1,2,2)
const Tournament& f3();  // scores (1,1,2,3,3)
const Tournament& f4();  // scores (1,1,2,3,3), not isomorphic to f3
const std::array<Tournament, 3>& s7_maximizers();

struct FixtureRecord {
    std::string name;
    const Tournament* t;
    long long c3;
    long long det;
    std::vector<int> sorted_scores;
};

/// All 7 fixtures with their locked values.
std::vector<FixtureRecord> all();

}  // namespace tourney::fixtures
