#include "tourney/fixtures.hpp"

namespace tourney::fixtures {

namespace {

Tournament make(const char* text) { return from_matrix_text(text); }

}  // namespace

const Tournament& f1() {
    static const Tournament t = make(
        "010\n"
        "001\n"
        "100\n");
    return t;
}

const Tournament& f2() {
    static const Tournament t = make(
        "0100\n"
        "0010\n"
        "1001\n"
        "1100\n");
    return t;
}

const Tournament& f3() {
    static const Tournament t = make(
        "01000\n"
        "00100\n"
        "10010\n"
        "11001\n"
        "11100\n");
    return t;
}

const Tournament& f4() {
    static const Tournament t = make(
        "01000\n"
        "00010\n"
        "11000\n"
        "10101\n"
        "11100\n");
    return t;
}

const std::array<Tournament, 3>& s7_maximizers() {
    static const std::array<Tournament, 3> m = {
        make("0100000\n"
             "0010010\n"
             "1001000\n"
             "1100100\n"
             "1110010\n"
             "1011001\n"
             "1111100\n"),
        make("0010000\n"
             "1000010\n"
             "0101000\n"
             "1100100\n"
             "1110010\n"
             "1011001\n"
             "1111100\n"),
        make("0010000\n"
             "1001000\n"
             "0100010\n"
             "1010100\n"
             "1110001\n"
             "1101100\n"
             "1111010\n"),
    };
    return m;
}

std::vector<FixtureRecord> all() {
    const auto& s7 = s7_maximizers();
    return {
        {"F1", &f1(), 1, 1, {1, 1, 1}},
        {"F2", &f2(), 2, -1, {1, 1, 2, 2}},
        {"F3", &f3(), 3, 1, {1, 1, 2, 3, 3}},
        {"F4", &f4(), 3, 1, {1, 1, 2, 3, 3}},
        // S7a is nonsingular (det 1): of the three transcribed order-7
        // matrices only the last two are singular maximizers.
        {"S7a", &s7[0], 8, 1, {1, 2, 2, 3, 4, 4, 5}},
        {"S7b", &s7[1], 8, 0, {1, 2, 2, 3, 4, 4, 5}},
        {"S7c", &s7[2], 8, 0, {1, 2, 2, 3, 4, 4, 5}},
    };
}

}  // namespace tourney::fixtures
