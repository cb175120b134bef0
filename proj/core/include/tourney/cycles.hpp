// cycles.hpp -- 3-cycle counting and the Moon / Shader bounds

#pragma once

#include <cstdint>
#include <string>

#include "tourney/tournament.hpp"

namespace tourney {

/// Exact rational, always kept in lowest terms with a positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

long long binom(int n, int k);

/// C(n,3) - sum C(s_i,2), the score-vector count of directed 3-cycles.
long long c3_from_scores(const ScoreVector& s);

/// Independent oracle: walks all triples i < j < k and tests the two cyclic
/// orientations by bit lookups. Deliberately shares no code with
/// c3_from_scores.
long long c3_direct(const Tournament& t);

/// Change in C3 when the existing arc i -> j is reversed: s_i - s_j - 1.
long long reversal_delta(const ScoreVector& s, int i, int j);

/// Maximum C3 over all order-n tournaments: C(n+1,3)/4 for odd n,
/// 2*C(n/2+1,3) for even n. Always an integer.
long long moon_bound(int n);

/// The exact rational C(n,3)/4. Singular tournament matrices never exceed it.
Rational shader_threshold(int n);

/// True iff c3 <= C(n,3)/4, compared in exact integer arithmetic.
bool within_shader_bound(int n, long long c3);

}  // namespace tourney
