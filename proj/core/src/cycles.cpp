#include "tourney/cycles.hpp"

#include <numeric>

namespace tourney {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw Error("ZeroDenominator", "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long c3_from_scores(const ScoreVector& s) {
    const int n = s.order();
    long long total = binom(n, 3);
    for (int d : s.raw) total -= binom(d, 2);
    return total;
}

long long c3_direct(const Tournament& t) {
    long long count = 0;
    for (int i = 0; i < t.n; ++i)
        for (int j = i + 1; j < t.n; ++j)
            for (int k = j + 1; k < t.n; ++k) {
                const bool cw = t.beats(i, j) && t.beats(j, k) && t.beats(k, i);
                const bool ccw = t.beats(i, k) && t.beats(k, j) && t.beats(j, i);
                if (cw || ccw) ++count;
            }
    return count;
}

long long reversal_delta(const ScoreVector& s, int i, int j) {
    if (i == j) throw Error("SameVertex", "i == j == " + std::to_string(i));
    return s.raw[i] - s.raw[j] - 1;
}

long long moon_bound(int n) {
    if (n % 2 == 1) return binom(n + 1, 3) / 4;
    return 2 * binom(n / 2 + 1, 3);
}

Rational shader_threshold(int n) { return Rational(binom(n, 3), 4); }

bool within_shader_bound(int n, long long c3) { return 4 * c3 <= binom(n, 3); }

}  // namespace tourney
