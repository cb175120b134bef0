#include "tourney/linalg.hpp"

#include <algorithm>

namespace tourney {

namespace {

Int128 checked_mul(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("Overflow", "128-bit product overflow");
    return r;
}

}  // namespace

std::string to_string(Int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u) {
        s += static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    if (neg) s += '-';
    std::reverse(s.begin(), s.end());
    return s;
}

// Fraction-free (Bareiss) elimination: every intermediate entry is a minor
// of the original matrix, so the division by the previous pivot is exact.
Int128 determinant(const Tournament& t) {
    const int n = t.n;
    Int128 a[kMaxOrder][kMaxOrder];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = t.beats(i, j) ? 1 : 0;

    int sign = 1;
    Int128 prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) {
                pivot = i;
                break;
            }
        if (pivot == -1) return 0;  // zero column below the diagonal
        if (pivot != k) {
            std::swap_ranges(a[k], a[k] + n, a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (checked_mul(a[i][j], a[k][k]) - checked_mul(a[i][k], a[k][j])) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool is_singular(const Tournament& t) { return determinant(t) == 0; }

Tournament subtournament(const Tournament& t, const std::vector<int>& keep) {
    if (keep.empty()) throw Error("EmptySet", "subtournament on no vertices");
    Tournament r;
    r.n = static_cast<int>(keep.size());
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j)
            if (i != j && t.beats(keep[i], keep[j])) r.rows[i] |= uint32_t{1} << j;
    return r;
}

Int128 det_via_scc(const Tournament& t, const SccDecomposition& d) {
    // Validate the decomposition against t before trusting it.
    std::vector<bool> seen(t.n, false);
    size_t total = 0;
    for (const auto& comp : d.components) {
        total += comp.size();
        for (int v : comp) {
            if (v < 0 || v >= t.n || seen[v])
                throw Error("DecompositionMismatch", "components do not partition the vertices");
            seen[v] = true;
        }
    }
    if (total != static_cast<size_t>(t.n))
        throw Error("DecompositionMismatch", "components do not cover all vertices");
    for (size_t a = 0; a < d.count(); ++a) {
        if (!is_strong(subtournament(t, d.components[a])))
            throw Error("DecompositionMismatch", "component is not strongly connected");
        for (size_t b = a + 1; b < d.count(); ++b)
            for (int u : d.components[a])
                for (int v : d.components[b])
                    if (!t.beats(u, v))
                        throw Error("DecompositionMismatch", "dominance order violated");
    }

    Int128 prod = 1;
    for (const auto& comp : d.components)
        prod = checked_mul(prod, determinant(subtournament(t, comp)));
    return prod;
}

std::set<long long> subdeterminant_spectrum(const Tournament& t) {
    if (t.n > 12) throw Error("OrderTooLarge", "sub-spectrum limited to n <= 12");
    std::set<long long> values;
    for (uint32_t mask = 1; mask < (uint32_t{1} << t.n); ++mask) {
        std::vector<int> keep;
        for (int v = 0; v < t.n; ++v)
            if (mask & (uint32_t{1} << v)) keep.push_back(v);
        values.insert(static_cast<long long>(determinant(subtournament(t, keep))));
    }
    return values;
}

}  // namespace tourney
