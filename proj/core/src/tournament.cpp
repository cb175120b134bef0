#include "tourney/tournament.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace tourney {

namespace {

void check_order(int n, int lo = 1) {
    if (n < lo || n > kMaxOrder)
        throw Error("OrderOutOfRange",
                    "order " + std::to_string(n) + " not in [" +
                        std::to_string(lo) + ", " + std::to_string(kMaxOrder) + "]");
}

uint32_t row_mask(int n) {
    return n == 32 ? 0xffffffffu : (uint32_t{1} << n) - 1;
}

}  // namespace

int Tournament::out_degree(int i) const { return std::popcount(rows[i]); }

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int n, int i, int j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

void validate(const Tournament& t) {
    check_order(t.n);
    const uint32_t mask = row_mask(t.n);
    for (int i = 0; i < t.n; ++i) {
        if (t.rows[i] & ~mask)
            throw Error("NotTournament", "row " + std::to_string(i) + " has bits past order");
        if (t.beats(i, i))
            throw Error("NotTournament", "nonzero diagonal at " + std::to_string(i));
    }
    for (int i = 0; i < t.n; ++i)
        for (int j = i + 1; j < t.n; ++j)
            if (t.beats(i, j) == t.beats(j, i))
                throw Error("NotTournament", "pair (" + std::to_string(i) + "," +
                                                 std::to_string(j) + ") has arc sum != 1");
    for (int i = t.n; i < kMaxOrder; ++i)
        if (t.rows[i])
            throw Error("NotTournament", "nonzero row past order");
}

Tournament from_matrix_text(const std::string& text) {
    std::vector<std::vector<int>> grid;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<int> row;
        for (char c : line) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (c == '0' || c == '1')
                row.push_back(c - '0');
            else
                throw Error("BadChar", std::string("unexpected character '") + c + "'");
        }
        if (!row.empty()) grid.push_back(std::move(row));
    }
    const int n = static_cast<int>(grid.size());
    check_order(n);
    for (const auto& row : grid)
        if (static_cast<int>(row.size()) != n)
            throw Error("NonSquare", "line count " + std::to_string(n) +
                                         " != line length " + std::to_string(row.size()));
    Tournament t;
    t.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (grid[i][j]) t.rows[i] |= uint32_t{1} << j;
    validate(t);
    return t;
}

std::string to_matrix_text(const Tournament& t) {
    std::string out;
    for (int i = 0; i < t.n; ++i) {
        for (int j = 0; j < t.n; ++j) out += t.beats(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

ScoreVector score_vector(const Tournament& t) {
    ScoreVector s;
    s.raw.reserve(t.n);
    for (int i = 0; i < t.n; ++i) s.raw.push_back(t.out_degree(i));
    s.sorted = s.raw;
    std::sort(s.sorted.begin(), s.sorted.end());
    return s;
}

Tournament construct_transitive(int n) {
    check_order(n);
    Tournament t;
    t.n = n;
    for (int i = 0; i < n; ++i) t.rows[i] = row_mask(i);  // i beats all j < i
    return t;
}

Tournament construct_upset(int n) {
    check_order(n, 3);
    return reverse_arc(construct_transitive(n), n - 1, 0);
}

Tournament construct_regular(int n) {
    check_order(n);
    if (n % 2 == 0) throw Error("EvenOrder", "regular tournaments have odd order");
    Tournament t;
    t.n = n;
    for (int i = 0; i < n; ++i)
        for (int k = 1; k <= (n - 1) / 2; ++k)
            t.rows[i] |= uint32_t{1} << ((i + k) % n);
    return t;
}

Tournament construct_almost_regular(int n) {
    check_order(n);
    if (n % 2 != 0) throw Error("OddOrder", "almost regular tournaments have even order");
    Tournament t;
    t.n = n;
    for (int i = 0; i < n; ++i)
        for (int k = 1; k <= n / 2 - 1; ++k)
            t.rows[i] |= uint32_t{1} << ((i + k) % n);
    for (int i = 0; i < n / 2; ++i) t.rows[i] |= uint32_t{1} << (i + n / 2);
    return t;
}

Tournament add_sink(const Tournament& t) {
    check_order(t.n + 1);
    Tournament r = t;
    r.n = t.n + 1;
    for (int i = 0; i < t.n; ++i) r.rows[i] |= uint32_t{1} << t.n;
    r.rows[t.n] = 0;
    return r;
}

Tournament add_source(const Tournament& t) {
    check_order(t.n + 1);
    Tournament r = t;
    r.n = t.n + 1;
    r.rows[t.n] = row_mask(t.n);
    return r;
}

Tournament reverse_arc(const Tournament& t, int i, int j) {
    if (i == j) throw Error("SameVertex", "i == j == " + std::to_string(i));
    if (!t.beats(i, j))
        throw Error("NoSuchArc", std::to_string(i) + " -> " + std::to_string(j) +
                                     " is not an arc");
    Tournament r = t;
    r.rows[i] &= ~(uint32_t{1} << j);
    r.rows[j] |= uint32_t{1} << i;
    return r;
}

Tournament relabel(const Tournament& t, const std::vector<int>& perm) {
    Tournament r;
    r.n = t.n;
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j)
            if (i != j && t.beats(i, j))
                r.rows[perm[i]] |= uint32_t{1} << perm[j];
    return r;
}

UpperTriangleCode encode(const Tournament& t) {
    UpperTriangleCode c;
    c.n = t.n;
    int k = 0;
    for (int i = 0; i < t.n; ++i)
        for (int j = i + 1; j < t.n; ++j, ++k)
            if (t.beats(i, j)) c.set_bit(k);
    return c;
}

Tournament decode(const UpperTriangleCode& code) {
    check_order(code.n);
    Tournament t;
    t.n = code.n;
    int k = 0;
    for (int i = 0; i < code.n; ++i)
        for (int j = i + 1; j < code.n; ++j, ++k) {
            if (code.bit(k))
                t.rows[i] |= uint32_t{1} << j;
            else
                t.rows[j] |= uint32_t{1} << i;
        }
    return t;
}

std::string UpperTriangleCode::str() const {
    const int m = pair_count(n);
    const int digits = std::max(1, (m + 3) / 4);
    std::string hex(digits, '0');
    for (int d = 0; d < digits; ++d) {
        int nibble = 0;
        for (int b = 0; b < 4; ++b) {
            const int k = 4 * d + b;
            if (k < m && bit(k)) nibble |= 1 << b;
        }
        hex[digits - 1 - d] = "0123456789abcdef"[nibble];
    }
    return "T" + std::to_string(n) + ":" + hex;
}

UpperTriangleCode parse_code(const std::string& s) {
    const auto colon = s.find(':');
    if (s.empty() || s[0] != 'T' || colon == std::string::npos)
        throw Error("BadLength", "expected \"T<n>:<hex>\", got \"" + s + "\"");
    int n = 0;
    try {
        size_t pos = 0;
        n = std::stoi(s.substr(1, colon - 1), &pos);
        if (pos != colon - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw Error("BadLength", "unparseable order in \"" + s + "\"");
    }
    check_order(n);
    const int m = pair_count(n);
    const int digits = std::max(1, (m + 3) / 4);
    const std::string hex = s.substr(colon + 1);
    if (static_cast<int>(hex.size()) != digits)
        throw Error("BadLength", "expected " + std::to_string(digits) +
                                     " hex digits, got " + std::to_string(hex.size()));
    UpperTriangleCode c;
    c.n = n;
    for (int d = 0; d < digits; ++d) {
        const char ch = static_cast<char>(
            std::tolower(static_cast<unsigned char>(hex[digits - 1 - d])));
        const auto pos = std::string_view("0123456789abcdef").find(ch);
        if (pos == std::string_view::npos)
            throw Error("BadHex", std::string("bad hex digit '") + hex[digits - 1 - d] + "'");
        for (int b = 0; b < 4; ++b)
            if (pos & (1u << b)) {
                const int k = 4 * d + b;
                if (k >= m) throw Error("BadHex", "set bit past the triangle length");
                c.set_bit(k);
            }
    }
    return c;
}

Tournament decode(const std::string& s) { return decode(parse_code(s)); }

}  // namespace tourney
