// tournament.hpp -- bit-packed tournament representation and basic constructions

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tourney {

/// Largest supported order; one adjacency row fits a 32-bit word.
inline constexpr int kMaxOrder = 32;

/// Error with a stable machine-readable code ("NotTournament", "BadHex", ...).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// A tournament on n vertices. Row i holds bit j = 1 iff vertex i beats
/// vertex j (arc i -> j). Immutable by convention: every operation returns
/// a fresh value.
struct Tournament {
    int n = 1;
    std::array<uint32_t, kMaxOrder> rows{};

    bool beats(int i, int j) const { return (rows[i] >> j) & 1u; }
    int out_degree(int i) const;

    friend bool operator==(const Tournament& a, const Tournament& b) {
        if (a.n != b.n) return false;
        for (int i = 0; i < a.n; ++i)
            if (a.rows[i] != b.rows[i]) return false;
        return true;
    }
};

/// Out-degrees in vertex order plus the nondecreasing rearrangement.
struct ScoreVector {
    std::vector<int> raw;
    std::vector<int> sorted;

    int order() const { return static_cast<int>(raw.size()); }
};

int pair_count(int n);
/// Index of pair (i,j), i < j, in lexicographic pair order
/// (0,1),(0,2),...,(0,n-1),(1,2),...
int pair_index(int n, int i, int j);

/// Serialized upper triangle: bit k = 1 iff i -> j for the k-th pair (i,j)
/// in lexicographic pair order. Textual form "T<n>:<hex>" where the hex
/// value weights bit k by 2^k, rendered most significant digit first and
/// zero-padded to ceil(n(n-1)/2 / 4) digits (at least one).
struct UpperTriangleCode {
    int n = 1;
    std::array<uint64_t, 8> words{};

    bool bit(int k) const { return (words[k >> 6] >> (k & 63)) & 1u; }
    void set_bit(int k) { words[k >> 6] |= uint64_t{1} << (k & 63); }

    std::string str() const;

    friend bool operator==(const UpperTriangleCode& a, const UpperTriangleCode& b) {
        return a.n == b.n && a.words == b.words;
    }
};

/// Throws Error("NotTournament") unless all invariants hold.
void validate(const Tournament& t);

/// Parse a 0/1 grid, one row per line, optional whitespace between digits.
/// Errors: NonSquare, BadChar, NotTournament.
Tournament from_matrix_text(const std::string& text);
std::string to_matrix_text(const Tournament& t);

ScoreVector score_vector(const Tournament& t);

/// Vertex i beats j iff i > j; scores (0,1,...,n-1).
Tournament construct_transitive(int n);
/// Transitive tournament with the single top -> bottom arc reversed;
/// strongly connected with scores (1,1,2,...,n-3,n-2,n-2). Requires n >= 3.
Tournament construct_upset(int n);
/// Rotational tournament i -> i+k (mod n), k = 1..(n-1)/2. Requires odd n.
Tournament construct_regular(int n);
/// Circulant i -> i+k (mod n), k = 1..n/2-1, plus oriented diameters
/// i -> i+n/2 for i < n/2. Requires even n.
Tournament construct_almost_regular(int n);

/// Append a vertex beaten by all existing vertices (its row is zero).
Tournament add_sink(const Tournament& t);
/// Append a vertex that beats all existing vertices.
Tournament add_source(const Tournament& t);

/// Flip the arc i -> j to j -> i. Errors: SameVertex, NoSuchArc.
Tournament reverse_arc(const Tournament& t, int i, int j);

/// Apply the vertex relabeling perm (perm[old] = new).
Tournament relabel(const Tournament& t, const std::vector<int>& perm);

UpperTriangleCode encode(const Tournament& t);
Tournament decode(const UpperTriangleCode& code);

/// Parse "T<n>:<hex>". Errors: BadLength, BadHex.
UpperTriangleCode parse_code(const std::string& s);
Tournament decode(const std::string& s);

}  // namespace tourney
