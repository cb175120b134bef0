// enumeration.hpp -- canonical codes and generation up to isomorphism

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// Canonical forms are supported up to this order (45 triangle bits,
/// so a code fits one 64-bit word).
inline constexpr int kMaxCanonicalOrder = 10;
/// Generation ceiling: n = 9 has 191,536 classes; n = 10 is rejected.
inline constexpr int kMaxEnumerationOrder = 9;

/// Lexicographic order on upper-triangle bit sequences packed LSB-first
/// (bit k = k-th pair): the first differing pair decides.
bool lex_less_bits(uint64_t a, uint64_t b);

/// Lexicographically smallest upper-triangle bit sequence over all vertex
/// relabelings of t. Requires n <= kMaxCanonicalOrder.
uint64_t canonical_bits(const Tournament& t);

/// Label-invariant encoding of an isomorphism class: equal codes iff
/// isomorphic; canonicalizing a canonical form is the identity.
struct CanonicalCode {
    int n = 1;
    uint64_t bits = 0;

    UpperTriangleCode code() const;
    std::string str() const { return code().str(); }

    friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) {
        return a.n == b.n && a.bits == b.bits;
    }
    friend bool operator<(const CanonicalCode& a, const CanonicalCode& b) {
        return a.n != b.n ? a.n < b.n : lex_less_bits(a.bits, b.bits);
    }
};

CanonicalCode canonical_code(const Tournament& t);

/// Rebuild the tournament whose upper triangle equals bits.
Tournament from_bits(int n, uint64_t bits);

/// Canonical-code equality with a sorted-score fast reject.
bool are_isomorphic(const Tournament& a, const Tournament& b);

/// One canonical representative per isomorphism class of order n, sorted by
/// canonical code. Built by extending each (n-1)-class with a new vertex
/// through all 2^(n-1) beat patterns and deduplicating. threads = 0 picks
/// TOURNEYLAB_THREADS or hardware concurrency.
std::vector<Tournament> enumerate_iso_classes(int n, int threads = 0);

/// Memoized view of enumerate_iso_classes; the cache is shared process-wide.
const std::vector<Tournament>& iso_classes(int n, int threads = 0);

}  // namespace tourney
