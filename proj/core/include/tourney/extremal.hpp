// extremal.hpp -- extremal searches over iso classes and theorem verifiers

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tourney/enumeration.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

enum class Objective { MaxC3Singular, MinC3Nonsingular };

std::string to_string(Objective o);

inline constexpr size_t kWitnessCap = 1000;

struct ExtremalResult {
    int n = 0;
    Objective objective = Objective::MaxC3Singular;
    long long value = 0;
    std::vector<CanonicalCode> witnesses;  // first kWitnessCap in code order
    size_t witness_count = 0;              // always the exact total
};

/// Max C3 over singular iso classes of order n (3 <= n <= 9). Checks the
/// published value for even n and the published bracket for odd n.
ExtremalResult max_c3_singular(int n, int threads = 0);

/// Min C3 over nonsingular iso classes of order n (3 <= n <= 9). Checks
/// the value n - 2*floor(n/3) and that every witness splits into
/// floor(n/3) strongly connected components, each an upset tournament.
ExtremalResult min_c3_nonsingular(int n, int threads = 0);

struct VerificationReport {
    std::string claim_id;
    int n_lo = 0;
    int n_hi = 0;
    bool pass = false;
    bool informational = false;  // never affects exit status
    std::vector<std::string> counterexamples;
    std::string detail;
    double elapsed_ms = 0.0;
};

/// Stable identifiers accepted by verify(). "lemma-nonstrong-bound" yields
/// two reports, one per printed reading of the bound.
const std::vector<std::string>& claim_ids();

std::vector<VerificationReport> verify(const std::string& claim_id, int n_lo,
                                       int n_hi, int threads = 0);

/// Ground-truth upset set: reverse every directed top-to-bottom path of the
/// transitive tournament of order n and canonicalize. Independent of the
/// C3-based recognizer.
std::vector<CanonicalCode> upset_ground_truth(int n);

}  // namespace tourney
