// linalg.hpp -- exact integer determinants and unimodularity checks

#pragma once

#include <set>
#include <string>
#include <vector>

#include "tourney/structure.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

using Int128 = __int128;

std::string to_string(Int128 v);

/// Exact determinant of the 0/1 adjacency matrix via fraction-free
/// (Bareiss) elimination in 128-bit integers. Multiplications are
/// overflow-checked and raise Error("Overflow") rather than wrapping;
/// the 0/1 Hadamard bound keeps every supported order well inside range.
Int128 determinant(const Tournament& t);

bool is_singular(const Tournament& t);

/// Product of component determinants. d must be the SCC decomposition of t;
/// otherwise Error("DecompositionMismatch").
Int128 det_via_scc(const Tournament& t, const SccDecomposition& d);

/// Induced tournament on keep (order-preserving relabeling).
/// Errors: EmptySet.
Tournament subtournament(const Tournament& t, const std::vector<int>& keep);

/// Determinants of all nonempty induced subtournaments. Requires n <= 12.
std::set<long long> subdeterminant_spectrum(const Tournament& t);

}  // namespace tourney
