// structure.hpp -- strong-connectivity decomposition and recognizers

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// Ordered partition into strongly connected components. Components appear
/// in dominance order: every vertex of components[a] beats every vertex of
/// components[b] whenever a < b. Vertices ascend within each component.
/// No component ever has exactly 2 vertices.
struct SccDecomposition {
    std::vector<std::vector<int>> components;

    size_t count() const { return components.size(); }
    std::vector<size_t> sizes() const;
};

SccDecomposition scc(const Tournament& t);

bool is_strong(const Tournament& t);
bool is_transitive(const Tournament& t);
bool is_regular(const Tournament& t);
bool is_almost_regular(const Tournament& t);

/// Theorem-based recognizer: strongly connected with exactly n-2 3-cycles.
/// Requires n >= 3.
bool is_upset(const Tournament& t);

enum class MaximizerTag { TrivialSink, TrivialSource, Nontrivial };

struct MaximizerClass {
    MaximizerTag tag = MaximizerTag::Nontrivial;
    std::optional<Tournament> base;  // regular/almost-regular order n-1 when trivial
};

std::string to_string(MaximizerTag tag);

/// Classify a singular maximizer of C3: trivial (source or sink over a
/// regular/almost-regular base) iff some strongly connected component is a
/// singleton. max_value is the maximum C3 over singular matrices of the same
/// order, supplied by the caller. Errors: NotSingular, NotMaximizer;
/// ClassificationInvariantViolation when a singleton component fails the
/// structural equivalence.
MaximizerClass classify_singular_maximizer(const Tournament& t, long long max_value);

}  // namespace tourney
