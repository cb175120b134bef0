#include "tourney/structure.hpp"

#include <algorithm>
#include <bit>

#include "tourney/cycles.hpp"
#include "tourney/linalg.hpp"

namespace tourney {

std::vector<size_t> SccDecomposition::sizes() const {
    std::vector<size_t> out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(c.size());
    return out;
}

// Iterative Tarjan over the bit rows. Components are then sorted into
// dominance order (all cross arcs point from earlier to later components).
SccDecomposition scc(const Tournament& t) {
    const int n = t.n;
    std::vector<int> index(n, -1), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int next_index = 0;

    struct Frame {
        int v;
        uint32_t pending;  // unvisited out-neighbors
    };
    std::vector<Frame> call;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.push_back({root, t.rows[root]});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.pending) {
                const int w = std::countr_zero(f.pending);
                f.pending &= f.pending - 1;
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, t.rows[w]});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
                continue;
            }
            const int v = f.v;
            call.pop_back();
            if (!call.empty())
                lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
            if (lowlink[v] == index[v]) {
                std::vector<int> comp;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
        }
    }

    // In a tournament the condensation is a total order, so any pair of
    // representatives decides which component dominates.
    std::sort(comps.begin(), comps.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                  return t.beats(a[0], b[0]);
              });
    return SccDecomposition{std::move(comps)};
}

bool is_strong(const Tournament& t) { return scc(t).count() == 1; }

bool is_transitive(const Tournament& t) { return c3_direct(t) == 0; }

bool is_regular(const Tournament& t) {
    const auto s = score_vector(t);
    return s.sorted.front() == s.sorted.back();
}

bool is_almost_regular(const Tournament& t) {
    if (t.n % 2 != 0) return false;
    const auto s = score_vector(t);
    return s.sorted.back() - s.sorted.front() <= 1;
}

bool is_upset(const Tournament& t) {
    if (t.n < 3) throw Error("OrderOutOfRange", "upsets need order >= 3");
    return is_strong(t) && c3_direct(t) == t.n - 2;
}

std::string to_string(MaximizerTag tag) {
    switch (tag) {
        case MaximizerTag::TrivialSink: return "TrivialSink";
        case MaximizerTag::TrivialSource: return "TrivialSource";
        case MaximizerTag::Nontrivial: return "Nontrivial";
    }
    return "?";
}

MaximizerClass classify_singular_maximizer(const Tournament& t, long long max_value) {
    if (!is_singular(t)) throw Error("NotSingular", "determinant is nonzero");
    if (c3_direct(t) != max_value)
        throw Error("NotMaximizer", "C3 != supplied maximum " + std::to_string(max_value));

    const auto d = scc(t);
    size_t singleton = d.count();
    for (size_t i = 0; i < d.count(); ++i)
        if (d.components[i].size() == 1) {
            singleton = i;
            break;
        }
    if (singleton == d.count()) return MaximizerClass{MaximizerTag::Nontrivial, {}};

    // Singleton component: the theorem demands it sits at an end of the
    // condensation with a regular or almost regular base.
    const bool first = singleton == 0;
    const bool last = singleton == d.count() - 1;
    if (!first && !last)
        throw Error("ClassificationInvariantViolation",
                    "singleton component interior to the condensation");
    std::vector<int> rest;
    for (int v = 0; v < t.n; ++v)
        if (v != d.components[singleton][0]) rest.push_back(v);
    Tournament base = subtournament(t, rest);
    if (!is_regular(base) && !is_almost_regular(base))
        throw Error("ClassificationInvariantViolation",
                    "base of a trivial maximizer is neither regular nor almost regular");
    return MaximizerClass{first ? MaximizerTag::TrivialSource : MaximizerTag::TrivialSink,
                          std::move(base)};
}

}  // namespace tourney
