#include "tourney/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <unordered_set>

namespace tourney {

bool lex_less_bits(uint64_t a, uint64_t b) {
    const uint64_t diff = a ^ b;
    if (!diff) return false;
    return ((a >> std::countr_zero(diff)) & 1) == 0;
}

namespace {

// DFS over vertex orderings, one position per level. An ordered partition
// (cells) of the unplaced vertices pins the positions each vertex may still
// take; placing a vertex splits every cell into its in-neighbors followed by
// its out-neighbors, which is forced for row-major lex minimality. The bits
// of row p are therefore fully determined at depth p, so partial codes can
// be compared against the best complete code and losing branches cut early.
struct Canonicalizer {
    const Tournament& t;
    int n;
    int m;
    uint64_t best = ~uint64_t{0};
    bool have_best = false;

    explicit Canonicalizer(const Tournament& tt) : t(tt), n(tt.n), m(pair_count(tt.n)) {}

    uint64_t run() {
        if (n == 1) return 0;
        std::vector<int> cell(n);
        for (int i = 0; i < n; ++i) cell[i] = i;
        dfs({std::move(cell)}, 0, 0);
        return best;
    }

    void dfs(std::vector<std::vector<int>> cells, uint64_t partial, int bitpos) {
        const std::vector<int> first = cells[0];
        for (int v : first) {
            std::vector<std::vector<int>> next;
            next.reserve(cells.size() + 1);
            uint64_t row = 0;
            int len = 0;
            for (size_t c = 0; c < cells.size(); ++c) {
                std::vector<int> losers, winners;  // against v
                for (int w : cells[c]) {
                    if (w == v) continue;
                    (t.beats(v, w) ? winners : losers).push_back(w);
                }
                len += static_cast<int>(losers.size());
                for (size_t i = 0; i < winners.size(); ++i, ++len)
                    row |= uint64_t{1} << len;
                if (!losers.empty()) next.push_back(std::move(losers));
                if (!winners.empty()) next.push_back(std::move(winners));
            }
            const uint64_t candidate = partial | (row << bitpos);
            const int next_pos = bitpos + len;
            if (have_best) {
                const uint64_t mask =
                    next_pos >= 64 ? ~uint64_t{0} : (uint64_t{1} << next_pos) - 1;
                const uint64_t diff = (candidate ^ best) & mask;
                if (diff && ((candidate >> std::countr_zero(diff)) & 1)) continue;
            }
            if (next.empty()) {
                if (!have_best || lex_less_bits(candidate, best)) {
                    best = candidate;
                    have_best = true;
                }
            } else {
                dfs(std::move(next), candidate, next_pos);
            }
        }
    }
};

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("TOURNEYLAB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

uint64_t canonical_bits(const Tournament& t) {
    if (t.n > kMaxCanonicalOrder)
        throw Error("OrderTooLarge", "canonical codes limited to n <= " +
                                         std::to_string(kMaxCanonicalOrder));
    return Canonicalizer(t).run();
}

UpperTriangleCode CanonicalCode::code() const {
    UpperTriangleCode c;
    c.n = n;
    c.words[0] = bits;
    return c;
}

CanonicalCode canonical_code(const Tournament& t) {
    return CanonicalCode{t.n, canonical_bits(t)};
}

Tournament from_bits(int n, uint64_t bits) {
    UpperTriangleCode c;
    c.n = n;
    c.words[0] = bits;
    return decode(c);
}

bool are_isomorphic(const Tournament& a, const Tournament& b) {
    if (a.n != b.n) return false;
    if (score_vector(a).sorted != score_vector(b).sorted) return false;
    return canonical_bits(a) == canonical_bits(b);
}

std::vector<Tournament> enumerate_iso_classes(int n, int threads) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw Error("OrderTooLarge", "enumeration limited to 1 <= n <= " +
                                         std::to_string(kMaxEnumerationOrder));
    std::vector<Tournament> reps = {Tournament{}};  // the order-1 tournament
    for (int m = 2; m <= n; ++m) {
        const uint32_t patterns = uint32_t{1} << (m - 1);
        const int nthreads =
            std::min<int>(resolve_threads(threads), static_cast<int>(reps.size()) + 1);
        std::unordered_set<uint64_t> codes;
        std::mutex merge_mutex;
        std::atomic<size_t> cursor{0};
        auto worker = [&] {
            std::unordered_set<uint64_t> local;
            for (size_t idx; (idx = cursor.fetch_add(1)) < reps.size();) {
                const Tournament& parent = reps[idx];
                for (uint32_t pat = 0; pat < patterns; ++pat) {
                    Tournament child = parent;
                    child.n = m;
                    child.rows[m - 1] = pat;
                    const uint32_t in = ~pat & (patterns - 1);
                    for (int j = 0; j < m - 1; ++j)
                        if (in & (uint32_t{1} << j)) child.rows[j] |= uint32_t{1} << (m - 1);
                    local.insert(canonical_bits(child));
                }
            }
            const std::scoped_lock lock(merge_mutex);
            codes.merge(local);
        };
        std::vector<std::thread> pool;
        for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();

        std::vector<uint64_t> sorted(codes.begin(), codes.end());
        std::sort(sorted.begin(), sorted.end(), lex_less_bits);
        reps.clear();
        reps.reserve(sorted.size());
        for (uint64_t bits : sorted) reps.push_back(from_bits(m, bits));
    }
    return reps;
}

const std::vector<Tournament>& iso_classes(int n, int threads) {
    static std::mutex cache_mutex;
    static std::map<int, std::unique_ptr<std::vector<Tournament>>> cache;
    const std::scoped_lock lock(cache_mutex);
    auto& slot = cache[n];
    if (!slot)
        slot = std::make_unique<std::vector<Tournament>>(enumerate_iso_classes(n, threads));
    return *slot;
}

}  // namespace tourney
