// acceptance.cpp -- end-to-end reproduction of the library's headline claims.
// Prints one PASS/FAIL line per criterion; exit status is the failure count.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <vector>

#include "test_util.hpp"
#include "tourney/cycles.hpp"
#include "tourney/enumeration.hpp"
#include "tourney/extremal.hpp"
#include "tourney/fixtures.hpp"
#include "tourney/linalg.hpp"
#include "tourney/structure.hpp"

using namespace tourney;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, const std::function<bool(std::string&)>& fn) {
    const auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
        ok = fn(note);
    } catch (const std::exception& e) {
        note = e.what();
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name;
    if (!note.empty()) std::cout << " -- " << note;
    std::cout << " (" << s << " s)" << std::endl;
    if (!ok) ++failures;
}

bool singleton_component(const Tournament& t) {
    for (const auto& comp : scc(t).components)
        if (comp.size() == 1) return true;
    return false;
}

}  // namespace

int main() {
    criterion(1, "order-7 singular maximizers are the three published matrices", [](std::string& note) {
        const auto r = max_c3_singular(7);
        std::set<uint64_t> found, published;
        for (const auto& w : r.witnesses) found.insert(w.bits);
        int published_singular = 0, published_among_witnesses = 0;
        for (const Tournament& t : fixtures::s7_maximizers()) {
            published.insert(canonical_bits(t));
            if (determinant(t) == 0) ++published_singular;
            if (found.count(canonical_bits(t))) ++published_among_witnesses;
        }
        if (r.value == 8 && r.witness_count == 3 && found == published &&
            published_singular == 3) {
            note = "value 8, 3 classes";
            return true;
        }
        // Diagnose: the measured ground truth disagrees with the stated claim.
        int strong = 0;
        for (const auto& w : r.witnesses)
            if (is_strong(from_bits(w.n, w.bits))) ++strong;
        note = "value " + std::to_string(r.value) + ", " + std::to_string(r.witness_count) +
               " classes (" + std::to_string(strong) + " strong); " +
               std::to_string(published_singular) + "/3 reference matrices singular, " +
               std::to_string(published_among_witnesses) + "/3 among witnesses";
        return false;
    });

    criterion(2, "even-order singular maximum equals C(n,3)/4 for n in {4,6,8}", [](std::string&) {
        const long long expected[] = {1, 5, 14};
        int idx = 0;
        for (int n : {4, 6, 8})
            if (max_c3_singular(n).value != expected[idx++]) return false;
        return true;
    });

    criterion(3, "nonsingular minimum and witness structure for n in 3..8", [](std::string&) {
        const long long expected[] = {1, 2, 3, 2, 3, 4};
        for (int n = 3; n <= 8; ++n) {
            const auto r = min_c3_nonsingular(n);
            if (r.value != expected[n - 3]) return false;
            if (r.witness_count != r.witnesses.size()) return false;
            for (const auto& w : r.witnesses) {
                const Tournament t = from_bits(w.n, w.bits);
                const auto d = scc(t);
                if (d.count() != static_cast<size_t>(n / 3)) return false;
                for (const auto& comp : d.components)
                    if (!is_upset(subtournament(t, comp))) return false;
            }
        }
        return true;
    });

    criterion(4, "minimizer determinants follow n mod 3 and are almost totally unimodular", [](std::string&) {
        for (int n = 3; n <= 8; ++n) {
            const Int128 expected = n % 3 == 1 ? -1 : 1;
            for (const auto& w : min_c3_nonsingular(n).witnesses) {
                const Tournament t = from_bits(w.n, w.bits);
                if (determinant(t) != expected) return false;
                for (long long d : subdeterminant_spectrum(t))
                    if (d < -1 || d > 1) return false;
            }
        }
        return true;
    });

    criterion(5, "score formula equals the direct count (exhaustive n<=6, 1e5 random n<=32)", [](std::string&) {
        for (int n = 1; n <= 6; ++n)
            for (const Tournament& t : testutil::all_labeled(n))
                if (c3_from_scores(score_vector(t)) != c3_direct(t)) return false;
        std::mt19937_64 rng(20260823);
        for (int trial = 0; trial < 100000; ++trial) {
            const int n = 7 + static_cast<int>(rng() % 26);
            const Tournament t = testutil::random_tournament(n, rng);
            if (c3_from_scores(score_vector(t)) != c3_direct(t)) return false;
        }
        return true;
    });

    criterion(6, "arc-reversal delta matches recomputed C3, exhaustive over all arcs n<=5", [](std::string&) {
        for (int n = 2; n <= 5; ++n)
            for (const Tournament& t : testutil::all_labeled(n)) {
                const auto s = score_vector(t);
                const long long base = c3_direct(t);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (i != j && t.beats(i, j) &&
                            c3_direct(reverse_arc(t, i, j)) - base != reversal_delta(s, i, j))
                            return false;
            }
        return true;
    });

    criterion(7, "Moon-bound equality classes are exactly the (almost) regular ones, n in {5,6,7}", [](std::string&) {
        for (int n : {5, 6, 7})
            for (const Tournament& t : iso_classes(n)) {
                const bool at_bound = c3_direct(t) == moon_bound(n);
                const bool shape = n % 2 == 1 ? is_regular(t) : is_almost_regular(t);
                if (at_bound != shape) return false;
            }
        return true;
    });

    criterion(8, "no singular class exceeds C(n,3)/4 for n <= 8", [](std::string&) {
        for (int n = 1; n <= 8; ++n)
            for (const Tournament& t : iso_classes(n))
                if (is_singular(t) && !within_shader_bound(n, c3_direct(t))) return false;
        return true;
    });

    criterion(9, "determinants factor over SCCs; no small components in nonsingular classes", [](std::string&) {
        for (int n = 1; n <= 6; ++n)
            for (const Tournament& t : testutil::all_labeled(n)) {
                const auto d = scc(t);
                if (determinant(t) != det_via_scc(t, d)) return false;
                for (size_t sz : d.sizes()) {
                    if (sz == 2) return false;
                    if (!is_singular(t) && sz < 3) return false;
                }
            }
        return true;
    });

    criterion(10, "strong classes with C3 = n-2 equal the path-reversal closure, n in 3..7", [](std::string&) {
        for (int n = 3; n <= 7; ++n) {
            std::set<CanonicalCode> by_c3;
            for (const Tournament& t : iso_classes(n))
                if (is_strong(t) && c3_direct(t) == n - 2) by_c3.insert(canonical_code(t));
            const auto truth = upset_ground_truth(n);
            if (std::set<CanonicalCode>(truth.begin(), truth.end()) != by_c3) return false;
        }
        return true;
    });

    criterion(11, "order-7 maximizers: singleton SCC <=> trivial; nontrivial <=> strong", [](std::string&) {
        const auto r = max_c3_singular(7);
        for (const auto& w : r.witnesses) {
            const Tournament t = from_bits(w.n, w.bits);
            const auto cls = classify_singular_maximizer(t, r.value);  // throws on violation
            const bool trivial = cls.tag != MaximizerTag::Nontrivial;
            if (trivial != singleton_component(t)) return false;
            if (trivial && !(is_regular(*cls.base) || is_almost_regular(*cls.base)))
                return false;
            if (!trivial != is_strong(t)) return false;
        }
        return true;
    });

    criterion(12, "odd-order singular maxima sit in the published bracket; n=9 value is new data", [](std::string& note) {
        if (max_c3_singular(5).value != 2) return false;
        if (max_c3_singular(7).value != 8) return false;
        const auto r9 = max_c3_singular(9);
        if (r9.value < 2 * binom(5, 3) || 4 * r9.value > binom(9, 3)) return false;
        note = "n=9 max C3 over singular classes = " + std::to_string(r9.value) + " (" +
               std::to_string(r9.witness_count) + " classes; bracket [20, 21])";
        return true;
    });

    criterion(13, "class counts match brute force (n<=7) and repeat at n=8", [](std::string& note) {
        const size_t expected[] = {0, 1, 1, 2, 4, 12, 56, 456};
        for (int n = 1; n <= 7; ++n)
            if (iso_classes(n).size() != expected[n]) return false;
        for (int n = 1; n <= 7; ++n) {
            std::set<uint64_t> brute;
            const int m = pair_count(n);
            for (uint64_t bits = 0; bits < (uint64_t{1} << m); ++bits)
                brute.insert(canonical_bits(from_bits(n, bits)));
            if (brute.size() != expected[n]) return false;
        }
        const auto run1 = enumerate_iso_classes(8);
        const auto run2 = enumerate_iso_classes(8);
        if (run1.size() != 6880 || run2.size() != 6880) return false;
        for (size_t i = 0; i < run1.size(); ++i)
            if (!(run1[i] == run2[i])) return false;
        note = "n=8: 6880 classes, identical across runs";
        return true;
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures;
}
